#pragma once

#include <vector>

#include "mh/point.hpp"
#include "mh/stratum.hpp"
#include "mh/types.hpp"

namespace mh {

// Integer solutions xn of the variety equation given the first n-1
// coordinates: roots of  xn^2 - (a * prod prefix) * xn + (sum prefix^2 - k).
// Returns 0, 1, or 2 values, ascending.
std::vector<Int> solve_last_coordinate(const Params& params, const std::vector<Int>& prefix);

struct SolutionSet {
  Params params;
  Int height_bound;
  std::vector<NormalPoint> points;  // canonical, lexicographically sorted
};

// All canonical solutions with height at most height_bound, exhaustively:
// prefixes of nondecreasing absolute values (sign only ever on the first
// coordinate) are closed with solve_last_coordinate.  Requires params.a > 0.
// workers > 1 splits the prefix sweep across threads; output is identical.
SolutionSet enumerate_solutions(const Params& params, const Int& height_bound, int workers = 1);

// One of the two infinite fundamental-domain families.  Members share the
// fixed block of the pattern and grow in the doubled tail coordinate.
struct InfiniteFamily {
  Int a;       // 1 -> (1,...,1,2,x,x) with k = n+1;  2 -> (1,...,1,x,x) with k = n-2
  Int k;
  int n = 0;
  Int param_min;  // smallest admissible x

  NormalPoint member(const Params& params, const Int& x) const;
  std::string pattern() const;
};

struct FdMember {
  NormalPoint point;
  Stratum stratum = Stratum::None;
};

struct FdSet {
  Params params;
  Int cap;
  std::vector<FdMember> finite_members;       // lexicographically sorted
  std::vector<InfiniteFamily> families;       // empty unless k = n+1 (a=1) or k = n-2 (a=2)
  std::vector<NormalPoint> family_samples;    // family members with parameter <= cap
  // True when a sweep was cut off by cap before its bound was exhausted, so
  // finite_members may be incomplete.  The stratum bounds are effective for
  // every stratum, so this stays false for any cap past those bounds.
  bool clipped = false;
};

// Direct enumeration of the fundamental domain, stratum by stratum, without
// touching the orbit structure.  cap clamps the sweeps that the equation
// bounds only through derived inequalities and limits family sampling.
// Requires params.a > 0 and cap >= 1.
FdSet enumerate_fd(const Params& params, const Int& cap);

}  // namespace mh
