#pragma once

#include <string>
#include <vector>

#include "mh/point.hpp"
#include "mh/types.hpp"

namespace mh {

// Strata of the fundamental domain for a > 0.  Canonical points land in at
// most one stratum; None marks points that still admit a descending move.
enum class Stratum {
  S0,       // first coordinate zero, the rest a sorted representation of k
  S1,       // a = 1 only: (-1, 1, ..., 1, x, y) with x^2 + y^2 + xy = k - n + 2
  S2Pos,    // a = 1: (1,...,1,2,x,x), k = n+1;  a = 2: (1,...,1,x,x), k = n-2
  S2Neg,    // sign-flipped companions of S2Pos with (x + y)^2 pinned by k
  Sgt2Pos,  // all-positive tuples below the Vieta plateau: 2*xn <= a*x1*...*x_{n-1}
  Sgt2Neg,  // one negative coordinate and a*x1*...*x_{n-2} < -2
  None,
};

const char* to_string(Stratum s);
Stratum stratum_from_string(const std::string& tag);

// Stratum containing q, or Stratum::None.  Tests run in the fixed order
// S0, S1, S2Pos, S2Neg, Sgt2Pos, Sgt2Neg.  Requires params.a > 0.
Stratum stratum_member(const Params& params, const NormalPoint& q);

// All strata whose defining conditions q satisfies; used to check pairwise
// disjointness.  Agrees with stratum_member on first element when nonempty.
std::vector<Stratum> matching_strata(const Params& params, const NormalPoint& q);

}  // namespace mh
