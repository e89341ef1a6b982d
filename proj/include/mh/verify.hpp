#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mh/graph.hpp"
#include "mh/types.hpp"

namespace mh {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample or summary statistics
};

struct VerifyReport {
  Params params;
  Int height_bound;
  std::size_t solutions = 0;
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

// Brute-force confirmation of the fundamental-domain claims inside a height
// window: every solution reduces without getting stuck; representatives lie
// in exactly one stratum; connected vertices share a representative; bounded
// fundamental-domain members are reduction fixed points and pairwise
// distinct; the component representatives are exactly the bounded
// fundamental-domain members.  Requires params.a > 0.
VerifyReport verify_fundamental_domain(const Params& params, const Int& height_bound,
                                       int workers = 1);

struct CompatReport {
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

// Cross-checks of the classical n = 3, a = 1 picture: the binary-form
// identity 4(x^2 + y^2 + xy) = (2x + y)^2 + 3y^2 on random pairs, the
// square condition behind the sign-flipped doubled-tail stratum, and, for a
// range of k, agreement of enumerate_fd with independently enumerated
// closed-form descriptions of the three small strata.
CompatReport markoff_compat_check(int sample_count, std::uint64_t seed = 0x6d68636f6d706174ULL);

}  // namespace mh
