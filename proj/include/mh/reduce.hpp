#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mh/moves.hpp"
#include "mh/point.hpp"
#include "mh/stratum.hpp"
#include "mh/types.hpp"

namespace mh {

// True iff every Vieta move strictly increases the height of q.
// Plateau neighbours (equal height) make this false even for points that the
// reduction keeps as representatives; stratum membership is what stops the
// descent, not this predicate.
bool is_last_vertex(const Params& params, const NormalPoint& q);

struct ReduceOptions {
  std::size_t max_steps = 1'000'000;  // Vieta steps before giving up
  bool keep_trace = true;
};

struct ReductionResult {
  NormalPoint representative;
  Stratum stratum = Stratum::None;
  // Replaying word on the input point yields representative exactly.
  MoveWord word;
  // Canonical points visited, paired with their heights; strictly decreasing
  // in height, starting at the normalized input and ending at representative.
  std::vector<std::pair<NormalPoint, Int>> trace;
  std::size_t vieta_steps = 0;
};

// Height descent to the canonical fundamental-domain representative of the
// orbit of p.  Normalizes, then repeatedly applies the Vieta move with the
// strictly smallest resulting height (ties of eligible indices broken by the
// smallest index) until the current point lies in a stratum.  Requires
// params.a > 0; callers with a < 0 go through negate_a_transform first.
// Throws ReductionStuckError when no strictly descending move exists outside
// every stratum or the step budget is exhausted.
ReductionResult reduce(const Params& params, const Point& p, const ReduceOptions& options = {});

// True iff p and q reduce to the same representative.
bool equivalent(const Params& params, const Point& p, const Point& q);

// A move word sending p exactly to q when they are equivalent, nullopt
// otherwise.  Equal inputs yield an empty word.
std::optional<MoveWord> equivalence_word(const Params& params, const Point& p, const Point& q);

}  // namespace mh
