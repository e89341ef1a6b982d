#include "mh/reduce.hpp"

namespace mh {
namespace {

using boost::multiprecision::abs;

void require_positive_a(const Params& params, const char* what) {
  if (params.a <= 0)
    throw StructuralError(std::string(what) +
                          " requires a > 0 (apply negate_a_transform to a < 0 inputs first)");
}

}  // namespace

bool is_last_vertex(const Params& params, const NormalPoint& q) {
  require_positive_a(params, "is_last_vertex");
  const Coords& x = q.coords();
  for (int i = 0; i < params.n; ++i) {
    // Height change of the Vieta move in direction i is |new_i| - |x_i|.
    if (abs(vieta_coordinate(params, x, i)) <= abs(x[i])) return false;
  }
  return true;
}

ReductionResult reduce(const Params& params, const Point& p, const ReduceOptions& options) {
  require_positive_a(params, "reduce");

  Normalized current = normalize(params, p);
  MoveWord word = std::move(current.word);
  NormalPoint q = std::move(current.point);
  Int q_height = height(q);

  std::vector<std::pair<NormalPoint, Int>> trace;
  if (options.keep_trace) trace.emplace_back(q, q_height);

  std::size_t steps = 0;
  for (;;) {
    const Stratum stratum = stratum_member(params, q);
    if (stratum != Stratum::None) {
      return ReductionResult{std::move(q), stratum, std::move(word), std::move(trace), steps};
    }

    // Strictly steepest descent; ties between eligible directions resolve to
    // the smallest index because later candidates must win strictly.
    const Coords& x = q.coords();
    int best = -1;
    Int best_height;
    Int best_coordinate;
    for (int i = 0; i < params.n; ++i) {
      const Int replaced = vieta_coordinate(params, x, i);
      const Int candidate_height = q_height - abs(x[i]) + abs(replaced);
      if (candidate_height < q_height && (best < 0 || candidate_height < best_height)) {
        best = i;
        best_height = candidate_height;
        best_coordinate = replaced;
      }
    }

    if (best < 0) {
      throw ReductionStuckError(
          "no stratum contains " + format_coords(x) +
              " and no Vieta move decreases its height (a = " + params.a.str() +
              ", k = " + params.k.str() + ", n = " + std::to_string(params.n) + ")",
          x, steps);
    }
    if (steps >= options.max_steps) {
      throw ReductionStuckError("height descent exceeded " + std::to_string(options.max_steps) +
                                    " steps at " + format_coords(x),
                                x, steps);
    }

    Coords next = x;
    next[best] = std::move(best_coordinate);
    word.push_back(VietaMove{best});
    Normalized renormalized = normalize(params, Point(params, std::move(next)));
    for (Move& m : renormalized.word) word.push_back(std::move(m));
    q = std::move(renormalized.point);
    q_height = std::move(best_height);
    ++steps;
    if (options.keep_trace) trace.emplace_back(q, q_height);
  }
}

bool equivalent(const Params& params, const Point& p, const Point& q) {
  ReduceOptions options;
  options.keep_trace = false;
  return reduce(params, p, options).representative == reduce(params, q, options).representative;
}

std::optional<MoveWord> equivalence_word(const Params& params, const Point& p, const Point& q) {
  if (p == q) return MoveWord{};
  ReduceOptions options;
  options.keep_trace = false;
  ReductionResult rp = reduce(params, p, options);
  ReductionResult rq = reduce(params, q, options);
  if (!(rp.representative == rq.representative)) return std::nullopt;
  MoveWord word = std::move(rp.word);
  MoveWord back = inverse(rq.word);
  word.insert(word.end(), std::make_move_iterator(back.begin()), std::make_move_iterator(back.end()));
  return word;
}

}  // namespace mh
