#include <doctest.h>

#include "mh/reduce.hpp"

using namespace mh;

namespace {

Coords C(std::initializer_list<long long> values) {
  Coords out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

ReductionResult run(long long a, long long k, std::initializer_list<long long> coords) {
  const Params params(a, k, static_cast<int>(coords.size()));
  return reduce(params, Point(params, C(coords)));
}

// The structural promises every result must keep, whatever the input.
void check_contract(const Params& params, const Coords& input, const ReductionResult& r) {
  CHECK(apply_word(params, Point(params, input), r.word).coords() == r.representative.coords());
  CHECK(stratum_member(params, r.representative) == r.stratum);
  CHECK(r.stratum != Stratum::None);
  REQUIRE(!r.trace.empty());
  CHECK(r.trace.front().first.coords() == normalize(params, Point(params, input)).point.coords());
  CHECK(r.trace.back().first.coords() == r.representative.coords());
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    CHECK(r.trace[i].second == height(r.trace[i].first));
    if (i > 0) CHECK(r.trace[i].second < r.trace[i - 1].second);
  }
  CHECK(r.trace.size() == r.vieta_steps + 1);
}

}  // namespace

TEST_CASE("one vieta step down the markoff tree") {
  const Params params(1, 0, 3);
  const auto r = run(1, 0, {3, 3, 6});
  CHECK(r.representative.coords() == C({3, 3, 3}));
  CHECK(r.stratum == Stratum::Sgt2Pos);
  CHECK(r.vieta_steps == 1);
  REQUIRE(r.word.size() == 1);  // (3,3,3) needs no renormalization
  CHECK(r.word[0] == Move(VietaMove{2}));
  check_contract(params, C({3, 3, 6}), r);
}

TEST_CASE("two steps with renormalization in between") {
  const Params params(1, 0, 3);
  const auto r = run(1, 0, {3, 6, 15});
  CHECK(r.representative.coords() == C({3, 3, 3}));
  CHECK(r.vieta_steps == 2);
  CHECK(r.trace.size() == 3);
  CHECK(r.trace[0].second == 24);
  CHECK(r.trace[1].first.coords() == C({3, 3, 6}));
  CHECK(r.trace[2].second == 9);
  check_contract(params, C({3, 6, 15}), r);
}

TEST_CASE("normalization alone can finish the job") {
  const Params params(1, 5, 3);
  const auto r = run(1, 5, {0, -2, 1});
  CHECK(r.representative.coords() == C({0, 1, 2}));
  CHECK(r.stratum == Stratum::S0);
  CHECK(r.vieta_steps == 0);
  for (const Move& m : r.word) CHECK_FALSE(std::holds_alternative<VietaMove>(m));
  check_contract(params, C({0, -2, 1}), r);
}

TEST_CASE("members are fixed points") {
  const auto r = run(1, 8, {-1, 1, 2});
  CHECK(r.representative.coords() == C({-1, 1, 2}));
  CHECK(r.stratum == Stratum::S1);
  CHECK(r.word.empty());
  CHECK(r.trace.size() == 1);

  // Plateau boundary: a height-neutral vieta direction exists, membership
  // still has to stop the descent here.
  const auto plateau = run(1, -32, {4, 4, 8});
  CHECK(plateau.representative.coords() == C({4, 4, 8}));
  CHECK(plateau.stratum == Stratum::Sgt2Pos);
  CHECK(plateau.vieta_steps == 0);
}

TEST_CASE("descent can end below the starting sign pattern") {
  const Params params(1, 4, 3);
  const auto r = run(1, 4, {1, 1, 2});
  CHECK(r.representative.coords() == C({-1, 1, 1}));
  CHECK(r.stratum == Stratum::S1);
  CHECK(r.vieta_steps == 1);
  check_contract(params, C({1, 1, 2}), r);

  const auto s = run(1, 29, {2, 4, 9});
  CHECK(s.representative.coords() == C({-1, 2, 4}));
  CHECK(s.stratum == Stratum::S1);
  CHECK(s.vieta_steps == 1);
}

TEST_CASE("is_last_vertex probes strict growth only") {
  auto last = [](long long a, long long k, std::initializer_list<long long> coords) {
    const Params params(a, k, static_cast<int>(coords.size()));
    return is_last_vertex(params, NormalPoint(params, C(coords)));
  };
  CHECK(last(1, 4, {-1, 1, 1}));
  CHECK(last(1, 0, {3, 3, 3}));
  CHECK_FALSE(last(1, 0, {0, 0, 0}));     // vieta fixes the origin
  CHECK_FALSE(last(1, 0, {3, 3, 6}));     // descends
  CHECK_FALSE(last(1, 4, {2, 3, 3}));     // neutral direction on the family
  CHECK_FALSE(last(1, -32, {4, 4, 8}));   // plateau
}

TEST_CASE("equivalence by shared representative") {
  const Params params(1, 0, 3);
  const Point a(params, C({3, 3, 6}));
  const Point b(params, C({3, 6, 15}));
  const Point zero(params, C({0, 0, 0}));
  CHECK(equivalent(params, a, b));
  CHECK(equivalent(params, b, a));
  CHECK_FALSE(equivalent(params, a, zero));
  CHECK_FALSE(equivalent(params, zero, Point(params, C({3, 3, 3}))));

  const auto word = equivalence_word(params, b, a);
  REQUIRE(word.has_value());
  CHECK(apply_word(params, b, *word).coords() == a.coords());

  CHECK(equivalence_word(params, a, a)->empty());
  CHECK_FALSE(equivalence_word(params, zero, a).has_value());
}

TEST_CASE("step budget") {
  const Params params(1, 0, 3);
  const Point p(params, C({3, 6, 15}));
  ReduceOptions opts;
  opts.max_steps = 0;
  try {
    reduce(params, p, opts);
    FAIL("expected ReductionStuckError");
  } catch (const ReductionStuckError& e) {
    CHECK(e.steps_taken == 0);
    CHECK(e.point == C({3, 6, 15}));
  }
  opts.max_steps = 1;
  try {
    reduce(params, p, opts);
    FAIL("expected ReductionStuckError");
  } catch (const ReductionStuckError& e) {
    CHECK(e.steps_taken == 1);
    CHECK(e.point == C({3, 3, 6}));
  }
  opts.max_steps = 2;
  CHECK(reduce(params, p, opts).representative.coords() == C({3, 3, 3}));
}

TEST_CASE("negative a goes through the transform first") {
  const Params params(-1, 0, 3);
  const Point p(params, C({-3, 3, 3}));
  CHECK_THROWS_AS(reduce(params, p), StructuralError);
  CHECK_THROWS_AS(is_last_vertex(Params(-1, 0, 3), NormalPoint(Params(1, 0, 3), C({0, 0, 0}))),
                  StructuralError);

  const auto [pos, image] = negate_a_transform(params, p);
  const auto r = reduce(pos, image);
  CHECK(r.representative.coords() == C({3, 3, 3}));
}

TEST_CASE("trace can be disabled") {
  ReduceOptions opts;
  opts.keep_trace = false;
  const Params params(1, 0, 3);
  const auto r = reduce(params, Point(params, C({3, 6, 15})), opts);
  CHECK(r.trace.empty());
  CHECK(r.vieta_steps == 2);
}
