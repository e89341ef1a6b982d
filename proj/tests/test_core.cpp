#include <doctest.h>

#include "mh/moves.hpp"
#include "mh/point.hpp"

using namespace mh;

namespace {

Coords C(std::initializer_list<long long> values) {
  Coords out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("params validation") {
  CHECK_NOTHROW(Params(1, 0, 3));
  CHECK_NOTHROW(Params(-2, 7, 4));
  CHECK_THROWS_AS(Params(0, 5, 3), StructuralError);
  CHECK_THROWS_AS(Params(1, 0, 2), StructuralError);
}

TEST_CASE("variety evaluation") {
  const Params markoff(1, 0, 3);
  CHECK(variety_value(markoff, C({3, 3, 3})) == 0);
  CHECK(check_on_variety(markoff, C({3, 3, 3})));
  CHECK(check_on_variety(markoff, C({0, 0, 0})));
  CHECK_FALSE(check_on_variety(markoff, C({1, 1, 1})));  // value 2
  CHECK(variety_value(Params(4, 0, 4), C({1, 1, 1, 1})) == 0);  // hurwitz case
  CHECK(variety_value(Params(2, 0, 3), C({1, 2, 3})) == 2);  // 14 - 12
  CHECK_THROWS_AS(variety_value(markoff, C({1, 2})), StructuralError);
}

TEST_CASE("height") {
  CHECK(height(C({3, 3, 6})) == 12);
  CHECK(height(C({-3, 3, 3})) == 9);
  CHECK(height(C({0, 0, 0})) == 0);
}

TEST_CASE("point construction validates") {
  const Params markoff(1, 0, 3);
  CHECK_NOTHROW(Point(markoff, C({3, 3, 6})));
  CHECK_THROWS_AS(Point(markoff, C({1, 1, 1})), NotOnVarietyError);
  CHECK_THROWS_AS(Point(markoff, C({3, 3})), StructuralError);
}

TEST_CASE("canonical shape") {
  CHECK(is_canonical(C({0, 1, 2})));
  CHECK(is_canonical(C({-1, 1, 1})));
  CHECK(is_canonical(C({-2, 2, 3})));  // tie keeps the sign in front
  CHECK_FALSE(is_canonical(C({2, -2, 3})));
  CHECK_FALSE(is_canonical(C({1, 0, 2})));
  CHECK_FALSE(is_canonical(C({3, 3, 1})));

  const Params markoff(1, 0, 3);
  CHECK_NOTHROW(NormalPoint(markoff, C({3, 3, 3})));
  CHECK_THROWS_AS(NormalPoint(markoff, C({3, 3, 1})), StructuralError);  // wrong order, off variety
  CHECK_THROWS_AS(NormalPoint(markoff, C({6, 3, 3})), StructuralError);
  CHECK_THROWS_AS(NormalPoint(Params(1, 3, 3), C({0, 1, 1})), NotOnVarietyError);  // canonical, value 2
}

TEST_CASE("vieta move") {
  const Params markoff(1, 0, 3);
  const Point p(markoff, C({3, 3, 3}));
  CHECK(vieta(markoff, p, 2).coords() == C({3, 3, 6}));
  CHECK(vieta(markoff, vieta(markoff, p, 2), 2) == p);  // involution
  CHECK(vieta_coordinate(markoff, C({3, 3, 3}), 0) == 6);
  CHECK_THROWS_AS(vieta(markoff, p, 3), StructuralError);

  // A zero elsewhere collapses the product: the move just negates.
  const Params p5(1, 5, 3);
  const Point z(p5, C({0, 2, 1}));
  CHECK(vieta(p5, z, 1).coords() == C({0, -2, 1}));
}

TEST_CASE("double sign change") {
  const Params p5(1, 5, 3);
  const Point p(p5, C({0, 2, 1}));
  CHECK(double_sign(p5, p, 0, 1).coords() == C({0, -2, 1}));  // -0 stays 0
  CHECK(double_sign(p5, double_sign(p5, p, 1, 2), 1, 2) == p);
  CHECK_THROWS_AS(double_sign(p5, p, 1, 1), StructuralError);
}

TEST_CASE("permutation move") {
  const Params p8(1, 8, 3);  // 1 + 4 + 9 - 6
  const Point p(p8, C({1, 2, 3}));
  // One-line notation (2,3,1) shifted to 0-based [1,2,0].
  CHECK(permute(p8, p, {1, 2, 0}).coords() == C({2, 3, 1}));
  CHECK_THROWS_AS(permute(p8, p, {0, 0, 2}), StructuralError);
  CHECK_THROWS_AS(permute(p8, p, {0, 1}), StructuralError);
}

TEST_CASE("words compose and invert") {
  const Params markoff(1, 0, 3);
  const Point p(markoff, C({3, 3, 3}));
  const MoveWord word{VietaMove{2}, PermMove{{2, 0, 1}}, DoubleSignMove{0, 1}};
  const Point q = apply_word(markoff, p, word);
  CHECK(q.coords() == C({-6, -3, 3}));
  CHECK(apply_word(markoff, q, inverse(word)) == p);
}

TEST_CASE("normalize canonicalizes and its word replays") {
  const Params p5(1, 5, 3);
  SUBCASE("sign absorbed by zero, then sorted") {
    const Point p(p5, C({0, -2, 1}));
    const Normalized norm = normalize(p5, p);
    CHECK(norm.point.coords() == C({0, 1, 2}));
    CHECK(apply_word(p5, p, norm.word).coords() == norm.point.coords());
    for (const Move& m : norm.word) CHECK_FALSE(std::holds_alternative<VietaMove>(m));
  }
  SUBCASE("odd signs without zero keep one negative in front") {
    const Params p54(1, 54, 3);
    const Point p(p54, C({3, -3, 3}));
    const Normalized norm = normalize(p54, p);
    CHECK(norm.point.coords() == C({-3, 3, 3}));
    CHECK(apply_word(p54, p, norm.word).coords() == norm.point.coords());
  }
  SUBCASE("lone sign moves to the smallest magnitude") {
    const Params pk(1, variety_value(Params(1, 0, 3), C({2, 3, -5})), 3);
    const Point p(pk, C({2, 3, -5}));
    const Normalized norm = normalize(pk, p);
    CHECK(norm.point.coords() == C({-2, 3, 5}));
    CHECK(apply_word(pk, p, norm.word).coords() == norm.point.coords());
  }
  SUBCASE("already canonical yields the empty word") {
    const Params p4(1, 4, 3);
    const Normalized norm = normalize(p4, Point(p4, C({-1, 1, 1})));
    CHECK(norm.word.empty());
    CHECK(norm.point.coords() == C({-1, 1, 1}));
  }
}

TEST_CASE("negate_a_transform") {
  const Params neg(-1, 54, 3);
  const Point p(neg, C({3, 3, 3}));
  const auto [flipped, q] = negate_a_transform(neg, p);
  CHECK(flipped.a == 1);
  CHECK(flipped.k == 54);
  CHECK(q.coords() == C({-3, 3, 3}));
  CHECK_THROWS_AS(negate_a_transform(flipped, q), StructuralError);
}
