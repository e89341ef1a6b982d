#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "mh/point.hpp"
#include "mh/types.hpp"

namespace mh {

// Generators of the symmetry group acting on solutions.  Indices are 0-based
// inside the library; serialization shifts them to 1-based for output.
struct VietaMove {
  int i = 0;  // coordinate replaced by the conjugate root
  bool operator==(const VietaMove&) const = default;
};

struct DoubleSignMove {
  int s = 0, t = 0;  // s < t, both coordinates negated
  bool operator==(const DoubleSignMove&) const = default;
};

struct PermMove {
  std::vector<int> sigma;  // result[i] = x[sigma[i]]
  bool operator==(const PermMove&) const = default;
};

using Move = std::variant<VietaMove, DoubleSignMove, PermMove>;
using MoveWord = std::vector<Move>;

// The i-th coordinate of the Vieta image: a * prod_{j != i} x[j] - x[i].
// Exposed separately so height probes can avoid building whole tuples.
Int vieta_coordinate(const Params& params, const Coords& x, int i);

// Vieta involution in direction i: replaces x[i] by the other root of the
// variety equation read as a quadratic in x[i].
Point vieta(const Params& params, const Point& p, int i);

// Negates coordinates s and t (s != t).
Point double_sign(const Params& params, const Point& p, int s, int t);

// Coordinate permutation: result[i] = x[sigma[i]]; sigma must be a
// permutation of {0, ..., n-1}.
Point permute(const Params& params, const Point& p, const std::vector<int>& sigma);

Point apply_move(const Params& params, const Point& p, const Move& m);
Point apply_word(const Params& params, const Point& p, const MoveWord& w);

// Every generator is an involution except permutations, which invert to the
// inverse permutation.  inverse(word) reverses and inverts move by move.
Move inverse(const Move& m);
MoveWord inverse(const MoveWord& w);

// Canonicalization: sorts by absolute value and pushes signs around with
// double sign changes.  The returned word consists of sign and permutation
// moves only and replays to the canonical coordinates exactly.
struct Normalized {
  NormalPoint point;
  MoveWord word;
};
Normalized normalize(const Params& params, const Point& p);

// Solutions for a < 0 map to solutions for -a > 0 by negating one
// coordinate.  Requires params.a < 0.
std::pair<Params, Point> negate_a_transform(const Params& params, const Point& p);

}  // namespace mh
