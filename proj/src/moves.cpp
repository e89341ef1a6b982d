#include "mh/moves.hpp"

#include <algorithm>
#include <numeric>

namespace mh {
namespace {

using boost::multiprecision::abs;

void check_index(const Params& params, int i, const char* what) {
  if (i < 0 || i >= params.n)
    throw StructuralError(std::string(what) + " index " + std::to_string(i) + " out of range for n = " +
                          std::to_string(params.n));
}

bool is_permutation_of_range(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Coords permuted(const Coords& x, const std::vector<int>& sigma) {
  Coords out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[sigma[i]];
  return out;
}

}  // namespace

Int vieta_coordinate(const Params& params, const Coords& x, int i) {
  check_index(params, i, "vieta");
  Int product = params.a;
  for (int j = 0; j < params.n; ++j)
    if (j != i) product *= x[j];
  return product - x[i];
}

Point vieta(const Params& params, const Point& p, int i) {
  Coords out = p.coords();
  out[i] = vieta_coordinate(params, p.coords(), i);
  return Point(params, std::move(out));
}

Point double_sign(const Params& params, const Point& p, int s, int t) {
  check_index(params, s, "double_sign");
  check_index(params, t, "double_sign");
  if (s == t) throw StructuralError("double_sign needs two distinct coordinates");
  Coords out = p.coords();
  out[s] = -out[s];
  out[t] = -out[t];
  return Point(params, std::move(out));
}

Point permute(const Params& params, const Point& p, const std::vector<int>& sigma) {
  if (!is_permutation_of_range(sigma, params.n))
    throw StructuralError("sigma is not a permutation of 0.." + std::to_string(params.n - 1));
  return Point(params, permuted(p.coords(), sigma));
}

Point apply_move(const Params& params, const Point& p, const Move& m) {
  return std::visit(
      [&](const auto& move) -> Point {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, VietaMove>) return vieta(params, p, move.i);
        else if constexpr (std::is_same_v<T, DoubleSignMove>) return double_sign(params, p, move.s, move.t);
        else return permute(params, p, move.sigma);
      },
      m);
}

Point apply_word(const Params& params, const Point& p, const MoveWord& w) {
  Point current = p;
  for (const Move& m : w) current = apply_move(params, current, m);
  return current;
}

Move inverse(const Move& m) {
  if (const auto* perm = std::get_if<PermMove>(&m)) {
    std::vector<int> inv(perm->sigma.size());
    for (std::size_t i = 0; i < perm->sigma.size(); ++i) inv[perm->sigma[i]] = static_cast<int>(i);
    return PermMove{std::move(inv)};
  }
  return m;  // Vieta and double sign changes are involutions
}

MoveWord inverse(const MoveWord& w) {
  MoveWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Normalized normalize(const Params& params, const Point& p) {
  Coords x = p.coords();
  const int n = params.n;
  MoveWord word;

  // Clear signs in pairs; a leftover negative is absorbed by a zero if one
  // exists, and otherwise parked on a coordinate of minimal absolute value so
  // the sorting pass can put it first.
  std::vector<int> negatives;
  for (int i = 0; i < n; ++i)
    if (x[i] < 0) negatives.push_back(i);
  auto flip_pair = [&](int s, int t) {
    if (s > t) std::swap(s, t);
    x[s] = -x[s];
    x[t] = -x[t];
    word.push_back(DoubleSignMove{s, t});
  };
  std::size_t j = 0;
  for (; j + 1 < negatives.size(); j += 2) flip_pair(negatives[j], negatives[j + 1]);
  if (j < negatives.size()) {
    const int lone = negatives[j];
    int zero = -1;
    int smallest = lone;
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0 && zero < 0) zero = i;
      if (abs(x[i]) < abs(x[smallest])) smallest = i;
    }
    if (zero >= 0) flip_pair(lone, zero);
    else if (smallest != lone && abs(x[smallest]) < abs(x[lone])) flip_pair(lone, smallest);
  }

  // One permutation sorts by absolute value; among equal absolute values the
  // surviving negative (if any) goes first, everything else keeps input order.
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::stable_sort(sigma.begin(), sigma.end(), [&](int lhs, int rhs) {
    const Int la = abs(x[lhs]), ra = abs(x[rhs]);
    if (la != ra) return la < ra;
    return (x[lhs] < 0) && (x[rhs] >= 0);
  });
  bool identity = true;
  for (int i = 0; i < n; ++i)
    if (sigma[i] != i) identity = false;
  if (!identity) {
    x = permuted(x, sigma);
    word.push_back(PermMove{std::move(sigma)});
  }

  return Normalized{NormalPoint(params, std::move(x)), std::move(word)};
}

std::pair<Params, Point> negate_a_transform(const Params& params, const Point& p) {
  if (params.a >= 0) throw StructuralError("negate_a_transform requires a < 0");
  Params flipped(-params.a, params.k, params.n);
  Coords out = p.coords();
  out[0] = -out[0];
  return {flipped, Point(flipped, std::move(out))};
}

}  // namespace mh
