#include "mh/enumerate.hpp"

#include <algorithm>
#include <utility>

#include "mh/moves.hpp"
#include "mh/parallel.hpp"

namespace mh {
namespace {

using boost::multiprecision::abs;

void require_positive_a(const Params& params, const char* what) {
  if (params.a <= 0)
    throw StructuralError(std::string(what) +
                          " requires a > 0 (apply negate_a_transform to a < 0 inputs first)");
}

// ---- bounded solution sweep -------------------------------------------------

struct SolutionSweep {
  const Params& params;
  const Int& bound;

  // Extends a signed prefix (first coordinate fixed, magnitudes nondecreasing)
  // until only the last coordinate is open, then closes it exactly.
  void extend(Coords& prefix, const Int& sum_abs, std::vector<Coords>& out) const {
    const int n = params.n;
    if (static_cast<int>(prefix.size()) == n - 1) {
      for (Int& root : solve_last_coordinate(params, prefix)) {
        if (root < prefix.back()) continue;
        if (sum_abs + root > bound) continue;
        Coords full = prefix;
        full.push_back(std::move(root));
        out.push_back(std::move(full));
      }
      return;
    }
    const Int lo = prefix.size() == 1 ? abs(prefix[0]) : prefix.back();
    // Everything still open (this slot, later slots, the closing root) is at
    // least t, which bounds the loop.
    const int open = n - static_cast<int>(prefix.size());
    for (Int t = lo; sum_abs + t * open <= bound; ++t) {
      prefix.push_back(t);
      extend(prefix, sum_abs + t, out);
      prefix.pop_back();
    }
  }
};

// ---- fundamental domain sweeps ----------------------------------------------

struct FdCollector {
  const Params& params;
  std::vector<std::pair<Coords, Stratum>> members;

  void add(Coords coords, Stratum stratum) { members.emplace_back(std::move(coords), stratum); }
};

// S0: (0, t1, ..., t_{n-1}) with 0 <= t1 <= ... and sum of squares k.
void sweep_s0(const Params& params, FdCollector& out) {
  if (params.k < 0) return;
  const int n = params.n;
  Coords tail;
  auto rec = [&](auto&& self, const Int& lo, const Int& remaining) -> void {
    const int left = n - 1 - static_cast<int>(tail.size());
    if (left == 1) {
      if (auto root = exact_sqrt(remaining); root && *root >= lo) {
        Coords coords;
        coords.reserve(n);
        coords.push_back(0);
        coords.insert(coords.end(), tail.begin(), tail.end());
        coords.push_back(*root);
        out.add(std::move(coords), Stratum::S0);
      }
      return;
    }
    for (Int t = lo; t * t * left <= remaining; ++t) {
      tail.push_back(t);
      self(self, t, remaining - t * t);
      tail.pop_back();
    }
  };
  rec(rec, Int(0), params.k);
}

// S1 (a = 1): (-1, 1, ..., 1, u, v) with u^2 + v^2 + uv = k - n + 2.
void sweep_s1(const Params& params, FdCollector& out) {
  if (params.a != 1) return;
  const int n = params.n;
  const Int m = params.k - (n - 2);
  for (Int u = 1; 3 * u * u <= m; ++u) {
    const auto s = exact_sqrt(4 * m - 3 * u * u);
    if (!s) continue;
    if ((*s - u) % 2 != 0) continue;
    const Int v = (*s - u) / 2;
    if (v < u) continue;
    Coords coords(n, Int(1));
    coords[0] = -1;
    coords[n - 2] = u;
    coords[n - 1] = v;
    out.add(std::move(coords), Stratum::S1);
  }
}

// S2, sign-flipped side: tail pair with (u + v)^2 pinned by k.
void sweep_s2_neg(const Params& params, FdCollector& out) {
  const int n = params.n;
  Int pinned;   // required value of (u + v)^2
  Int u_min;
  if (params.a == 1) pinned = params.k - (n + 1), u_min = 2;
  else if (params.a == 2) pinned = params.k - (n - 2), u_min = 1;
  else return;
  const auto s = exact_sqrt(pinned);
  if (!s) return;
  for (Int u = u_min; 2 * u <= *s; ++u) {
    const Int v = *s - u;
    Coords coords(n, Int(1));
    if (params.a == 1) {
      if (n == 3) coords[0] = -2;
      else {
        coords[0] = -1;
        coords[n - 3] = 2;
      }
    } else {
      coords[0] = -1;
    }
    coords[n - 2] = u;
    coords[n - 1] = v;
    out.add(std::move(coords), Stratum::S2Neg);
  }
}

// Deep stratum, one negative coordinate: every |xi| is bounded by sqrt(k)
// because k = sum xi^2 + |a * prod xi|.
void sweep_sgt2_neg(const Params& params, const Int& cap, FdCollector& out, bool& clipped) {
  if (params.k < 1) return;
  const int n = params.n;
  const Int exact_bound = isqrt(params.k);
  const Int bound = std::min(exact_bound, cap);
  if (exact_bound > cap) clipped = true;

  Coords mags;  // magnitudes of the first n-1 coordinates, nondecreasing
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(mags.size()) == n - 1) {
      Int lead = params.a;
      for (int i = 0; i + 1 < n - 1; ++i) lead *= mags[i];
      if (lead <= 2) return;  // needs a * x1 * ... * x_{n-2} < -2 after the sign
      Coords prefix = mags;
      prefix[0] = -prefix[0];
      for (Int& root : solve_last_coordinate(params, prefix)) {
        if (root < mags[n - 2]) continue;
        Coords coords = prefix;
        coords.push_back(std::move(root));
        out.add(std::move(coords), Stratum::Sgt2Neg);
      }
      return;
    }
    const Int lo = mags.empty() ? Int(1) : mags.back();
    for (Int t = lo; t <= bound; ++t) {
      mags.push_back(t);
      self(self);
      mags.pop_back();
    }
  };
  rec(rec);
}

// Deep stratum, all coordinates positive.  For a member, writing P for the
// product and S for the square sum of the first n-2 coordinates and c for the
// largest of them, the plateau and ordering conditions force
//   (a*P - 2) * x_{n-1}^2 <= S - k   with   x_{n-1} >= c,  P >= c,
// hence (a*c - n) * c^2 <= -k or a*c <= n.  Beyond c = n/a the left side grows
// monotonically, so scanning upward until failure yields an absolute bound.
void sweep_sgt2_pos(const Params& params, const Int& cap, FdCollector& out, bool& clipped) {
  const int n = params.n;
  const Int& a = params.a;
  const Int& k = params.k;

  Int bound = 0;
  for (Int c = 1;; ++c) {
    const bool feasible = a * c <= n || (a * c - n) * c * c <= -k;
    if (!feasible) break;
    if (c > cap) {
      clipped = true;
      break;
    }
    bound = c;
  }

  Coords prefix;  // the first n-2 coordinates, nondecreasing, all >= 1
  auto close = [&]() {
    Int product = a;
    Int squares = 0;
    for (const Int& c : prefix) {
      product *= c;
      squares += c * c;
    }
    if (product <= 2) return;
    std::vector<Int> head = prefix;
    head.emplace_back();
    for (Int t = prefix.back(); t * t * (product - 2) <= squares - k; ++t) {
      head.back() = t;
      for (Int& root : solve_last_coordinate(params, head)) {
        if (root < t) continue;
        if (2 * root > product * t) continue;  // above the plateau line
        Coords coords = head;
        coords.push_back(std::move(root));
        out.add(std::move(coords), Stratum::Sgt2Pos);
      }
    }
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(prefix.size()) == n - 2) {
      close();
      return;
    }
    const Int lo = prefix.empty() ? Int(1) : prefix.back();
    for (Int t = lo; t <= bound; ++t) {
      prefix.push_back(t);
      self(self);
      prefix.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

std::vector<Int> solve_last_coordinate(const Params& params, const std::vector<Int>& prefix) {
  if (static_cast<int>(prefix.size()) != params.n - 1)
    throw StructuralError("prefix has " + std::to_string(prefix.size()) +
                          " coordinates, expected " + std::to_string(params.n - 1));
  Int product = params.a;
  Int squares = 0;
  for (const Int& c : prefix) {
    product *= c;
    squares += c * c;
  }
  // Roots of t^2 - product * t + (squares - k).
  const auto sq = exact_sqrt(product * product - 4 * (squares - params.k));
  if (!sq) return {};
  if ((product - *sq) % 2 != 0) return {};
  const Int low = (product - *sq) / 2;
  if (*sq == 0) return {low};
  return {low, (product + *sq) / 2};
}

SolutionSet enumerate_solutions(const Params& params, const Int& height_bound, int workers) {
  require_positive_a(params, "enumerate_solutions");
  if (height_bound < 0) throw StructuralError("height bound must be nonnegative");

  // Tasks are the signed first coordinates; their solution sets are disjoint,
  // so buckets concatenate deterministically before the final sort.
  std::vector<Int> starts;
  for (Int v = 0; v <= height_bound; ++v) {
    starts.push_back(v);
    if (v > 0) starts.push_back(-v);
  }

  std::vector<std::vector<Coords>> buckets(starts.size());
  const SolutionSweep sweep{params, height_bound};
  parallel_for(starts.size(), workers, [&](std::size_t task) {
    Coords prefix{starts[task]};
    sweep.extend(prefix, abs(starts[task]), buckets[task]);
  });

  std::vector<Coords> all;
  for (auto& bucket : buckets)
    for (auto& coords : bucket) all.push_back(std::move(coords));
  std::sort(all.begin(), all.end());

  SolutionSet out{params, height_bound, {}};
  out.points.reserve(all.size());
  for (auto& coords : all) out.points.emplace_back(params, std::move(coords));
  return out;
}

NormalPoint InfiniteFamily::member(const Params& params, const Int& x) const {
  if (params.a != a || params.k != k || params.n != n)
    throw StructuralError("family belongs to different parameters");
  if (x < param_min)
    throw StructuralError("family parameter " + x.str() + " below minimum " + param_min.str());
  Coords coords(n, Int(1));
  if (a == 1) coords[n - 3] = 2;
  coords[n - 2] = x;
  coords[n - 1] = x;
  return NormalPoint(params, std::move(coords));
}

std::string InfiniteFamily::pattern() const {
  std::string out = "(";
  const int ones = (a == 1) ? n - 3 : n - 2;
  for (int i = 0; i < ones; ++i) out += "1,";
  if (a == 1) out += "2,";
  out += "x,x)";
  return out;
}

FdSet enumerate_fd(const Params& params, const Int& cap) {
  require_positive_a(params, "enumerate_fd");
  if (cap < 1) throw StructuralError("cap must be at least 1");
  const int n = params.n;

  FdCollector collector{params, {}};
  bool clipped = false;
  sweep_s0(params, collector);
  sweep_s1(params, collector);
  sweep_s2_neg(params, collector);
  sweep_sgt2_pos(params, cap, collector, clipped);
  sweep_sgt2_neg(params, cap, collector, clipped);

  std::sort(collector.members.begin(), collector.members.end());

  FdSet out{params, cap, {}, {}, {}, clipped};
  out.finite_members.reserve(collector.members.size());
  for (auto& [coords, stratum] : collector.members) {
    NormalPoint point(params, std::move(coords));
    if (stratum_member(params, point) != stratum)
      throw Error("fundamental-domain sweep produced " + format_coords(point.coords()) +
                  " outside its stratum");
    out.finite_members.push_back(FdMember{std::move(point), stratum});
  }

  if (params.a == 1 && params.k == n + 1)
    out.families.push_back(InfiniteFamily{params.a, params.k, n, 2});
  else if (params.a == 2 && params.k == n - 2)
    out.families.push_back(InfiniteFamily{params.a, params.k, n, 1});
  for (const InfiniteFamily& family : out.families)
    for (Int x = family.param_min; x <= cap; ++x)
      out.family_samples.push_back(family.member(params, x));

  return out;
}

}  // namespace mh
