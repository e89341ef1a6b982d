#include "mh/stratum.hpp"

namespace mh {
namespace {

// x[from..to) all equal to 1.
bool ones_block(const Coords& x, int from, int to) {
  for (int i = from; i < to; ++i)
    if (x[i] != 1) return false;
  return true;
}

Int product_prefix(const Params& params, const Coords& x, int count) {
  Int product = params.a;
  for (int i = 0; i < count; ++i) product *= x[i];
  return product;
}

bool in_s0(const Params& params, const Coords& x) {
  if (x[0] != 0) return false;
  Int squares = 0;
  for (int i = 1; i < params.n; ++i) squares += x[i] * x[i];
  return squares == params.k;
}

bool in_s1(const Params& params, const Coords& x) {
  const int n = params.n;
  if (params.a != 1) return false;
  if (x[0] != -1 || !ones_block(x, 1, n - 2)) return false;
  const Int &u = x[n - 2], &v = x[n - 1];
  if (u < 1 || v < u) return false;
  return u * u + v * v + u * v == params.k - (n - 2);
}

bool in_s2_pos(const Params& params, const Coords& x) {
  const int n = params.n;
  const Int &u = x[n - 2], &v = x[n - 1];
  if (params.a == 1) {
    // (1, ..., 1, 2, t, t) with t >= 2; for n = 3 the ones block is empty and
    // the leading coordinate itself is the 2.
    if (params.k != n + 1) return false;
    if (!ones_block(x, 0, n - 3) || x[n - 3] != 2) return false;
    return u == v && u >= 2;
  }
  if (params.a == 2) {
    // (1, ..., 1, t, t) with t >= 1.
    if (params.k != n - 2) return false;
    if (!ones_block(x, 0, n - 2)) return false;
    return u == v && u >= 1;
  }
  return false;
}

bool in_s2_neg(const Params& params, const Coords& x) {
  const int n = params.n;
  const Int &u = x[n - 2], &v = x[n - 1];
  if (params.a == 1) {
    // (-1, 1, ..., 1, 2, u, v); the sign and the 2 merge into a leading -2
    // when n = 3.  The tail sum is pinned by (u + v)^2 = k - n - 1.
    if (n == 3) {
      if (x[0] != -2) return false;
    } else {
      if (x[0] != -1 || !ones_block(x, 1, n - 3) || x[n - 3] != 2) return false;
    }
    if (u < 2 || v < u) return false;
    Int sum = u + v;
    return sum * sum == params.k - (n + 1);
  }
  if (params.a == 2) {
    // (-1, 1, ..., 1, u, v) with (u + v)^2 = k - n + 2.
    if (x[0] != -1 || !ones_block(x, 1, n - 2)) return false;
    if (u < 1 || v < u) return false;
    Int sum = u + v;
    return sum * sum == params.k - (n - 2);
  }
  return false;
}

bool in_sgt2_pos(const Params& params, const Coords& x) {
  const int n = params.n;
  if (x[0] <= 0) return false;
  if (product_prefix(params, x, n - 2) <= 2) return false;
  return 2 * x[n - 1] <= product_prefix(params, x, n - 1);
}

bool in_sgt2_neg(const Params& params, const Coords& x) {
  if (x[0] >= 0) return false;
  return product_prefix(params, x, params.n - 2) < -2;
}

}  // namespace

const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::S0: return "S0";
    case Stratum::S1: return "S1";
    case Stratum::S2Pos: return "S2_POS";
    case Stratum::S2Neg: return "S2_NEG";
    case Stratum::Sgt2Pos: return "SGT2_POS";
    case Stratum::Sgt2Neg: return "SGT2_NEG";
    case Stratum::None: return "NONE";
  }
  throw StructuralError("unknown stratum value");
}

Stratum stratum_from_string(const std::string& tag) {
  for (Stratum s : {Stratum::S0, Stratum::S1, Stratum::S2Pos, Stratum::S2Neg, Stratum::Sgt2Pos,
                    Stratum::Sgt2Neg, Stratum::None})
    if (tag == to_string(s)) return s;
  throw StructuralError("unknown stratum tag '" + tag + "'");
}

Stratum stratum_member(const Params& params, const NormalPoint& q) {
  if (params.a <= 0) throw StructuralError("stratum_member requires a > 0");
  const Coords& x = q.coords();
  if (in_s0(params, x)) return Stratum::S0;
  if (in_s1(params, x)) return Stratum::S1;
  if (in_s2_pos(params, x)) return Stratum::S2Pos;
  if (in_s2_neg(params, x)) return Stratum::S2Neg;
  if (in_sgt2_pos(params, x)) return Stratum::Sgt2Pos;
  if (in_sgt2_neg(params, x)) return Stratum::Sgt2Neg;
  return Stratum::None;
}

std::vector<Stratum> matching_strata(const Params& params, const NormalPoint& q) {
  if (params.a <= 0) throw StructuralError("matching_strata requires a > 0");
  const Coords& x = q.coords();
  std::vector<Stratum> out;
  if (in_s0(params, x)) out.push_back(Stratum::S0);
  if (in_s1(params, x)) out.push_back(Stratum::S1);
  if (in_s2_pos(params, x)) out.push_back(Stratum::S2Pos);
  if (in_s2_neg(params, x)) out.push_back(Stratum::S2Neg);
  if (in_sgt2_pos(params, x)) out.push_back(Stratum::Sgt2Pos);
  if (in_sgt2_neg(params, x)) out.push_back(Stratum::Sgt2Neg);
  return out;
}

}  // namespace mh
