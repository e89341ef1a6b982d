#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mh {

// All coordinate arithmetic is exact: Vieta moves grow coordinates
// multiplicatively, so fixed-width integers overflow after a handful of steps.
using Int = boost::multiprecision::cpp_int;
using Coords = std::vector<Int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong tuple length, bad index, non-canonical tuple where a
// canonical one is required, invalid parameters.
struct StructuralError : Error {
  using Error::Error;
};

// Tuple fails the variety equation for the given parameters.
struct NotOnVarietyError : Error {
  using Error::Error;
};

// Height descent ran out of moves or exceeded its step budget.  Carries the
// offending point and the number of steps taken for diagnostics.
struct ReductionStuckError : Error {
  ReductionStuckError(std::string message, Coords where, std::size_t steps)
      : Error(std::move(message)), point(std::move(where)), steps_taken(steps) {}
  Coords point;
  std::size_t steps_taken = 0;
};

// Parameters (a, k, n) of the variety  x1^2 + ... + xn^2 - a*x1*...*xn = k.
// a = 0 degenerates to a sphere and is rejected; n >= 3 keeps the Vieta moves
// interesting.  Negative a is representable (see negate_a_transform) but the
// reduction and enumeration routines require a > 0.
struct Params {
  Int a;
  Int k;
  int n = 0;

  Params(Int a_, Int k_, int n_) : a(std::move(a_)), k(std::move(k_)), n(n_) {
    if (a == 0) throw StructuralError("parameter a must be nonzero");
    if (n < 3) throw StructuralError("parameter n must be at least 3");
  }

  bool operator==(const Params& o) const = default;
};

// Floor of the square root of v (v >= 0).
Int isqrt(const Int& v);

// The exact square root of v if v is a perfect square, otherwise nullopt.
std::optional<Int> exact_sqrt(const Int& v);

// Decimal-string helpers used by serialization and the CLI; parse rejects
// anything but an optionally signed run of digits.
std::string int_to_string(const Int& v);
Int int_from_string(const std::string& text);

}  // namespace mh
