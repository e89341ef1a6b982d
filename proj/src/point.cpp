#include "mh/point.hpp"

#include <sstream>

namespace mh {

using boost::multiprecision::abs;

std::string format_coords(const Coords& x) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ", ";
    out << x[i];
  }
  out << ')';
  return out.str();
}

Int variety_value(const Params& params, const Coords& x) {
  if (static_cast<int>(x.size()) != params.n)
    throw StructuralError("tuple has " + std::to_string(x.size()) + " coordinates, expected " +
                          std::to_string(params.n));
  Int squares = 0;
  Int product = params.a;
  for (const Int& c : x) {
    squares += c * c;
    product *= c;
  }
  return squares - product;
}

bool check_on_variety(const Params& params, const Coords& x) {
  return variety_value(params, x) == params.k;
}

Int height(const Coords& x) {
  Int total = 0;
  for (const Int& c : x) total += abs(c);
  return total;
}

Point::Point(const Params& params, Coords coords) : coords_(std::move(coords)) {
  if (!check_on_variety(params, coords_))
    throw NotOnVarietyError("tuple " + format_coords(coords_) + " is not on the variety: value " +
                            variety_value(params, coords_).str() + " != k = " + params.k.str());
}

bool is_canonical(const Coords& x) {
  if (x.empty()) return false;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] < 0) return false;
    if (abs(x[i - 1]) > x[i]) return false;
  }
  return true;
}

NormalPoint::NormalPoint(const Params& params, Coords coords) : coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != params.n)
    throw StructuralError("tuple has " + std::to_string(coords_.size()) +
                          " coordinates, expected " + std::to_string(params.n));
  if (!is_canonical(coords_))
    throw StructuralError("tuple " + format_coords(coords_) + " is not in canonical position");
  if (!check_on_variety(params, coords_))
    throw NotOnVarietyError("tuple " + format_coords(coords_) + " is not on the variety: value " +
                            variety_value(params, coords_).str() + " != k = " + params.k.str());
}

}  // namespace mh
