#include "mh/types.hpp"

#include <cctype>

namespace mh {

Int isqrt(const Int& v) {
  if (v < 0) throw StructuralError("isqrt of negative value");
  return boost::multiprecision::sqrt(v);
}

std::optional<Int> exact_sqrt(const Int& v) {
  if (v < 0) return std::nullopt;
  Int root = boost::multiprecision::sqrt(v);
  if (root * root != v) return std::nullopt;
  return root;
}

std::string int_to_string(const Int& v) { return v.str(); }

Int int_from_string(const std::string& text) {
  std::size_t start = 0;
  if (start < text.size() && (text[start] == '+' || text[start] == '-')) ++start;
  if (start == text.size()) throw StructuralError("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw StructuralError("not an integer: '" + text + "'");
  }
  return Int(text);
}

}  // namespace mh
