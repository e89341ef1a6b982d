#include <pybind11/pybind11.h>

#include <cstddef>
#include <string>
#include <vector>

#include "mh/enumerate.hpp"
#include "mh/graph.hpp"
#include "mh/moves.hpp"
#include "mh/point.hpp"
#include "mh/reduce.hpp"
#include "mh/serialize.hpp"
#include "mh/stratum.hpp"
#include "mh/types.hpp"
#include "mh/verify.hpp"

namespace py = pybind11;

namespace {

// Coordinates cross the boundary as python ints (arbitrary precision on both
// sides), structured results as the same dicts the CLI writes to disk, with
// bigints rendered as decimal strings.

// The int bridge goes through hex, not decimal: CPython's
// int_max_str_digits guard rejects decimal conversions past a few thousand
// digits, and orbit points blow through that quickly.
mh::Int to_int(py::handle v) {
  if (!py::isinstance<py::int_>(v))
    throw py::type_error("expected int, got " +
                         py::str(py::type::of(v)).cast<std::string>());
  PyObject* hex = PyNumber_ToBase(v.ptr(), 16);
  if (hex == nullptr) throw py::error_already_set();
  return mh::Int(py::reinterpret_steal<py::str>(hex).cast<std::string>());
}

py::object from_int(const mh::Int& v) {
  const bool negative = v < 0;
  const std::string hex =
      (negative ? "-" : "") + mh::Int(abs(v)).str(0, std::ios_base::hex);
  PyObject* raw = PyLong_FromString(hex.c_str(), nullptr, 16);
  if (raw == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(raw);
}

mh::Coords to_coords(py::handle seq) {
  mh::Coords x;
  for (py::handle item : py::iter(seq)) x.push_back(to_int(item));
  return x;
}

py::list from_coords(const mh::Coords& x) {
  py::list out;
  for (const mh::Int& v : x) out.append(from_int(v));
  return out;
}

mh::Params to_params(py::handle a, py::handle k, int n) {
  return mh::Params(to_int(a), to_int(k), n);
}

py::object from_json(const mh::Json& j) {
  switch (j.type()) {
    case mh::Json::value_t::object: {
      py::dict d;
      for (const auto& [key, value] : j.items()) d[py::str(key)] = from_json(value);
      return d;
    }
    case mh::Json::value_t::array: {
      py::list l;
      for (const mh::Json& item : j) l.append(from_json(item));
      return l;
    }
    case mh::Json::value_t::string:
      return py::str(j.get<std::string>());
    case mh::Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case mh::Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case mh::Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case mh::Json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

// Inverse of from_json for the move-word values fed back into apply_word.
// Words only carry small indices, so int64 is plenty.
mh::Json to_json(py::handle obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    mh::Json out = mh::Json::object();
    for (auto item : obj.cast<py::dict>())
      out[item.first.cast<std::string>()] = to_json(item.second);
    return out;
  }
  mh::Json out = mh::Json::array();
  for (py::handle item : py::iter(obj)) out.push_back(to_json(item));
  return out;
}

mh::Point make_point(const mh::Params& params, py::handle point) {
  return mh::Point(params, to_coords(point));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact arithmetic for the n-variable markoff-hurwitz equation "
            "x1^2 + ... + xn^2 - a*x1*...*xn = k";

  // Translators run newest-first, so the base class goes in before the
  // derived ones and python sees the same hierarchy as C++.
  auto err = py::register_exception<mh::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<mh::StructuralError>(m, "StructuralError", err.ptr());
  py::register_exception<mh::NotOnVarietyError>(m, "NotOnVarietyError", err.ptr());
  py::register_exception<mh::ReductionStuckError>(m, "ReductionStuckError", err.ptr());

  m.def(
      "variety_value",
      [](py::object a, py::object k, int n, py::object point) {
        return from_int(mh::variety_value(to_params(a, k, n), to_coords(point)));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"),
      "Value of x1^2 + ... + xn^2 - a*x1*...*xn at point (0 iff a solution).");

  m.def(
      "on_variety",
      [](py::object a, py::object k, int n, py::object point) {
        return mh::check_on_variety(to_params(a, k, n), to_coords(point));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"));

  m.def(
      "height", [](py::object point) { return from_int(mh::height(to_coords(point))); },
      py::arg("point"), "Sum of |xi|.");

  m.def(
      "is_canonical", [](py::object point) { return mh::is_canonical(to_coords(point)); },
      py::arg("point"),
      "True iff sorted by absolute value with every coordinate after the first >= 0.");

  // Move primitives.  Coordinate indices are 1-based here, matching the
  // serialized words in result dicts; the C++ core is 0-based internally.
  m.def(
      "vieta",
      [](py::object a, py::object k, int n, py::object point, int i) {
        const mh::Params params = to_params(a, k, n);
        return from_coords(mh::vieta(params, make_point(params, point), i - 1).coords());
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"), py::arg("i"),
      "Vieta involution in direction i (1-based): xi -> a*prod_{j!=i} xj - xi.");

  m.def(
      "double_sign",
      [](py::object a, py::object k, int n, py::object point, int s, int t) {
        const mh::Params params = to_params(a, k, n);
        return from_coords(mh::double_sign(params, make_point(params, point), s - 1, t - 1).coords());
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"), py::arg("s"), py::arg("t"),
      "Negates coordinates s and t (1-based, s != t).");

  m.def(
      "permute",
      [](py::object a, py::object k, int n, py::object point, py::object sigma) {
        const mh::Params params = to_params(a, k, n);
        std::vector<int> shifted;
        for (py::handle item : py::iter(sigma))
          shifted.push_back(static_cast<int>(item.cast<long long>()) - 1);
        return from_coords(mh::permute(params, make_point(params, point), shifted).coords());
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"), py::arg("sigma"),
      "Coordinate permutation, 1-based: result[i] = point[sigma[i]].");

  m.def(
      "normalize",
      [](py::object a, py::object k, int n, py::object point) {
        const mh::Params params = to_params(a, k, n);
        const mh::Normalized norm = mh::normalize(params, make_point(params, point));
        return py::make_tuple(from_coords(norm.point.coords()),
                              from_json(mh::word_json(norm.word)));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"),
      "Canonical position of point plus the sign/permutation word that reaches it.");

  m.def(
      "apply_word",
      [](py::object a, py::object k, int n, py::object point, py::object word) {
        const mh::Params params = to_params(a, k, n);
        const mh::MoveWord w = mh::word_from_json(to_json(word));
        return from_coords(mh::apply_word(params, make_point(params, point), w).coords());
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"), py::arg("word"),
      "Replays a serialized move word ([{\"vieta\": i}, {\"dsign\": [s, t]}, "
      "{\"perm\": [...]}], 1-based) on point.");

  m.def(
      "negate_a",
      [](py::object a, py::object k, int n, py::object point) {
        const mh::Params params = to_params(a, k, n);
        const auto [folded, q] = mh::negate_a_transform(params, make_point(params, point));
        return py::make_tuple(from_int(folded.a), from_coords(q.coords()));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"),
      "Maps a solution for a < 0 to one for -a > 0 by negating the first "
      "coordinate; returns (-a, point').  k and n are unchanged.");

  m.def(
      "stratum",
      [](py::object a, py::object k, int n, py::object point) {
        const mh::Params params = to_params(a, k, n);
        const mh::NormalPoint q(params, to_coords(point));
        return std::string(mh::to_string(mh::stratum_member(params, q)));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"),
      "Stratum tag of a canonical point: S0, S1, S2_POS, S2_NEG, SGT2_POS, "
      "SGT2_NEG, or NONE.");

  m.def(
      "is_last_vertex",
      [](py::object a, py::object k, int n, py::object point) {
        const mh::Params params = to_params(a, k, n);
        return mh::is_last_vertex(params, mh::NormalPoint(params, to_coords(point)));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"),
      "True iff every Vieta move strictly increases the height.");

  m.def(
      "reduce",
      [](py::object a, py::object k, int n, py::object point, std::size_t max_steps,
         bool keep_trace) {
        const mh::Params params = to_params(a, k, n);
        const mh::Coords input = to_coords(point);
        const mh::ReductionResult r =
            mh::reduce(params, mh::Point(params, input), {max_steps, keep_trace});
        return from_json(mh::reduction_json(params, input, r));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("point"),
      py::arg("max_steps") = 1'000'000, py::arg("keep_trace") = true,
      "Height descent to the canonical fundamental-domain representative; "
      "requires a > 0 (fold a < 0 through negate_a first).");

  m.def(
      "solve",
      [](py::object a, py::object k, int n, py::object height_max, int workers) {
        return from_json(mh::solutions_json(
            mh::enumerate_solutions(to_params(a, k, n), to_int(height_max), workers)));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("height_max"), py::arg("workers") = 1,
      "All canonical solutions with height <= height_max, sorted.");

  m.def(
      "fundamental_domain",
      [](py::object a, py::object k, int n, py::object cap) {
        return from_json(mh::fd_json(mh::enumerate_fd(to_params(a, k, n), to_int(cap))));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("cap") = 100,
      "Finite fundamental-domain members plus the infinite families; cap "
      "bounds the coordinate sweep and sets clipped when it bites.");

  m.def(
      "graph",
      [](py::object a, py::object k, int n, py::object height_max, int workers) {
        return from_json(
            mh::graph_json(mh::orbit_graph(to_params(a, k, n), to_int(height_max), workers)));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("height_max"), py::arg("workers") = 1,
      "Vieta adjacency between canonical solutions below the height bound; "
      "null entries point outside the window.");

  m.def(
      "orbits",
      [](py::object a, py::object k, int n, py::object height_max, int workers) {
        return from_json(mh::orbits_json(mh::orbit_partition(
            mh::orbit_graph(to_params(a, k, n), to_int(height_max), workers))));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("height_max"), py::arg("workers") = 1,
      "Connected components of the orbit graph keyed by their reduced "
      "representatives.");

  m.def(
      "verify",
      [](py::object a, py::object k, int n, py::object height_max, int workers, int samples) {
        const mh::Params params = to_params(a, k, n);
        const mh::VerifyReport report =
            mh::verify_fundamental_domain(params, to_int(height_max), workers);
        const mh::CompatReport compat = mh::markoff_compat_check(samples);
        return from_json(mh::Json{{"verify", mh::verify_json(report)},
                                  {"compat", mh::compat_json(compat, samples)}});
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("height_max"), py::arg("workers") = 1,
      py::arg("samples") = 1000,
      "Brute-force fundamental-domain checks below the height bound plus the "
      "classical n = 3 cross-checks.");

  m.def(
      "equivalent",
      [](py::object a, py::object k, int n, py::object p, py::object q) {
        const mh::Params params = to_params(a, k, n);
        return mh::equivalent(params, make_point(params, p), make_point(params, q));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("p"), py::arg("q"),
      "True iff p and q reduce to the same representative.");

  m.def(
      "equivalence_word",
      [](py::object a, py::object k, int n, py::object p, py::object q) -> py::object {
        const mh::Params params = to_params(a, k, n);
        const auto word =
            mh::equivalence_word(params, make_point(params, p), make_point(params, q));
        if (!word) return py::none();
        return from_json(mh::word_json(*word));
      },
      py::arg("a"), py::arg("k"), py::arg("n"), py::arg("p"), py::arg("q"),
      "A move word sending p exactly to q, or None when they are not "
      "equivalent; feed it back through apply_word.");
}
