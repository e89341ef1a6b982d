#include "mh/serialize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mh {
namespace {

Json int_json(const Int& v) { return int_to_string(v); }

Int int_field(const Json& j) {
  if (!j.is_string()) throw StructuralError("expected decimal string, got " + j.dump());
  return int_from_string(j.get<std::string>());
}

Json stratum_json(Stratum s) { return to_string(s); }

Stratum stratum_field(const Json& j) { return stratum_from_string(j.get<std::string>()); }

Json point_entry(const Params& params, const NormalPoint& q) {
  return Json{{"coords", coords_json(q.coords())},
              {"height", int_json(height(q))},
              {"stratum", stratum_json(stratum_member(params, q))}};
}

// CSV needs quoting only for the tuple column; coordinates are bare digits.
std::string csv_coords(const Coords& x) {
  std::string out = "\"";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += int_to_string(x[i]);
  }
  out += '"';
  return out;
}

std::string csv_row(const Params& params, const NormalPoint& q) {
  return csv_coords(q.coords()) + "," + int_to_string(height(q)) + "," +
         to_string(stratum_member(params, q)) + "\n";
}

constexpr const char* kCsvHeader = "coords,height,stratum\n";

// Fixed palette cycled by component id for the DOT rendering.
constexpr const char* kDotColors[] = {"lightskyblue", "palegreen",  "lightsalmon",
                                      "plum",         "khaki",      "lightpink",
                                      "aquamarine",   "wheat",      "lavender",
                                      "honeydew"};

}  // namespace

Json params_json(const Params& params) {
  return Json{{"a", int_json(params.a)}, {"k", int_json(params.k)}, {"n", params.n}};
}

Params params_from_json(const Json& j) {
  return Params(int_field(j.at("a")), int_field(j.at("k")), j.at("n").get<int>());
}

Json coords_json(const Coords& x) {
  Json out = Json::array();
  for (const Int& c : x) out.push_back(int_json(c));
  return out;
}

Coords coords_from_json(const Json& j) {
  if (!j.is_array()) throw StructuralError("expected coordinate array, got " + j.dump());
  Coords out;
  out.reserve(j.size());
  for (const Json& c : j) out.push_back(int_field(c));
  return out;
}

Json move_json(const Move& m) {
  return std::visit(
      [](const auto& move) -> Json {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, VietaMove>) {
          return Json{{"vieta", move.i + 1}};
        } else if constexpr (std::is_same_v<T, DoubleSignMove>) {
          return Json{{"dsign", Json::array({move.s + 1, move.t + 1})}};
        } else {
          Json sigma = Json::array();
          for (int v : move.sigma) sigma.push_back(v + 1);
          return Json{{"perm", sigma}};
        }
      },
      m);
}

Move move_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw StructuralError("malformed move " + j.dump());
  if (j.contains("vieta")) return VietaMove{j.at("vieta").get<int>() - 1};
  if (j.contains("dsign")) {
    const Json& pair = j.at("dsign");
    if (!pair.is_array() || pair.size() != 2) throw StructuralError("malformed move " + j.dump());
    return DoubleSignMove{pair[0].get<int>() - 1, pair[1].get<int>() - 1};
  }
  if (j.contains("perm")) {
    std::vector<int> sigma;
    for (const Json& v : j.at("perm")) sigma.push_back(v.get<int>() - 1);
    return PermMove{std::move(sigma)};
  }
  throw StructuralError("malformed move " + j.dump());
}

Json word_json(const MoveWord& w) {
  Json out = Json::array();
  for (const Move& m : w) out.push_back(move_json(m));
  return out;
}

MoveWord word_from_json(const Json& j) {
  MoveWord out;
  for (const Json& m : j) out.push_back(move_from_json(m));
  return out;
}

Json reduction_json(const Params& params, const Coords& input, const ReductionResult& r) {
  Json trace = Json::array();
  for (const auto& [point, h] : r.trace)
    trace.push_back(Json{{"coords", coords_json(point.coords())}, {"height", int_json(h)}});
  return Json{{"params", params_json(params)},
              {"input", coords_json(input)},
              {"representative", coords_json(r.representative.coords())},
              {"stratum", stratum_json(r.stratum)},
              {"height", int_json(height(r.representative))},
              {"word", word_json(r.word)},
              {"vieta_steps", r.vieta_steps},
              {"trace", trace}};
}

ReductionResult reduction_from_json(const Json& j, Params* params_out, Coords* input_out) {
  const Params params = params_from_json(j.at("params"));
  if (params_out) *params_out = params;
  if (input_out) *input_out = coords_from_json(j.at("input"));
  ReductionResult out{NormalPoint(params, coords_from_json(j.at("representative"))),
                      stratum_field(j.at("stratum")),
                      word_from_json(j.at("word")),
                      {},
                      j.at("vieta_steps").get<std::size_t>()};
  for (const Json& step : j.at("trace"))
    out.trace.emplace_back(NormalPoint(params, coords_from_json(step.at("coords"))),
                           int_field(step.at("height")));
  return out;
}

Json solutions_json(const SolutionSet& s) {
  Json points = Json::array();
  for (const NormalPoint& q : s.points) points.push_back(point_entry(s.params, q));
  return Json{{"params", params_json(s.params)},
              {"height_bound", int_json(s.height_bound)},
              {"count", s.points.size()},
              {"points", points}};
}

SolutionSet solutions_from_json(const Json& j) {
  SolutionSet out{params_from_json(j.at("params")), int_field(j.at("height_bound")), {}};
  for (const Json& entry : j.at("points"))
    out.points.emplace_back(out.params, coords_from_json(entry.at("coords")));
  return out;
}

Json fd_json(const FdSet& f) {
  Json members = Json::array();
  for (const FdMember& m : f.finite_members) members.push_back(point_entry(f.params, m.point));
  Json families = Json::array();
  for (const InfiniteFamily& family : f.families)
    families.push_back(Json{{"pattern", family.pattern()},
                            {"param_min", int_json(family.param_min)},
                            {"a", int_json(family.a)},
                            {"k", int_json(family.k)},
                            {"n", family.n}});
  Json samples = Json::array();
  for (const NormalPoint& q : f.family_samples) samples.push_back(coords_json(q.coords()));
  return Json{{"params", params_json(f.params)},
              {"cap", int_json(f.cap)},
              {"finite_members", members},
              {"families", families},
              {"family_samples", samples},
              {"clipped", f.clipped}};
}

FdSet fd_from_json(const Json& j) {
  FdSet out{params_from_json(j.at("params")), int_field(j.at("cap")), {}, {}, {},
            j.at("clipped").get<bool>()};
  for (const Json& entry : j.at("finite_members"))
    out.finite_members.push_back(FdMember{
        NormalPoint(out.params, coords_from_json(entry.at("coords"))),
        stratum_from_string(entry.at("stratum").get<std::string>())});
  for (const Json& entry : j.at("families"))
    out.families.push_back(InfiniteFamily{int_field(entry.at("a")), int_field(entry.at("k")),
                                          entry.at("n").get<int>(), int_field(entry.at("param_min"))});
  for (const Json& entry : j.at("family_samples"))
    out.family_samples.emplace_back(out.params, coords_from_json(entry));
  return out;
}

Json graph_json(const OrbitGraph& g) {
  Json vertices = Json::array();
  for (const NormalPoint& q : g.vertices)
    vertices.push_back(Json{{"coords", coords_json(q.coords())}, {"height", int_json(height(q))}});
  Json adjacency = Json::array();
  for (const auto& row : g.adjacency) {
    Json line = Json::array();
    for (int target : row) {
      if (target == OrbitGraph::kFrontier) line.push_back(nullptr);
      else line.push_back(target);
    }
    adjacency.push_back(line);
  }
  return Json{{"params", params_json(g.params)},
              {"height_bound", int_json(g.height_bound)},
              {"vertices", vertices},
              {"adjacency", adjacency},
              {"component", g.component},
              {"component_rep", g.component_rep},
              {"frontier_edges", g.frontier_edges}};
}

OrbitGraph graph_from_json(const Json& j) {
  OrbitGraph out{params_from_json(j.at("params")), int_field(j.at("height_bound")),
                 {}, {}, {}, {}, j.at("frontier_edges").get<std::size_t>()};
  for (const Json& entry : j.at("vertices"))
    out.vertices.emplace_back(out.params, coords_from_json(entry.at("coords")));
  for (const Json& row : j.at("adjacency")) {
    std::vector<int> line;
    for (const Json& target : row)
      line.push_back(target.is_null() ? OrbitGraph::kFrontier : target.get<int>());
    out.adjacency.push_back(std::move(line));
  }
  out.component = j.at("component").get<std::vector<int>>();
  out.component_rep = j.at("component_rep").get<std::vector<int>>();
  return out;
}

Json orbits_json(const OrbitPartition& p) {
  Json components = Json::array();
  for (const auto& component : p.components) {
    Json members = Json::array();
    for (const NormalPoint& q : component.members) members.push_back(coords_json(q.coords()));
    components.push_back(Json{{"representative", coords_json(component.representative.coords())},
                              {"stratum", stratum_json(component.stratum)},
                              {"members", members}});
  }
  return Json{{"params", params_json(p.params)},
              {"height_bound", int_json(p.height_bound)},
              {"component_count", p.components.size()},
              {"components", components},
              {"frontier_edges", p.frontier_edges}};
}

OrbitPartition orbits_from_json(const Json& j) {
  OrbitPartition out{params_from_json(j.at("params")), int_field(j.at("height_bound")),
                     j.at("frontier_edges").get<std::size_t>(), {}};
  for (const Json& entry : j.at("components")) {
    OrbitPartition::Component component{
        NormalPoint(out.params, coords_from_json(entry.at("representative"))),
        stratum_field(entry.at("stratum")),
        {}};
    for (const Json& member : entry.at("members"))
      component.members.emplace_back(out.params, coords_from_json(member));
    out.components.push_back(std::move(component));
  }
  return out;
}

Json verify_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"params", params_json(r.params)},
              {"height_bound", int_json(r.height_bound)},
              {"solutions", r.solutions},
              {"checks", checks},
              {"all_pass", r.all_pass}};
}

VerifyReport verify_from_json(const Json& j) {
  VerifyReport out{params_from_json(j.at("params")), int_field(j.at("height_bound")),
                   j.at("solutions").get<std::size_t>(), {}, j.at("all_pass").get<bool>()};
  for (const Json& c : j.at("checks"))
    out.checks.push_back(CheckResult{c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                                     c.at("detail").get<std::string>()});
  return out;
}

Json compat_json(const CompatReport& r, int samples) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"samples", samples}, {"checks", checks}, {"all_pass", r.all_pass}};
}

CompatReport compat_from_json(const Json& j) {
  CompatReport out;
  for (const Json& c : j.at("checks"))
    out.checks.push_back(CheckResult{c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                                     c.at("detail").get<std::string>()});
  out.all_pass = j.at("all_pass").get<bool>();
  return out;
}

Json equiv_json(const EquivOutcome& e) {
  Json out{{"params", params_json(e.params)},
           {"points", Json::array({coords_json(e.p), coords_json(e.q)})},
           {"equivalent", e.equivalent}};
  out["word"] = e.equivalent ? word_json(e.word) : Json(nullptr);
  return out;
}

EquivOutcome equiv_from_json(const Json& j) {
  EquivOutcome out{params_from_json(j.at("params")), coords_from_json(j.at("points")[0]),
                   coords_from_json(j.at("points")[1]), j.at("equivalent").get<bool>(), {}};
  if (!j.at("word").is_null()) out.word = word_from_json(j.at("word"));
  return out;
}

// ---- CSV --------------------------------------------------------------------

std::string solutions_csv(const SolutionSet& s) {
  std::string out = kCsvHeader;
  for (const NormalPoint& q : s.points) out += csv_row(s.params, q);
  return out;
}

std::string fd_csv(const FdSet& f) {
  std::string out = kCsvHeader;
  for (const FdMember& m : f.finite_members) out += csv_row(f.params, m.point);
  for (const NormalPoint& q : f.family_samples) out += csv_row(f.params, q);
  return out;
}

std::string reduction_csv(const Params& params, const ReductionResult& r) {
  return std::string(kCsvHeader) + csv_row(params, r.representative);
}

std::string orbits_csv(const OrbitPartition& p) {
  std::string out = kCsvHeader;
  for (const auto& component : p.components) out += csv_row(p.params, component.representative);
  return out;
}

// ---- DOT --------------------------------------------------------------------

std::string graph_dot(const OrbitGraph& g) {
  std::ostringstream out;
  out << "graph orbits {\n";
  out << "  // a = " << g.params.a << ", k = " << g.params.k << ", n = " << g.params.n
      << ", height <= " << g.height_bound << "\n";
  out << "  node [style=filled];\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const char* color = kDotColors[g.component[v] % (sizeof(kDotColors) / sizeof(*kDotColors))];
    out << "  v" << v << " [label=\"" << format_coords(g.vertices[v].coords())
        << "  h=" << height(g.vertices[v]) << "\", fillcolor=" << color << "];\n";
  }
  // One drawn line per unordered vertex pair; the label collects every Vieta
  // direction (1-based) realizing the adjacency from either endpoint.
  std::map<std::pair<int, int>, std::set<int>> lines;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (int i = 0; i < g.params.n; ++i) {
      const int target = g.adjacency[v][i];
      if (target < 0 || target == static_cast<int>(v)) continue;  // frontier or self-image
      const int lo = std::min(static_cast<int>(v), target);
      const int hi = std::max(static_cast<int>(v), target);
      lines[{lo, hi}].insert(i + 1);
    }
  }
  for (const auto& [pair, directions] : lines) {
    out << "  v" << pair.first << " -- v" << pair.second << " [label=\"";
    bool first = true;
    for (int i : directions) {
      if (!first) out << ',';
      out << i;
      first = false;
    }
    out << "\"];\n";
  }
  if (g.frontier_edges > 0)
    out << "  // " << g.frontier_edges << " Vieta images leave the height window\n";
  out << "}\n";
  return out.str();
}

// ---- text -------------------------------------------------------------------

namespace {

std::string params_line(const Params& params) {
  std::ostringstream out;
  out << "a = " << params.a << ", k = " << params.k << ", n = " << params.n;
  return out.str();
}

}  // namespace

std::string reduction_text(const Params& params, const Coords& input, const ReductionResult& r) {
  std::ostringstream out;
  out << params_line(params) << "\n";
  out << "input:          " << format_coords(input) << "\n";
  out << "representative: " << format_coords(r.representative.coords()) << "\n";
  out << "stratum:        " << to_string(r.stratum) << "\n";
  out << "height:         " << height(r.representative) << "\n";
  out << "vieta steps:    " << r.vieta_steps << " (word length " << r.word.size() << ")\n";
  if (!r.trace.empty()) {
    out << "descent:        ";
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      if (i) out << " -> ";
      out << format_coords(r.trace[i].first.coords());
    }
    out << "\n";
  }
  return out.str();
}

std::string solutions_text(const SolutionSet& s) {
  std::ostringstream out;
  out << params_line(s.params) << ", height <= " << s.height_bound << "\n";
  out << s.points.size() << " solutions\n";
  for (const NormalPoint& q : s.points)
    out << "  " << format_coords(q.coords()) << "  h=" << height(q) << "  "
        << to_string(stratum_member(s.params, q)) << "\n";
  return out.str();
}

std::string fd_text(const FdSet& f) {
  std::ostringstream out;
  out << params_line(f.params) << ", cap " << f.cap << "\n";
  out << f.finite_members.size() << " finite members";
  if (f.clipped) out << " (sweep clipped by cap; raise --cap for completeness)";
  out << "\n";
  for (const FdMember& m : f.finite_members)
    out << "  " << format_coords(m.point.coords()) << "  h=" << height(m.point) << "  "
        << to_string(m.stratum) << "\n";
  for (const InfiniteFamily& family : f.families)
    out << "infinite family " << family.pattern() << ", x >= " << family.param_min << " ("
        << f.family_samples.size() << " sampled members up to cap)\n";
  return out.str();
}

std::string graph_text(const OrbitGraph& g) {
  std::ostringstream out;
  out << params_line(g.params) << ", height <= " << g.height_bound << "\n";
  out << g.vertices.size() << " vertices, " << g.component_count() << " components, "
      << g.frontier_edges << " frontier images\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out << "  [" << g.component[v] << "] " << format_coords(g.vertices[v].coords()) << " ->";
    for (int i = 0; i < g.params.n; ++i) {
      const int target = g.adjacency[v][i];
      out << " v" << (i + 1) << ":";
      if (target == OrbitGraph::kFrontier) out << "frontier";
      else out << format_coords(g.vertices[target].coords());
    }
    out << "\n";
  }
  return out.str();
}

std::string orbits_text(const OrbitPartition& p) {
  std::ostringstream out;
  out << params_line(p.params) << ", height <= " << p.height_bound << "\n";
  out << p.components.size() << " components, " << p.frontier_edges << " frontier images\n";
  for (const auto& component : p.components) {
    out << "  representative " << format_coords(component.representative.coords()) << " ["
        << to_string(component.stratum) << "], " << component.members.size() << " members:";
    for (const NormalPoint& q : component.members) out << " " << format_coords(q.coords());
    out << "\n";
  }
  return out.str();
}

std::string verify_text(const VerifyReport& r) {
  std::ostringstream out;
  out << params_line(r.params) << ", height <= " << r.height_bound << ", " << r.solutions
      << " solutions\n";
  for (const CheckResult& c : r.checks)
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
  out << (r.all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.str();
}

std::string compat_text(const CompatReport& r) {
  std::ostringstream out;
  for (const CheckResult& c : r.checks)
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
  out << (r.all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.str();
}

std::string equiv_text(const EquivOutcome& e) {
  std::ostringstream out;
  out << params_line(e.params) << "\n";
  out << format_coords(e.p) << " and " << format_coords(e.q) << ": "
      << (e.equivalent ? "equivalent" : "not equivalent") << "\n";
  if (e.equivalent) out << "word length " << e.word.size() << "\n";
  return out.str();
}

}  // namespace mh
