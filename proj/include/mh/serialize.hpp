#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "mh/enumerate.hpp"
#include "mh/graph.hpp"
#include "mh/moves.hpp"
#include "mh/reduce.hpp"
#include "mh/verify.hpp"

// Stable output contract shared by the CLI and the python bindings.
//
// JSON conventions: every arbitrary-precision integer is a decimal string
// (heights and coordinates outgrow doubles quickly), points are arrays of
// such strings, strata are uppercase tags, and moves are one-key objects
//   {"vieta": i} | {"dsign": [s, t]} | {"perm": [p1, ..., pn]}
// with 1-based indices.  Each *_json emitter has a *_from_json inverse; the
// pair round-trips every command payload.

namespace mh {

using Json = nlohmann::json;

// Outcome of an equivalence query between two points.
struct EquivOutcome {
  Params params;
  Coords p;
  Coords q;
  bool equivalent = false;
  MoveWord word;  // sends p exactly to q; empty for p == q, ignored when inequivalent
};

Json params_json(const Params& params);
Json coords_json(const Coords& x);
Json move_json(const Move& m);
Json word_json(const MoveWord& w);

Json reduction_json(const Params& params, const Coords& input, const ReductionResult& r);
Json solutions_json(const SolutionSet& s);
Json fd_json(const FdSet& f);
Json graph_json(const OrbitGraph& g);
Json orbits_json(const OrbitPartition& p);
Json verify_json(const VerifyReport& r);
Json compat_json(const CompatReport& r, int samples);
Json equiv_json(const EquivOutcome& e);

Params params_from_json(const Json& j);
Coords coords_from_json(const Json& j);
Move move_from_json(const Json& j);
MoveWord word_from_json(const Json& j);
ReductionResult reduction_from_json(const Json& j, Params* params_out = nullptr,
                                    Coords* input_out = nullptr);
SolutionSet solutions_from_json(const Json& j);
FdSet fd_from_json(const Json& j);
OrbitGraph graph_from_json(const Json& j);
OrbitPartition orbits_from_json(const Json& j);
VerifyReport verify_from_json(const Json& j);
CompatReport compat_from_json(const Json& j);
EquivOutcome equiv_from_json(const Json& j);

// CSV with the fixed header "coords,height,stratum"; the coords field is a
// quoted comma-separated tuple.  Orbit output lists representatives only
// (the full partition needs JSON or text).
std::string solutions_csv(const SolutionSet& s);
std::string fd_csv(const FdSet& f);
std::string reduction_csv(const Params& params, const ReductionResult& r);
std::string orbits_csv(const OrbitPartition& p);

// Undirected DOT drawing: vertices labelled with tuple and height and
// coloured by component; one line per unordered vertex pair, labelled with
// every Vieta direction (1-based) realizing the edge; self-images omitted.
std::string graph_dot(const OrbitGraph& g);

// Human-readable renderings, one value per line group.
std::string reduction_text(const Params& params, const Coords& input, const ReductionResult& r);
std::string solutions_text(const SolutionSet& s);
std::string fd_text(const FdSet& f);
std::string graph_text(const OrbitGraph& g);
std::string orbits_text(const OrbitPartition& p);
std::string verify_text(const VerifyReport& r);
std::string compat_text(const CompatReport& r);
std::string equiv_text(const EquivOutcome& e);

}  // namespace mh
