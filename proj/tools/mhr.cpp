// mhr: exact reduction, enumeration and orbit inspection for
//   x1^2 + ... + xn^2 - a*x1*...*xn = k
// over the integers.  Every payload is deterministic for fixed flags.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "mh/reduce.hpp"
#include "mh/serialize.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitOffVariety = 3;
constexpr int kExitStuck = 4;

struct Options {
  std::string a = "1";
  std::string k = "0";
  int n = 3;
  std::vector<std::string> points;
  std::string height_max = "20";
  std::string cap = "100";
  std::string format = "json";
  int workers = 1;
  int samples = 1000;
  std::string out;
};

void add_common(CLI::App* cmd, Options& opt, std::initializer_list<const char*> formats) {
  cmd->add_option("--a", opt.a, "coefficient a (nonzero integer)")->required();
  cmd->add_option("--k", opt.k, "level k")->required();
  cmd->add_option("--n", opt.n, "number of variables (>= 3)")->required();
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember(std::vector<std::string>(formats.begin(), formats.end())));
  cmd->add_option("--out", opt.out, "write the payload to this file instead of stdout");
}

mh::Params parse_params(const Options& opt) {
  return mh::Params(mh::int_from_string(opt.a), mh::int_from_string(opt.k), opt.n);
}

mh::Coords parse_point(const std::string& text, int n) {
  mh::Coords coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string field =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    coords.push_back(mh::int_from_string(field));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(coords.size()) != n)
    throw mh::StructuralError("point '" + text + "' has " + std::to_string(coords.size()) +
                              " coordinates, expected " + std::to_string(n));
  return coords;
}

// a < 0 is handled by flipping the sign of a (and of one coordinate of any
// input point); the emitted payload carries the transformed parameters.
mh::Params fold_negative_a(mh::Params params, std::vector<mh::Coords>& points) {
  if (params.a > 0) return params;
  for (mh::Coords& coords : points) {
    auto [flipped, image] = mh::negate_a_transform(params, mh::Point(params, coords));
    coords = image.coords();
  }
  mh::Params flipped(-params.a, params.k, params.n);
  std::cerr << "note: a < 0; using a = " << flipped.a
            << " via x1 -> -x1 (payload reports the transformed parameters)\n";
  return flipped;
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw mh::Error("cannot open output file '" + opt.out + "'");
  file << payload;
}

std::string json_payload(const mh::Json& j) { return j.dump(2) + "\n"; }

int run_reduce(const Options& opt) {
  std::vector<mh::Coords> points{parse_point(opt.points.at(0), opt.n)};
  const mh::Params params = fold_negative_a(parse_params(opt), points);
  const mh::ReductionResult r = mh::reduce(params, mh::Point(params, points[0]));
  if (opt.format == "json") emit(opt, json_payload(mh::reduction_json(params, points[0], r)));
  else if (opt.format == "csv") emit(opt, mh::reduction_csv(params, r));
  else emit(opt, mh::reduction_text(params, points[0], r));
  return 0;
}

int run_solve(const Options& opt) {
  std::vector<mh::Coords> no_points;
  const mh::Params params = fold_negative_a(parse_params(opt), no_points);
  const mh::SolutionSet s =
      mh::enumerate_solutions(params, mh::int_from_string(opt.height_max), opt.workers);
  if (opt.format == "json") emit(opt, json_payload(mh::solutions_json(s)));
  else if (opt.format == "csv") emit(opt, mh::solutions_csv(s));
  else emit(opt, mh::solutions_text(s));
  return 0;
}

int run_fd(const Options& opt) {
  std::vector<mh::Coords> no_points;
  const mh::Params params = fold_negative_a(parse_params(opt), no_points);
  const mh::FdSet fd = mh::enumerate_fd(params, mh::int_from_string(opt.cap));
  if (opt.format == "json") emit(opt, json_payload(mh::fd_json(fd)));
  else if (opt.format == "csv") emit(opt, mh::fd_csv(fd));
  else emit(opt, mh::fd_text(fd));
  return 0;
}

int run_orbits(const Options& opt) {
  std::vector<mh::Coords> no_points;
  const mh::Params params = fold_negative_a(parse_params(opt), no_points);
  const mh::OrbitGraph g =
      mh::orbit_graph(params, mh::int_from_string(opt.height_max), opt.workers);
  const mh::OrbitPartition p = mh::orbit_partition(g);
  if (opt.format == "json") emit(opt, json_payload(mh::orbits_json(p)));
  else if (opt.format == "csv") emit(opt, mh::orbits_csv(p));
  else emit(opt, mh::orbits_text(p));
  return 0;
}

int run_graph(const Options& opt) {
  std::vector<mh::Coords> no_points;
  const mh::Params params = fold_negative_a(parse_params(opt), no_points);
  const mh::OrbitGraph g =
      mh::orbit_graph(params, mh::int_from_string(opt.height_max), opt.workers);
  if (opt.format == "json") emit(opt, json_payload(mh::graph_json(g)));
  else if (opt.format == "dot") emit(opt, mh::graph_dot(g));
  else emit(opt, mh::graph_text(g));
  return 0;
}

int run_verify(const Options& opt) {
  std::vector<mh::Coords> no_points;
  const mh::Params params = fold_negative_a(parse_params(opt), no_points);
  const mh::VerifyReport report =
      mh::verify_fundamental_domain(params, mh::int_from_string(opt.height_max), opt.workers);
  const mh::CompatReport compat = mh::markoff_compat_check(opt.samples);
  if (opt.format == "json") {
    mh::Json combined{{"verify", mh::verify_json(report)},
                      {"compat", mh::compat_json(compat, opt.samples)}};
    emit(opt, json_payload(combined));
  } else {
    emit(opt, mh::verify_text(report) + "classical n=3 cross-checks:\n" + mh::compat_text(compat));
  }
  return report.all_pass && compat.all_pass ? 0 : kExitError;
}

int run_equiv(const Options& opt) {
  std::vector<mh::Coords> points{parse_point(opt.points.at(0), opt.n),
                                 parse_point(opt.points.at(1), opt.n)};
  const mh::Params params = fold_negative_a(parse_params(opt), points);
  const mh::Point p(params, points[0]);
  const mh::Point q(params, points[1]);
  const auto word = mh::equivalence_word(params, p, q);
  mh::EquivOutcome outcome{params, points[0], points[1], word.has_value(),
                           word.value_or(mh::MoveWord{})};
  if (opt.format == "json") emit(opt, json_payload(mh::equiv_json(outcome)));
  else emit(opt, mh::equiv_text(outcome));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for the n-variable markoff-hurwitz equation"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* reduce = app.add_subcommand("reduce", "height-reduce a point to its representative");
  add_common(reduce, opt, {"json", "csv", "text"});
  reduce->add_option("--point", opt.points, "comma-separated coordinates")->required();

  CLI::App* solve = app.add_subcommand("solve", "enumerate canonical solutions up to a height");
  add_common(solve, opt, {"json", "csv", "text"});
  solve->add_option("--height-max", opt.height_max, "height bound")->required();
  solve->add_option("--workers", opt.workers, "worker threads");

  CLI::App* fd = app.add_subcommand("fd", "enumerate the fundamental domain");
  add_common(fd, opt, {"json", "csv", "text"});
  fd->add_option("--cap", opt.cap, "sweep cap and family sample bound");

  CLI::App* orbits = app.add_subcommand("orbits", "partition bounded solutions into orbits");
  add_common(orbits, opt, {"json", "csv", "text"});
  orbits->add_option("--height-max", opt.height_max, "height bound")->required();
  orbits->add_option("--workers", opt.workers, "worker threads");

  CLI::App* graph = app.add_subcommand("graph", "export the bounded orbit graph");
  add_common(graph, opt, {"json", "dot", "text"});
  graph->add_option("--height-max", opt.height_max, "height bound")->required();
  graph->add_option("--workers", opt.workers, "worker threads");

  CLI::App* verify = app.add_subcommand("verify", "run the fundamental-domain checks");
  add_common(verify, opt, {"json", "text"});
  verify->add_option("--height-max", opt.height_max, "height bound")->required();
  verify->add_option("--workers", opt.workers, "worker threads");
  verify->add_option("--samples", opt.samples, "randomized cases for the cross-checks");

  CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence of two points");
  add_common(equiv, opt, {"json", "text"});
  equiv->add_option("--point", opt.points, "comma-separated coordinates (give twice)")
      ->required()
      ->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  const auto start = std::chrono::steady_clock::now();
  int exit_code = kExitError;
  try {
    if (reduce->parsed()) exit_code = run_reduce(opt);
    else if (solve->parsed()) exit_code = run_solve(opt);
    else if (fd->parsed()) exit_code = run_fd(opt);
    else if (orbits->parsed()) exit_code = run_orbits(opt);
    else if (graph->parsed()) exit_code = run_graph(opt);
    else if (verify->parsed()) exit_code = run_verify(opt);
    else if (equiv->parsed()) exit_code = run_equiv(opt);
  } catch (const mh::NotOnVarietyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOffVariety;
  } catch (const mh::ReductionStuckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStuck;
  } catch (const mh::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  if (const char* log = std::getenv("MH_LOG"); log && *log) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "mhr: done in " << ms << " ms\n";
  }
  return exit_code;
}
