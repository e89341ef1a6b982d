#include "mh/verify.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "mh/moves.hpp"
#include "mh/parallel.hpp"
#include "mh/reduce.hpp"

namespace mh {
namespace {

std::string count_detail(std::size_t count, const char* what) {
  std::ostringstream out;
  out << "checked " << count << ' ' << what;
  return out.str();
}

}  // namespace

VerifyReport verify_fundamental_domain(const Params& params, const Int& height_bound, int workers) {
  VerifyReport report{params, height_bound, 0, {}, false};

  OrbitGraph graph{params, height_bound, {}, {}, {}, {}, 0};
  try {
    graph = orbit_graph(params, height_bound, workers);
  } catch (const ReductionStuckError& stuck) {
    report.checks.push_back({"reduce_terminates", false, stuck.what()});
    report.all_pass = false;
    return report;
  }
  const std::size_t vertex_count = graph.vertices.size();
  report.solutions = vertex_count;

  // (1) every bounded solution reduces to a representative without stalling.
  std::vector<Coords> representative(vertex_count);
  std::vector<char> reduced_ok(vertex_count, 0);
  std::mutex detail_mutex;
  std::string stuck_detail;
  ReduceOptions options;
  options.keep_trace = false;
  parallel_for(vertex_count, workers, [&](std::size_t v) {
    try {
      representative[v] =
          reduce(params, Point(params, graph.vertices[v].coords()), options).representative.coords();
      reduced_ok[v] = 1;
    } catch (const ReductionStuckError& stuck) {
      std::lock_guard<std::mutex> lock(detail_mutex);
      if (stuck_detail.empty()) stuck_detail = stuck.what();
    }
  });
  const bool all_reduced = std::all_of(reduced_ok.begin(), reduced_ok.end(), [](char c) { return c; });
  report.checks.push_back({"reduce_terminates", all_reduced,
                           all_reduced ? count_detail(vertex_count, "solutions") : stuck_detail});

  // (2) each representative lies in exactly one stratum.
  {
    bool pass = true;
    std::string detail = count_detail(graph.component_rep.size(), "representatives");
    for (int rep_vertex : graph.component_rep) {
      const NormalPoint& rep = graph.vertices[rep_vertex];
      const auto strata = matching_strata(params, rep);
      if (strata.size() != 1) {
        pass = false;
        detail = format_coords(rep.coords()) + " matches " + std::to_string(strata.size()) + " strata";
        break;
      }
    }
    report.checks.push_back({"representative_in_unique_stratum", pass, detail});
  }

  // (3) vertices connected in the bounded graph share their representative.
  {
    bool pass = all_reduced;
    std::string detail = count_detail(vertex_count, "vertices");
    for (std::size_t v = 0; pass && v < vertex_count; ++v) {
      const Coords& component_rep =
          graph.vertices[graph.component_rep[graph.component[v]]].coords();
      if (representative[v] != component_rep) {
        pass = false;
        detail = format_coords(graph.vertices[v].coords()) + " reduces to " +
                 format_coords(representative[v]) + " but its component representative is " +
                 format_coords(component_rep);
      }
    }
    report.checks.push_back({"components_share_representative", pass, detail});
  }

  // Bounded fundamental-domain members: finite members plus family samples
  // within the window.  cap = height bound is exhaustive for every stratum
  // (each coordinate of a member is at most its height).
  std::vector<NormalPoint> fd_members;
  {
    const FdSet fd = enumerate_fd(params, std::max(height_bound, Int(1)));
    for (const FdMember& m : fd.finite_members)
      if (height(m.point) <= height_bound) fd_members.push_back(m.point);
    for (const NormalPoint& m : fd.family_samples)
      if (height(m) <= height_bound) fd_members.push_back(m);
    std::sort(fd_members.begin(), fd_members.end());
  }

  // (4) bounded fundamental-domain members are fixed points of reduce.
  {
    bool pass = true;
    std::string detail = count_detail(fd_members.size(), "bounded members");
    for (const NormalPoint& m : fd_members) {
      const ReductionResult r = reduce(params, Point(params, m.coords()), options);
      if (!(r.representative == m) || r.vieta_steps != 0 || !r.word.empty()) {
        pass = false;
        detail = format_coords(m.coords()) + " is not reduce-fixed";
        break;
      }
    }
    report.checks.push_back({"fd_members_reduce_fixed", pass, detail});
  }

  // (5) distinct members stay distinct, hence pairwise inequivalent.
  {
    const bool pass =
        std::adjacent_find(fd_members.begin(), fd_members.end()) == fd_members.end();
    report.checks.push_back({"fd_members_distinct", pass,
                             pass ? count_detail(fd_members.size(), "bounded members")
                                  : "duplicate fundamental-domain member"});
  }

  // (6) the component representatives are exactly the bounded members.
  {
    std::vector<NormalPoint> reps;
    reps.reserve(graph.component_rep.size());
    for (int rep_vertex : graph.component_rep) reps.push_back(graph.vertices[rep_vertex]);
    std::sort(reps.begin(), reps.end());
    const bool pass = reps == fd_members;
    std::ostringstream detail;
    detail << reps.size() << " component representatives vs " << fd_members.size()
           << " bounded fundamental-domain members";
    report.checks.push_back({"fd_matches_components", pass, detail.str()});
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CheckResult& c) { return c.pass; });
  return report;
}

CompatReport markoff_compat_check(int sample_count, std::uint64_t seed) {
  CompatReport report;
  std::mt19937_64 rng(seed);

  // (a) 4(u^2 + v^2 + uv) = (2u + v)^2 + 3v^2, the substitution that turns the
  // tail equation of the a = 1 sign stratum into a sum of binary squares.
  {
    std::uniform_int_distribution<long long> dist(-1'000'000'000LL, 1'000'000'000LL);
    bool pass = true;
    std::string detail = count_detail(static_cast<std::size_t>(sample_count), "pairs");
    for (int i = 0; i < sample_count && pass; ++i) {
      const Int u = dist(rng), v = dist(rng);
      if (4 * (u * u + v * v + u * v) != (2 * u + v) * (2 * u + v) + 3 * v * v) {
        pass = false;
        detail = "identity fails at u = " + u.str() + ", v = " + v.str();
      }
    }
    report.checks.push_back({"binary_form_identity", pass, detail});
  }

  // (b) for u <= v the tuple (-2, u, v) solves the n = 3, a = 1 equation with
  // k = (u + v)^2 + 4 and lands in the sign-flipped doubled-tail stratum.
  {
    std::uniform_int_distribution<long long> dist(2, 100'000);
    bool pass = true;
    std::string detail = count_detail(static_cast<std::size_t>(sample_count), "pairs");
    for (int i = 0; i < sample_count && pass; ++i) {
      Int u = dist(rng), v = dist(rng);
      if (u > v) std::swap(u, v);
      const Int sum = u + v;
      const Params p3(1, sum * sum + 4, 3);
      try {
        const NormalPoint q(p3, Coords{-2, u, v});
        if (stratum_member(p3, q) != Stratum::S2Neg) {
          pass = false;
          detail = format_coords(q.coords()) + " missed the stratum for k = " + p3.k.str();
        }
      } catch (const Error& err) {
        pass = false;
        detail = err.what();
      }
    }
    report.checks.push_back({"doubled_tail_square_condition", pass, detail});
  }

  // (c) for small k the enumerated fundamental domain matches closed forms
  // phrased through the identities above rather than the sweep's own
  // equations; most k admit no members at all, which is checked too.
  {
    bool pass = true;
    std::size_t nonempty = 0;
    std::string detail;
    for (Int k = 5; k <= 30 && pass; ++k) {
      const Params p3(1, k, 3);
      std::vector<Coords> expect_s0, expect_s1, expect_s2;
      const Int limit = isqrt(4 * k) + 2;
      for (Int u = 0; u <= limit; ++u) {
        for (Int v = u; v <= limit; ++v) {
          if (u * u + v * v == k) expect_s0.push_back({0, u, v});
          if (u >= 1 && (2 * u + v) * (2 * u + v) + 3 * v * v == 4 * (k - 1))
            expect_s1.push_back({-1, u, v});
          if (u >= 2 && (u + v) * (u + v) + 4 == k) expect_s2.push_back({-2, u, v});
        }
      }
      std::vector<Coords> got_s0, got_s1, got_s2;
      const FdSet fd = enumerate_fd(p3, 64);
      if (!fd.families.empty()) {
        pass = false;
        detail = "unexpected infinite family at k = " + k.str();
        break;
      }
      for (const FdMember& m : fd.finite_members) {
        if (m.stratum == Stratum::S0) got_s0.push_back(m.point.coords());
        if (m.stratum == Stratum::S1) got_s1.push_back(m.point.coords());
        if (m.stratum == Stratum::S2Neg) got_s2.push_back(m.point.coords());
      }
      if (expect_s0 != got_s0 || expect_s1 != got_s1 || expect_s2 != got_s2) {
        pass = false;
        detail = "stratum mismatch at k = " + k.str();
      }
      if (!expect_s0.empty() || !expect_s1.empty() || !expect_s2.empty()) ++nonempty;
    }
    if (pass)
      detail = "k = 5..30 match; " + std::to_string(26 - nonempty) + " of 26 have all three strata empty";
    report.checks.push_back({"markoff_strata_closed_forms", pass, detail});
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CheckResult& c) { return c.pass; });
  return report;
}

}  // namespace mh
