// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hedonic/bounds.hpp"
#include "hedonic/catalog.hpp"
#include "hedonic/generators.hpp"
#include "hedonic/labeled.hpp"
#include "hedonic/oracle.hpp"

using namespace hedonic;
using Clock = std::chrono::steady_clock;
using Filter = std::function<bool(const Partition&)>;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool ok = true;
  std::ostringstream notes;
  int failures = 0;
  void fail(const std::string& what) {
    ok = false;
    if (failures++ < 5) notes << "\n      " << what;
  }
};

int report(int id, const char* title, Verdict& v, const std::string& summary) {
  std::printf("[%s] criterion %d: %s: %s%s\n", v.ok ? "PASS" : "FAIL", id, title, summary.c_str(),
              v.notes.str().c_str());
  std::fflush(stdout);
  return v.ok ? 0 : 1;
}

bool is_ir_state(const PreferenceProfile& p, const Partition& pi) {
  for (Coalition c : pi.coalitions())
    if (!is_ir_coalition(p, c)) return false;
  return true;
}

// A profile certified from the states accepted by `filter`, kept for the
// oracle-consistency criterion.
struct CertifiedCase {
  std::string family;
  PreferenceProfile profile;
  Filter filter;
  std::size_t longest = 0;
  std::vector<Partition> starts;
};

struct Checks {
  std::size_t state_graphs = 0;
  std::size_t sinks_checked = 0;
  std::size_t sink_failures = 0;
};

// Builds the state graph, checks every sink, and certifies from `filter`.
// Returns the longest trajectory within the reachable part when certified.
std::optional<std::size_t> certify(const PreferenceProfile& p, const Filter& filter, Checks& checks,
                                   std::vector<CertifiedCase>& keep, const std::string& family,
                                   const StateGraph** out_graph = nullptr) {
  static StateGraph sg;
  sg = build_state_graph(p);
  ++checks.state_graphs;
  for (std::size_t v : sg.sinks()) {
    ++checks.sinks_checked;
    if (!verify_is(p, sg.nodes[v])) ++checks.sink_failures;
  }
  if (out_graph) *out_graph = &sg;
  const StateGraph sub = restrict_reachable(sg, filter);
  if (!is_certified(certify_convergence(sub))) return std::nullopt;
  const std::size_t longest = longest_trajectory(sub).length;
  CertifiedCase c{family, p, filter, longest, {}};
  for (const auto& pi : sg.nodes)
    if (filter(pi)) c.starts.push_back(pi);
  keep.push_back(std::move(c));
  return longest;
}

}  // namespace

int main() {
  int failed = 0;
  const auto suite_start = Clock::now();
  std::vector<CertifiedCase> certified;
  Checks checks;

  // 1 -------------------------------------------------------------------------
  {
    const auto t0 = Clock::now();
    Verdict v;
    const std::vector<std::string> names{"cycle3",      "cycle_n:5",     "cycle_n:6",     "cycle_n:7",
                                         "cycle_n:8",   "path_ir8",      "star_general",  "almost_star",
                                         "tree_monotone", "tree_monotone_01", "path_2coalitions"};
    const std::vector<int> lengths{3, 5, 18, 21, 24, 8, 6, 5, 6, 12, 8};
    for (std::size_t k = 0; k < names.size(); ++k) {
      const Instance inst = build_example(names[k]);
      const auto r = reproduce(inst);
      if (!r.ok) v.fail(names[k] + ": " + r.detail);
      else if (r.outcome.cycle_length() != lengths[k])
        v.fail(names[k] + ": cycle length " + std::to_string(r.outcome.cycle_length()));
    }
    const double dt = seconds_since(t0);
    if (dt >= 1.0) v.fail("took " + std::to_string(dt) + " s, limit 1 s");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu instances, canonical state sequences byte-exact (%.3f s)", names.size(), dt);
    failed += report(1, "counterexample reproduction", v, buf);
  }

  // 2 -------------------------------------------------------------------------
  {
    const auto t0 = Clock::now();
    Verdict v;
    int runs = 0;
    for (int n = 3; n <= 10; ++n, ++runs) {
      const auto r = reproduce(make_path_quadratic(n));
      if (!r.ok || r.outcome.steps != n * (n - 1) / 2) v.fail("path_quadratic:" + std::to_string(n) + " " + r.detail);
    }
    for (int t = 2; t <= 6; ++t, ++runs) {
      const auto r = reproduce(make_star_lb(t));
      if (!r.ok || r.outcome.steps != t * (t + 1)) v.fail("star_lb:" + std::to_string(t) + " " + r.detail);
    }
    int total6 = 0;
    for (int t = 1; t <= 6; ++t, ++runs) {
      const auto r = reproduce(make_tree_exponential(t));
      const int floor = (1 << (t + 1)) - 2;
      if (!r.ok || r.outcome.steps < floor || r.outcome.per_player_counts[exponential_x(1)] != floor)
        v.fail("tree_exponential:" + std::to_string(t) + " " + r.detail);
      if (t == 6) total6 = r.outcome.steps;
    }
    const double dt = seconds_since(t0);
    if (dt >= 5.0) v.fail("took " + std::to_string(dt) + " s, limit 5 s");
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%d scripted runs; tree_exponential:6 ran %d deviations, x1 moved exactly 126 = 2^7-2 (%.3f s)", runs,
                  total6, dt);
    failed += report(2, "lower-bound step counts", v, buf);
  }

  // 3 and the labeling half of 5 share the labeled runs ----------------------
  std::size_t labeled_steps = 0, label_violations = 0;
  {
    const auto t0 = Clock::now();
    Verdict v;
    for (int t = 1; t <= 8; ++t) {
      const Instance inst = make_tree_exponential(t);
      const auto b = tree_deviation_bound(RootedTree(inst.graph(), exponential_x(1)));
      if (b != (std::uint64_t{1} << (t + 1)) - 2) v.fail("tree_exponential:" + std::to_string(t) + " bound " + std::to_string(b));
    }
    for (int n = 2; n <= 24; ++n) {
      const auto bounds = tree_deviation_bounds(gen::path_graph(n));
      for (auto b : bounds)
        if (b > static_cast<std::uint64_t>(2 * n)) v.fail("path " + std::to_string(n) + " bound " + std::to_string(b));
    }
    gen::Rng rng(2024);
    std::uint64_t worst_slack = ~std::uint64_t{0};
    auto check_run = [&](const PreferenceProfile& p, const LabeledRun& run) {
      const auto bounds = tree_deviation_bounds(p.graph());
      const auto& states = run.outcome.states;
      for (Player i = 0; i < p.n(); ++i) {
        const auto c = static_cast<std::uint64_t>(run.outcome.per_player_counts[static_cast<std::size_t>(i)]);
        if (c > bounds[static_cast<std::size_t>(i)]) v.fail("count above bound");
        worst_slack = std::min(worst_slack, bounds[static_cast<std::size_t>(i)] - std::min(c, bounds[static_cast<std::size_t>(i)]));
      }
      for (std::size_t t = 0; t < states.size(); ++t) {
        if (!labels_have_unique_own_edge(p.graph(), states[t], run.labels[t])) ++label_violations;
        if (t + 1 < states.size()) {
          ++labeled_steps;
          if (!labeled_step_utilities_consistent(p, states[t], states[t + 1], run.labels[t], run.steps[t]))
            ++label_violations;
        }
      }
    };
    for (int k = 0; k < 1000; ++k) {
      const Graph g = gen::random_tree(2 + k % 7, rng);
      const auto p = gen::random_las(g, rng, 1 + k % 5);
      const auto all = enumerate_feasible_partitions(g);
      const Partition& start = all[static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<int>(all.size()) - 1))];
      const auto run = run_tree_dynamics_labeled(p, start, RandomScheduler{static_cast<std::uint64_t>(k)});
      if (run.outcome.status != RunStatus::Converged) v.fail("labeled run did not converge");
      check_run(p, run);
    }
    for (int t = 1; t <= 6; ++t) {
      const Instance inst = make_tree_exponential(t);
      check_run(inst.profile, run_tree_dynamics_labeled(inst.profile, inst.initial, ScriptedScheduler{inst.script}));
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "bound(x1) = 2^{t+1}-2 for t=1..8; paths n<=24 all roots <= 2n; 1000 random labeled LAS runs n<=8 "
                  "within bound (%.2f s)",
                  seconds_since(t0));
    failed += report(3, "bound formula", v, buf);
  }

  // 4 -------------------------------------------------------------------------
  std::size_t star_arcs = 0, star_ir_violations = 0, path_arcs = 0, path_size_violations = 0;
  std::size_t nash_states = 0, nash_mismatches = 0;
  {
    const auto t0 = Clock::now();
    Verdict v;
    gen::Rng rng(77);
    const Filter all = [](const Partition&) { return true; };
    struct Tally {
      int certified = 0, total = 0;
    };
    Tally mono, las_tree, las_path, ir_star, star_irstate, path3, path2;
    std::size_t worst_path_longest_ratio_num = 0, worst_path_n = 1;
    double star_ratio = 0;

    for (int k = 0; k < 200; ++k) {
      const int n = 2 + k % 6;  // 2..7
      const auto p = gen::random_monotone(gen::path_graph(n), rng);
      ++mono.total;
      if (certify(p, all, checks, certified, "monotone path")) ++mono.certified;
      else v.fail("monotone path not certified, n=" + std::to_string(n));
      // IS = Nash under monotone preferences, on every state of the same instance
      for (const auto& pi : enumerate_feasible_partitions(p.graph())) {
        ++nash_states;
        if (find_is_deviations(p, pi) != find_nash_deviations(p, pi)) ++nash_mismatches;
      }
    }
    for (int k = 0; k < 200; ++k) {
      const int n = 2 + k % 7;  // 2..8
      const auto p = gen::random_las(gen::random_tree(n, rng), rng);
      ++las_tree.total;
      if (certify(p, all, checks, certified, "LAS tree")) ++las_tree.certified;
      else v.fail("LAS tree not certified, n=" + std::to_string(n));
    }
    for (int k = 0; k < 200; ++k) {
      const int n = 2 + k % 7;
      const auto p = gen::random_las(gen::path_graph(n), rng);
      ++las_path.total;
      if (auto longest = certify(p, all, checks, certified, "LAS path")) {
        ++las_path.certified;
        if (*longest > static_cast<std::size_t>(2 * n * n)) v.fail("LAS path trajectory above 2n^2");
        if (*longest * worst_path_n * worst_path_n > worst_path_longest_ratio_num * std::size_t(n) * std::size_t(n)) {
          worst_path_longest_ratio_num = *longest;
          worst_path_n = static_cast<std::size_t>(n);
        }
      } else {
        v.fail("LAS path not certified, n=" + std::to_string(n));
      }
    }
    for (int k = 0; k < 200; ++k) {
      const int n = 3 + k % 5;  // 3..7
      const auto p = gen::random_ir(gen::star_graph(n), rng);
      ++ir_star.total;
      if (auto longest = certify(p, all, checks, certified, "IR star")) {
        ++ir_star.certified;
        star_ratio = std::max(star_ratio, static_cast<double>(*longest) / (n * n));
      } else {
        v.fail("IR star not certified, n=" + std::to_string(n));
      }
    }
    for (int k = 0; k < 200; ++k) {
      const int n = 3 + k % 4;  // 3..6
      const auto p = gen::random_general(gen::star_graph(n), rng);
      const Filter ir = [p](const Partition& pi) { return is_ir_state(p, pi); };
      ++star_irstate.total;
      const StateGraph* sg = nullptr;
      if (certify(p, ir, checks, certified, "general star from IR states", &sg)) ++star_irstate.certified;
      else v.fail("general star not certified from IR states, n=" + std::to_string(n));
      for (std::size_t s = 0; s < sg->nodes.size(); ++s) {
        if (!is_ir_state(p, sg->nodes[s])) continue;
        for (const auto& arc : sg->arcs[s]) {
          ++star_arcs;
          if (!is_ir_state(p, sg->nodes[arc.to])) ++star_ir_violations;
        }
      }
    }
    for (int k = 0; k < 400; ++k) {
      const int n = 2 + k % 6;  // 2..7
      const auto p = gen::random_ir(gen::path_graph(n), rng);
      const std::size_t limit = k < 200 ? 3 : 2;
      const Filter few = [limit](const Partition& pi) { return pi.size() <= limit; };
      Tally& tally = k < 200 ? path3 : path2;
      ++tally.total;
      const StateGraph* sg = nullptr;
      if (certify(p, few, checks, certified, limit == 3 ? "IR path, <=3 coalitions" : "IR path, <=2 coalitions", &sg))
        ++tally.certified;
      else
        v.fail("IR path not certified from <=" + std::to_string(limit) + " coalitions, n=" + std::to_string(n));
      for (std::size_t s = 0; s < sg->nodes.size(); ++s)
        for (const auto& arc : sg->arcs[s]) {
          ++path_arcs;
          if (sg->nodes[arc.to].size() > sg->nodes[s].size()) ++path_size_violations;
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 300.0) v.fail("took " + std::to_string(dt) + " s, limit 300 s");
    char buf[400];
    std::snprintf(buf, sizeof buf,
                  "certified monotone paths %d/%d, LAS trees %d/%d, LAS paths %d/%d (max longest/n^2 = %zu/%zu^2 <= 2), "
                  "IR stars %d/%d (max longest/n^2 = %.2f), general stars from IR states %d/%d, "
                  "IR paths |pi0|<=3 %d/%d, |pi0|<=2 %d/%d (%.2f s)",
                  mono.certified, mono.total, las_tree.certified, las_tree.total, las_path.certified, las_path.total,
                  worst_path_longest_ratio_num, worst_path_n, ir_star.certified, ir_star.total, star_ratio,
                  star_irstate.certified, star_irstate.total, path3.certified, path3.total, path2.certified, path2.total,
                  dt);
    failed += report(4, "convergence certificates", v, buf);
  }

  // 5 -------------------------------------------------------------------------
  {
    Verdict v;
    if (path_size_violations) v.fail(std::to_string(path_size_violations) + " path IR moves increased the coalition count");
    if (star_ir_violations) v.fail(std::to_string(star_ir_violations) + " star moves left the IR states");
    if (label_violations) v.fail(std::to_string(label_violations) + " labeling claim violations");
    if (nash_mismatches) v.fail(std::to_string(nash_mismatches) + " monotone states where IS != Nash");
    char buf[300];
    std::snprintf(buf, sizeof buf,
                  "coalition count never grows on %zu IR path moves; %zu star moves from IR states stay IR; "
                  "one-edge and utility-sign claims hold on %zu labeled steps; IS = Nash on %zu monotone states",
                  path_arcs, star_arcs, labeled_steps, nash_states);
    failed += report(5, "invariant suite", v, buf);
  }

  // 6 -------------------------------------------------------------------------
  {
    const auto t0 = Clock::now();
    Verdict v;
    gen::Rng rng(606);
    std::size_t runs = 0, max_used = 0;
    for (std::size_t c = 0; c < certified.size(); ++c) {
      const auto& cc = certified[c];
      RunOptions opt;
      opt.max_steps = static_cast<int>(cc.longest);
      for (int r = 0; r < 1000; ++r, ++runs) {
        const Partition& start =
            cc.starts[static_cast<std::size_t>(gen::uniform_int(rng, 0, static_cast<int>(cc.starts.size()) - 1))];
        const auto run = run_dynamics(cc.profile, start, RandomScheduler{c * 1000 + static_cast<std::uint64_t>(r)}, opt);
        if (run.status != RunStatus::Converged || run.steps > static_cast<int>(cc.longest))
          v.fail(cc.family + ": random run " + std::to_string(r) + " ended " + std::string(to_string(run.status)) +
                 " after " + std::to_string(run.steps) + " steps, longest trajectory " + std::to_string(cc.longest));
        else if (!verify_is(cc.profile, run.final_state()))
          v.fail(cc.family + ": converged state is not IS");
        max_used = std::max(max_used, static_cast<std::size_t>(run.steps));
      }
    }
    if (checks.sink_failures) v.fail(std::to_string(checks.sink_failures) + " sinks failed verify_is");
    char buf[300];
    std::snprintf(buf, sizeof buf,
                  "%zu seeded random runs over %zu certified instances all converged within the longest trajectory; "
                  "%zu sinks of %zu state graphs pass verify_is (%.2f s)",
                  runs, certified.size(), checks.sinks_checked, checks.state_graphs, seconds_since(t0));
    failed += report(6, "oracle consistency", v, buf);
  }

  std::printf("acceptance: %d of 6 criteria failed (%.2f s total)\n", failed, seconds_since(suite_start));
  return failed == 0 ? 0 : 1;
}
