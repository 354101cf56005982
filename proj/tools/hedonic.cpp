// hedonic: command-line front end for the graph hedonic game library.
//
// Exit codes
//   run        0 converged, 2 cycle detected, 3 truncated
//   certify    0 certified, 2 cycle found (printed), 4 state space too large
//   reproduce  0 every replay matched, 5 mismatch (diff printed)
//   any        1 bad arguments, unreadable or invalid instance

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "hedonic/bounds.hpp"
#include "hedonic/catalog.hpp"
#include "hedonic/io.hpp"
#include "hedonic/labeled.hpp"
#include "hedonic/oracle.hpp"

namespace fs = std::filesystem;
using namespace hedonic;
using io::json;

namespace {

enum Exit : int { kOk = 0, kLoadError = 1, kCycle = 2, kTruncated = 3, kTooLarge = 4, kMismatch = 5 };

struct Loaded {
  std::string name;
  PreferenceProfile profile;
  std::optional<Partition> initial;
  std::vector<ScriptStep> script;
};

// A path on disk wins; anything else is looked up in the catalog.
Loaded load(const std::string& what) {
  if (fs::exists(what)) {
    auto f = io::load_instance_file(what);
    return {f.name.empty() ? fs::path(what).stem().string() : f.name, std::move(f.profile), std::move(f.initial),
            std::move(f.script)};
  }
  try {
    Instance inst = build_example(what);
    return {inst.name, std::move(inst.profile), std::move(inst.initial), std::move(inst.script)};
  } catch (const Error& e) {
    if (e.code() == Errc::UnknownExample && (what.find('/') != std::string::npos || what.ends_with(".json")))
      throw Error(Errc::ParseError, what + ": no such file");
    throw;
  }
}

Player resolve_player(const Graph& g, const std::string& text) {
  if (auto p = g.find_label(text)) return *p;
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v >= 0 && v < g.n()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::ParseError, "unknown player '" + text + "'");
}

Partition resolve_initial(const Loaded& inst, const std::string& text) {
  const Graph& g = inst.profile.graph();
  if (text.empty()) return inst.initial.value_or(Partition::singletons(g.n()));
  if (text == "singletons") return Partition::singletons(g.n());
  if (text == "grand") return Partition::grand(g.n());
  return parse_partition(g, text);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// run ----------------------------------------------------------------------

struct RunArgs {
  std::string instance;
  std::string initial;
  std::string scheduler = "first";
  std::optional<std::uint64_t> seed;
  std::optional<int> max_steps;
  std::string trace;
  bool labeled = false;
};

int cmd_run(const RunArgs& a) {
  const Loaded inst = load(a.instance);
  const Graph& g = inst.profile.graph();
  const Partition start = resolve_initial(inst, a.initial);

  Scheduler scheduler = FirstScheduler{};
  if (a.scheduler == "random") {
    if (!a.seed) throw Error(Errc::ParseError, "--scheduler random needs an explicit --seed");
    scheduler = RandomScheduler{*a.seed};
  } else if (a.scheduler == "best") {
    scheduler = BestResponseScheduler{};
  } else if (a.scheduler == "script") {
    if (inst.script.empty()) throw Error(Errc::ParseError, inst.name + " has no script");
    scheduler = ScriptedScheduler{inst.script};
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* trace = nullptr;
  if (a.trace == "-") {
    trace = &std::cout;
  } else if (!a.trace.empty()) {
    file = std::make_unique<std::ofstream>(a.trace);
    if (!*file) throw Error(Errc::ParseError, a.trace + ": cannot write trace");
    trace = file.get();
  }
  RunOptions options;
  options.max_steps = a.max_steps;
  if (trace) options.on_step = [&](const TraceEntry& e) { *trace << io::trace_record(g, e).dump() << "\n"; };

  const RunOutcome run = a.labeled ? run_tree_dynamics_labeled(inst.profile, start, scheduler, options).outcome
                                   : run_dynamics(inst.profile, start, scheduler, options);
  if (trace) trace->flush();
  json summary = io::run_summary(g, run);
  summary["instance"] = inst.name;
  summary["scheduler"] = a.scheduler;
  if (a.seed) summary["seed"] = *a.seed;
  if (a.trace == "-")
    std::cout << summary.dump() << "\n";
  else
    print_json(summary);
  switch (run.status) {
    case RunStatus::Converged: return kOk;
    case RunStatus::CycleDetected: return kCycle;
    case RunStatus::Truncated: return kTruncated;
  }
  return kTruncated;
}

// certify ------------------------------------------------------------------

struct CertifyArgs {
  std::string instance;
  std::string filter = "all";
  std::string dot;
};

int cmd_certify(const CertifyArgs& a) {
  const Loaded inst = load(a.instance);
  const Graph& g = inst.profile.graph();

  std::function<bool(const Partition&)> filter = [](const Partition&) { return true; };
  if (a.filter == "ir-state") {
    filter = [&](const Partition& pi) {
      return std::all_of(pi.coalitions().begin(), pi.coalitions().end(),
                         [&](Coalition c) { return is_ir_coalition(inst.profile, c); });
    };
  } else if (a.filter.starts_with("max-coalitions=")) {
    std::size_t k = 0;
    try {
      k = std::stoul(a.filter.substr(15));
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad filter '" + a.filter + "'");
    }
    filter = [k](const Partition& pi) { return pi.size() <= k; };
  } else if (a.filter != "all") {
    throw Error(Errc::ParseError, "unknown filter '" + a.filter + "' (all, ir-state, max-coalitions=k)");
  }

  StateGraph sg;
  try {
    sg = build_state_graph(inst.profile);
  } catch (const Error& e) {
    if (e.code() != Errc::TooLarge) throw;
    std::cerr << "hedonic: " << e.what() << " (raise with HEDONIC_MAX_ENUM)\n";
    return kTooLarge;
  }
  const Certificate cert = certify_convergence_from(sg, filter);
  json summary = io::state_graph_summary(g, sg, cert);
  summary["instance"] = inst.name;
  summary["filter"] = a.filter;
  if (is_certified(cert) && a.filter == "all") summary["longest_trajectory"] = longest_trajectory(sg).length;
  if (!a.dot.empty()) {
    std::ofstream out(a.dot);
    if (!out) throw Error(Errc::ParseError, a.dot + ": cannot write");
    out << to_dot(sg, g);
  }
  print_json(summary);
  if (const auto* c = std::get_if<CounterCycle>(&cert)) {
    std::cout << "cycle of length " << c->length() << ":\n";
    for (std::size_t k = 0; k < c->states.size(); ++k) {
      std::cout << "  " << sg.nodes[c->states[k]].to_string(g);
      if (k + 1 < c->states.size()) {
        const auto& arcs = sg.arcs[c->states[k]];
        auto arc = std::find_if(arcs.begin(), arcs.end(), [&](const StateArc& s) { return s.to == c->states[k + 1]; });
        std::cout << "   -- " << g.label(arc->deviation.player) << " -->";
      }
      std::cout << "\n";
    }
    return kCycle;
  }
  return kOk;
}

// reproduce ----------------------------------------------------------------

int cmd_reproduce(const std::string& name) {
  std::vector<std::string> names = name == "all" ? catalog_names() : std::vector<std::string>{name};
  int status = kOk;
  for (const auto& n : names) {
    const Instance inst = build_example(n);
    const auto report = reproduce(inst);
    std::cout << (report.ok ? "match    " : "MISMATCH ") << inst.name << ": " << report.detail << "\n";
    if (!report.ok) status = kMismatch;
  }
  return status;
}

// bound --------------------------------------------------------------------

int cmd_bound(const std::string& instance, const std::string& root) {
  const Loaded inst = load(instance);
  const Graph& g = inst.profile.graph();
  if (!g.is_tree()) throw Error(Errc::NotATree, inst.name + " is not a tree");
  if (root == "all") {
    const auto bounds = tree_deviation_bounds(g);
    std::cout << *std::max_element(bounds.begin(), bounds.end()) << "\n";
    return kOk;
  }
  std::cout << tree_deviation_bound(RootedTree(g, resolve_player(g, root))) << "\n";
  return kOk;
}

// export -------------------------------------------------------------------

std::string file_name(std::string name) {
  std::replace(name.begin(), name.end(), ':', '_');
  return name + ".json";
}

int cmd_export(const std::string& what, const std::string& out, const std::string& dir) {
  auto dump = [](const Loaded& l) {
    return io::instance_to_json(l.name, l.profile, l.initial, l.script).dump(2) + "\n";
  };
  if (what == "all" || !dir.empty()) {
    const fs::path base = dir.empty() ? fs::path(".") : fs::path(dir);
    fs::create_directories(base);
    for (const auto& n : what == "all" ? catalog_names() : std::vector<std::string>{what}) {
      const Loaded l = load(n);
      std::ofstream(base / file_name(l.name)) << dump(l);
      std::cout << (base / file_name(l.name)).string() << "\n";
    }
    return kOk;
  }
  const std::string text = dump(load(what));
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw Error(Errc::ParseError, out + ": cannot write");
    f << text;
  }
  return kOk;
}

// validate -----------------------------------------------------------------

int cmd_validate(const std::string& instance) {
  const Loaded inst = load(instance);
  const auto& p = inst.profile;
  const Graph& g = p.graph();
  json report;
  report["instance"] = inst.name;
  report["valid"] = true;
  report["n"] = g.n();
  report["topology"] = std::string(to_string(g.classify()));
  report["preferences"] = p.kind() == PreferenceKind::Additive ? "additive" : "ranked";
  if (p.kind() == PreferenceKind::Additive) report["las"] = is_las(p);
  if (g.n() <= 16) {
    report["individually_rational"] = is_individually_rational(p);
    report["monotone"] = is_monotone(p);
  }
  if (inst.initial) report["initial"] = inst.initial->to_string(g);
  report["script_steps"] = inst.script.size();
  print_json(report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Individually stable dynamics in graph hedonic games"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run IS dynamics and print a JSON summary");
  run_cmd->add_option("instance", run.instance, "Instance file or catalog name (e.g. cycle_n:6)")->required();
  run_cmd->add_option("--initial", run.initial, "Initial partition, e.g. \"{{a},{b,c}}\", or singletons|grand");
  run_cmd->add_option("--scheduler", run.scheduler, "first | random | best | script")
      ->check(CLI::IsMember({"first", "random", "best", "script"}));
  run_cmd->add_option("--seed", run.seed, "Seed for --scheduler random (required there)");
  run_cmd->add_option("--max-steps", run.max_steps, "Step limit (default 4n^2, or the script length)");
  run_cmd->add_option("--trace", run.trace, "Write JSONL trace to a file, or - for stdout");
  run_cmd->add_flag("--labeled", run.labeled, "Tree/LAS only: track edge labels and report labeled breaks");

  CertifyArgs cert;
  auto* cert_cmd = app.add_subcommand("certify", "Decide convergence from every initial state via the state graph");
  cert_cmd->add_option("instance", cert.instance, "Instance file or catalog name")->required();
  cert_cmd->add_option("--filter", cert.filter, "all | ir-state | max-coalitions=k");
  cert_cmd->add_option("--dot", cert.dot, "Write the state graph in DOT format");

  std::string name;
  auto* rep_cmd = app.add_subcommand("reproduce", "Replay catalog instances against their recorded outcomes");
  rep_cmd->add_option("name", name, "Catalog name, or all")->required();

  std::string bound_instance, root = "all";
  auto* bound_cmd = app.add_subcommand("bound", "Deviation bound for a tree, rooted at a player");
  bound_cmd->add_option("instance", bound_instance, "Instance file or catalog name")->required();
  bound_cmd->add_option("--root", root, "Player label or index, or all for the maximum");

  std::string what, out, dir;
  auto* export_cmd = app.add_subcommand("export", "Write catalog instances as JSON instance files");
  export_cmd->add_option("name", what, "Catalog name, instance file, or all")->required();
  export_cmd->add_option("-o,--output", out, "Output file (default stdout)");
  export_cmd->add_option("--dir", dir, "Output directory; one file per instance");

  std::string validate_instance;
  auto* validate_cmd = app.add_subcommand("validate", "Load an instance and report its properties");
  validate_cmd->add_option("instance", validate_instance, "Instance file or catalog name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kLoadError;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*cert_cmd) return cmd_certify(cert);
    if (*rep_cmd) return cmd_reproduce(name);
    if (*bound_cmd) return cmd_bound(bound_instance, root);
    if (*export_cmd) return cmd_export(what, out, dir);
    if (*validate_cmd) return cmd_validate(validate_instance);
  } catch (const Error& e) {
    std::cerr << "hedonic: " << e.what() << "\n";
    return kLoadError;
  } catch (const std::exception& e) {
    std::cerr << "hedonic: " << e.what() << "\n";
    return kLoadError;
  }
  return kLoadError;
}
