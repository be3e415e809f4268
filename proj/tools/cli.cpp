#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "smadl/analyzer.hpp"
#include "smadl/parser.hpp"
#include "smadl/scenario.hpp"
#include "smadl/simulator.hpp"
#include "smadl/trace.hpp"

namespace smadl::cli {

namespace {

std::optional<std::string> readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

bool writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

void printDiagnostics(std::ostream& err, const std::string& file, std::vector<Diagnostic> diags,
                      bool quiet) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::pair(a.span.startLine, a.span.startColumn) <
           std::pair(b.span.startLine, b.span.startColumn);
  });
  for (const auto& d : diags) {
    if (quiet && d.severity == Severity::Note) continue;
    err << renderDiagnostic(file, d) << '\n';
  }
}

// Parse + resolve. On failure prints the diagnostics and sets `status`.
struct Loaded {
  std::optional<ResolvedNetwork> network;
  std::vector<Diagnostic> diagnostics;
  int status = kSuccess;
};

Loaded load(const std::string& path, std::ostream& err) {
  Loaded l;
  auto text = readFile(path);
  if (!text) {
    err << "smadl: cannot read '" << path << "'\n";
    l.status = kUsage;
    return l;
  }
  ParseResult parsed = parse(*text);
  l.diagnostics = parsed.diagnostics;
  if (parsed.network) {
    auto [resolved, diags] = resolve(*parsed.network);
    l.diagnostics.insert(l.diagnostics.end(), diags.begin(), diags.end());
    l.network = std::move(resolved);
  }
  if (!l.network) l.status = kDiagnostics;
  return l;
}

int failWith(const Loaded& l, const std::string& path, std::ostream& err) {
  if (l.status == kDiagnostics) printDiagnostics(err, path, l.diagnostics, false);
  return l.status;
}

int cmdCheck(const std::string& path, bool quiet, std::ostream& err) {
  Loaded l = load(path, err);
  if (l.status == kUsage) return kUsage;
  if (l.network) {
    auto graph = dependencyGraph(*l.network);
    l.diagnostics.insert(l.diagnostics.end(), graph.diagnostics.begin(), graph.diagnostics.end());
  }
  printDiagnostics(err, path, l.diagnostics, quiet);
  return hasErrors(l.diagnostics) ? kDiagnostics : kSuccess;
}

int cmdFmt(const std::string& path, bool write, bool checkOnly, std::ostream& out,
           std::ostream& err) {
  auto text = readFile(path);
  if (!text) {
    err << "smadl: cannot read '" << path << "'\n";
    return kUsage;
  }
  ParseResult parsed = parse(*text);
  if (!parsed.network) {
    printDiagnostics(err, path, parsed.diagnostics, false);
    return kDiagnostics;
  }
  std::string canonical = format(*parsed.network);
  if (checkOnly) {
    if (canonical == *text) return kSuccess;
    err << path << ": not in canonical form\n";
    return kDiagnostics;
  }
  if (write) {
    if (canonical != *text && !writeFile(path, canonical)) {
      err << "smadl: cannot write '" << path << "'\n";
      return kUsage;
    }
    return kSuccess;
  }
  out << canonical;
  return kSuccess;
}

int cmdClassify(const std::string& path, bool summary, std::ostream& out, std::ostream& err) {
  Loaded l = load(path, err);
  if (!l.network) return failWith(l, path, err);
  std::map<TaxonomyClass, size_t> counts;
  for (const auto& m : l.network->spec().machines) {
    TaxonomyClass c = l.network->perMachineClass().at(m.name);
    out << m.name << ": " << className(c) << '\n';
    ++counts[c];
  }
  if (summary) {
    out << '\n';
    for (TaxonomyClass c : kAllClasses) out << className(c) << ": " << counts[c] << '\n';
  }
  return kSuccess;
}

int cmdGraph(const std::string& path, const std::string& outPath, std::ostream& out,
             std::ostream& err) {
  Loaded l = load(path, err);
  if (!l.network) return failWith(l, path, err);
  std::string dot = renderDot(*l.network);
  if (outPath.empty()) {
    out << dot;
  } else if (!writeFile(outPath, dot)) {
    err << "smadl: cannot write '" << outPath << "'\n";
    return kUsage;
  }
  return kSuccess;
}

struct SimulateFlags {
  std::string scenario;
  std::uint64_t seed = 0;
  std::optional<Tick> horizon;
  Tick latency = 1;
  std::string trace;
  std::string report;
};

int cmdSimulate(const std::string& path, const SimulateFlags& f, std::ostream& out,
                std::ostream& err) {
  Loaded l = load(path, err);
  if (!l.network) return failWith(l, path, err);
  auto text = readFile(f.scenario);
  if (!text) {
    err << "smadl: cannot read '" << f.scenario << "'\n";
    return kUsage;
  }
  ScenarioOptions opts;
  opts.seed = f.seed;
  opts.defaultLatency = f.latency;
  opts.horizon = f.horizon;
  auto [scenario, diags] = loadScenario(*text, *l.network, opts);
  if (!scenario) {
    printDiagnostics(err, f.scenario, diags, false);
    return kDiagnostics;
  }
  SimResult result = runSimulation(*l.network, *scenario);
  if (!f.trace.empty() && !writeFile(f.trace, renderTrace(scenario->config, result.trace))) {
    err << "smadl: cannot write '" << f.trace << "'\n";
    return kUsage;
  }
  std::string report = renderReport(scenario->config, result.report);
  if (f.report.empty()) {
    out << report;
  } else if (!writeFile(f.report, report)) {
    err << "smadl: cannot write '" << f.report << "'\n";
    return kUsage;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SMADL toolchain: check, format, classify, graph and simulate social machine networks",
               "smadl"};
  app.require_subcommand(1);

  std::string path;
  bool quiet = false, write = false, checkOnly = false, summary = false;
  std::string graphOut;
  SimulateFlags sim;
  Tick horizon = 0;

  auto* check = app.add_subcommand("check", "Parse and validate a network");
  check->add_option("file", path, "SMADL file")->required();
  check->add_flag("--quiet", quiet, "Suppress notes");

  auto* fmt = app.add_subcommand("fmt", "Print the canonical form of a network");
  fmt->add_option("file", path, "SMADL file")->required();
  auto* writeFlag = fmt->add_flag("--write", write, "Rewrite the file in place");
  fmt->add_flag("--checkonly", checkOnly, "Exit 1 if the file is not canonical; write nothing")
      ->excludes(writeFlag);

  auto* classify = app.add_subcommand("classify", "Print each machine's taxonomy class");
  classify->add_option("file", path, "SMADL file")->required();
  classify->add_flag("--summary", summary, "Append per-class counts");

  auto* graph = app.add_subcommand("graph", "Export the consumes graph as Graphviz DOT");
  graph->add_option("file", path, "SMADL file")->required();
  graph->add_option("--out", graphOut, "Output file (default: standard output)");

  auto* simulate = app.add_subcommand("simulate", "Run a scenario against a network");
  simulate->add_option("file", path, "SMADL file")->required();
  simulate->add_option("--scenario", sim.scenario, "Scenario script")->required();
  simulate->add_option("--seed", sim.seed, "Seed recorded in the trace header");
  auto* horizonOpt = simulate->add_option("--horizon", horizon, "Last tick for scenario events")
                         ->check(CLI::NonNegativeNumber);
  simulate->add_option("--latency", sim.latency, "Response latency in ticks")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--trace", sim.trace, "Trace output file");
  simulate->add_option("--report", sim.report, "Report output file (default: standard output)");

  std::vector<std::string> argvStore;
  argvStore.reserve(args.size() + 1);
  argvStore.push_back("smadl");
  argvStore.insert(argvStore.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argvStore) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  if (*check) return cmdCheck(path, quiet, err);
  if (*fmt) return cmdFmt(path, write, checkOnly, out, err);
  if (*classify) return cmdClassify(path, summary, out, err);
  if (*graph) return cmdGraph(path, graphOut, out, err);
  if (*simulate) {
    if (*horizonOpt) sim.horizon = horizon;
    return cmdSimulate(path, sim, out, err);
  }
  return kUsage;
}

}  // namespace smadl::cli
