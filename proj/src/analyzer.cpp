#include "smadl/analyzer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace smadl {

namespace {

Diagnostic error(std::string_view code, std::string message, SourceSpan span) {
  return {Severity::Error, std::string(code), std::move(message), span};
}

void checkComparisons(const std::vector<PropertyEntry>& props, std::vector<Diagnostic>& out) {
  for (const auto& p : props) {
    if (p.form == PropertyForm::Comparison && !std::holds_alternative<double>(p.value)) {
      out.push_back(error(codes::kSemBadConstraint,
                          "comparison '" + p.key + "' needs a numeric bound", p.span));
    }
  }
}

template <typename Range, typename NameOf>
void checkUnique(const Range& items, NameOf nameOf, std::string_view code, std::string_view what,
                 const std::string& owner, const SourceSpan& span, std::vector<Diagnostic>& out) {
  std::set<std::string> seen;
  for (const auto& item : items) {
    const std::string& n = nameOf(item);
    if (!seen.insert(n).second) {
      out.push_back(error(code, "duplicate " + std::string(what) + " '" + n + "' in " + owner, span));
    }
  }
}

void checkMachine(const MachineSpec& m, std::vector<Diagnostic>& out) {
  auto portName = [](const PortSpec& p) -> const std::string& { return p.name; };
  if (m.processingUnit) {
    const auto& pu = *m.processingUnit;
    checkUnique(pu.states, [](const std::string& s) -> const std::string& { return s; },
                codes::kSemDuplicateState, "state", "machine '" + m.name + "'", pu.span, out);
    checkUnique(pu.inputs, portName, codes::kSemDuplicatePort, "input port",
                "processing unit '" + pu.name + "'", pu.span, out);
    checkUnique(pu.outputs, portName, codes::kSemDuplicatePort, "output port",
                "processing unit '" + pu.name + "'", pu.span, out);
  }
  for (const auto& c : m.constraints) checkComparisons(c.properties, out);
  if (m.wrapperInterface) {
    const auto& wi = *m.wrapperInterface;
    checkUnique(wi.requests, [](const RequestSpec& r) -> const std::string& { return r.name; },
                codes::kSemDuplicateRequest, "request", "wrapper interface '" + wi.name + "'",
                m.span, out);
    for (const auto& r : wi.requests) {
      checkUnique(r.responses, [](const ResponseSpec& s) -> const std::string& { return s.name; },
                  codes::kSemDuplicateResponse, "response", "request '" + r.name + "'", r.span,
                  out);
      checkComparisons(r.properties, out);
    }
  }
}

bool positionLess(const Diagnostic& a, const Diagnostic& b) {
  return std::pair(a.span.startLine, a.span.startColumn) <
         std::pair(b.span.startLine, b.span.startColumn);
}

}  // namespace

const MachineSpec& ResolvedNetwork::machine(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownMachineError(name);
  return spec_.machines[it->second];
}

bool ResolvedNetwork::hasEdge(const std::string& consumer, const std::string& provider) const {
  return std::find(edges_.begin(), edges_.end(), ConsumesEdge{consumer, provider}) != edges_.end();
}

std::pair<std::optional<ResolvedNetwork>, std::vector<Diagnostic>> resolve(
    const NetworkSpec& network) {
  std::vector<Diagnostic> diags;
  ResolvedNetwork r;
  r.spec_ = network;

  for (size_t i = 0; i < network.machines.size(); ++i) {
    const auto& m = network.machines[i];
    if (!r.index_.emplace(m.name, i).second) {
      diags.push_back(error(codes::kSemDuplicateMachine, "duplicate machine '" + m.name + "'", m.span));
    }
    checkMachine(m, diags);
  }

  std::set<std::string> hasIncoming;
  for (const auto& rel : network.relationships) {
    bool ok = true;
    for (const std::string* end : {&rel.fromMachine, &rel.toMachine}) {
      if (!r.index_.count(*end)) {
        diags.push_back(
            error(codes::kSemUnknownMachine, "relationship names undeclared machine '" + *end + "'", rel.span));
        ok = false;
      }
    }
    if (rel.fromMachine == rel.toMachine) {
      diags.push_back(error(codes::kSemSelfRelationship,
                            "machine '" + rel.fromMachine + "' cannot relate to itself", rel.span));
      ok = false;
    }
    checkComparisons(rel.connectionSettings, diags);
    if (!ok) continue;
    ConsumesEdge e{rel.fromMachine, rel.toMachine};
    if (std::find(r.edges_.begin(), r.edges_.end(), e) == r.edges_.end()) r.edges_.push_back(e);
    hasIncoming.insert(rel.toMachine);
  }

  for (const auto& m : network.machines) {
    if (m.wrapperInterface && !hasIncoming.count(m.name)) {
      diags.push_back({Severity::Warning, std::string(codes::kSemUnconsumedInterface),
                       "wrapper interface '" + m.wrapperInterface->name + "' of machine '" +
                           m.name + "' is not consumed by any machine in the network",
                       m.span});
    }
  }

  std::stable_sort(diags.begin(), diags.end(), positionLess);
  if (hasErrors(diags)) return {std::nullopt, std::move(diags)};
  r.classes_ = classifyNetwork(r);
  return {std::move(r), std::move(diags)};
}

TaxonomyClass classifyMachine(const ResolvedNetwork& resolved, const std::string& name) {
  const MachineSpec& m = resolved.machine(name);
  bool consumes = false;
  bool provides = m.wrapperInterface && !m.wrapperInterface->requests.empty();
  for (const auto& e : resolved.consumesEdges()) {
    consumes = consumes || e.consumer == name;
    provides = provides || e.provider == name;
  }
  return classJoin(consumes ? TaxonomyClass::Consumer : TaxonomyClass::Isolated,
                   provides ? TaxonomyClass::Provider : TaxonomyClass::Isolated);
}

std::map<std::string, TaxonomyClass> classifyNetwork(const ResolvedNetwork& resolved) {
  std::map<std::string, TaxonomyClass> out;
  for (const auto& m : resolved.spec().machines) out.emplace(m.name, classifyMachine(resolved, m.name));
  return out;
}

std::string renderSignature(const RequestSignature& s) {
  std::string out = s.name + "(";
  for (size_t i = 0; i < s.parameterTypes.size(); ++i) {
    if (i) out += ", ";
    out += renderType(s.parameterTypes[i]);
  }
  out += ") -> ";
  if (s.responseTypes.empty()) out += "()";
  for (size_t i = 0; i < s.responseTypes.size(); ++i) {
    if (i) out += ", ";
    out += renderType(s.responseTypes[i]);
  }
  return out;
}

MetaInfo metaInfo(const ResolvedNetwork& resolved, const std::string& name) {
  const MachineSpec& m = resolved.machine(name);
  MetaInfo info;
  info.machineName = m.name;
  if (m.processingUnit) info.declaredStates = m.processingUnit->states;
  if (m.wrapperInterface) {
    for (const auto& r : m.wrapperInterface->requests) {
      RequestSignature sig{r.name, {}, {}};
      for (const auto& p : r.parameters) sig.parameterTypes.push_back(p.dataType);
      for (const auto& resp : r.responses) sig.responseTypes.push_back(resp.type);
      info.requestSignatures.push_back(std::move(sig));
    }
  }
  for (const auto& c : m.constraints) {
    for (const auto& p : c.properties) {
      info.constraints.push_back(p);
      if (info.description.empty() && p.key == "description" &&
          p.form == PropertyForm::AssignmentString) {
        info.description = std::get<std::string>(p.value);
      }
    }
  }
  if (info.description.empty()) {
    info.description =
        m.name + ": " + std::string(classNameLower(classifyMachine(resolved, name))) + " social machine";
  }
  return info;
}

DependencyGraph dependencyGraph(const ResolvedNetwork& resolved) {
  DependencyGraph g;
  const auto& machines = resolved.spec().machines;
  std::map<std::string, size_t> order;
  for (const auto& m : machines) {
    if (order.emplace(m.name, g.nodes.size()).second) g.nodes.push_back(m.name);
  }
  g.edges = resolved.consumesEdges();

  const size_t n = g.nodes.size();
  std::vector<std::vector<size_t>> adj(n);
  for (const auto& e : g.edges) adj[order.at(e.consumer)].push_back(order.at(e.provider));

  // Tarjan's strongly connected components.
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> onStack(n, false);
  std::vector<size_t> stack;
  int counter = 0;
  std::vector<std::vector<size_t>> components;
  std::function<void(size_t)> visit = [&](size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    onStack[v] = true;
    for (size_t w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (onStack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<size_t> comp;
      size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        onStack[w] = false;
        comp.push_back(w);
      } while (w != v);
      if (comp.size() > 1) components.push_back(std::move(comp));
    }
  };
  for (size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);

  for (auto& comp : components) std::sort(comp.begin(), comp.end());
  std::sort(components.begin(), components.end());
  for (const auto& comp : components) {
    std::vector<std::string> names;
    std::string joined;
    for (size_t v : comp) {
      names.push_back(g.nodes[v]);
      joined += (joined.empty() ? "" : ", ") + g.nodes[v];
    }
    g.diagnostics.push_back({Severity::Warning, std::string(codes::kSemDependencyCycle),
                             "machines consume each other in a cycle: " + joined,
                             resolved.machine(names.front()).span});
    g.cycles.push_back(std::move(names));
  }
  return g;
}

std::string renderDot(const ResolvedNetwork& resolved) {
  std::ostringstream os;
  os << "digraph \"" << resolved.spec().name << "\" {\n";
  for (const auto& m : resolved.spec().machines) {
    TaxonomyClass c = resolved.perMachineClass().at(m.name);
    os << "    \"" << m.name << "\" [label=\"" << m.name << "\\n" << className(c)
       << "\", class=\"" << className(c) << "\"];\n";
  }
  for (const auto& e : resolved.consumesEdges())
    os << "    \"" << e.consumer << "\" -> \"" << e.provider << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace smadl
