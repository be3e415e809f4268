#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smadl/diagnostic.hpp"
#include "smadl/model.hpp"
#include "smadl/taxonomy.hpp"

namespace smadl {

/// Raised when a machine name is not declared in the network.
class UnknownMachineError : public std::out_of_range {
 public:
  explicit UnknownMachineError(const std::string& name)
      : std::out_of_range("unknown machine '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Directed "consumes" edge: `consumer` issues requests to `provider`.
struct ConsumesEdge {
  std::string consumer;
  std::string provider;

  bool operator==(const ConsumesEdge&) const = default;
  auto operator<=>(const ConsumesEdge&) const = default;
};

/// A validated network. Only `resolve` constructs one.
class ResolvedNetwork {
 public:
  const NetworkSpec& spec() const { return spec_; }
  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  /// Throws UnknownMachineError.
  const MachineSpec& machine(const std::string& name) const;
  /// Deduplicated edges in relationship order.
  const std::vector<ConsumesEdge>& consumesEdges() const { return edges_; }
  bool hasEdge(const std::string& consumer, const std::string& provider) const;
  const std::map<std::string, TaxonomyClass>& perMachineClass() const { return classes_; }

 private:
  friend std::pair<std::optional<ResolvedNetwork>, std::vector<Diagnostic>> resolve(
      const NetworkSpec&);

  NetworkSpec spec_;
  std::map<std::string, size_t> index_;
  std::vector<ConsumesEdge> edges_;
  std::map<std::string, TaxonomyClass> classes_;
};

/// Semantic checks. Returns a network iff no error was found; warnings may
/// accompany a successful result. Diagnostics are in source order.
std::pair<std::optional<ResolvedNetwork>, std::vector<Diagnostic>> resolve(
    const NetworkSpec& network);

/// The machine consumes iff it has an outgoing edge. It provides iff it has
/// an incoming edge or its wrapper interface exposes at least one request.
/// Throws UnknownMachineError.
TaxonomyClass classifyMachine(const ResolvedNetwork& resolved, const std::string& name);
std::map<std::string, TaxonomyClass> classifyNetwork(const ResolvedNetwork& resolved);

struct RequestSignature {
  std::string name;
  std::vector<SemanticType> parameterTypes;
  std::vector<SemanticType> responseTypes;

  bool operator==(const RequestSignature&) const = default;
};

/// `name(t1, t2) -> r1, r2`
std::string renderSignature(const RequestSignature& s);

struct MetaInfo {
  std::string machineName;
  std::string description;
  std::vector<std::string> declaredStates;
  std::vector<RequestSignature> requestSignatures;
  std::vector<PropertyEntry> constraints;
};

/// Self-description of a machine. The description is the first
/// `description = "..."` constraint property, else "<name>: <class> social
/// machine". Throws UnknownMachineError.
MetaInfo metaInfo(const ResolvedNetwork& resolved, const std::string& name);

struct DependencyGraph {
  std::vector<std::string> nodes;  // declaration order
  std::vector<ConsumesEdge> edges;
  /// Strongly connected components with more than one machine, each listed
  /// in declaration order; components ordered by their first machine.
  std::vector<std::vector<std::string>> cycles;
  std::vector<Diagnostic> diagnostics;  // one SEM_DEPENDENCY_CYCLE warning per cycle
};

DependencyGraph dependencyGraph(const ResolvedNetwork& resolved);

/// Graphviz DOT rendering: nodes labelled with their class, edges from
/// consumer to provider.
std::string renderDot(const ResolvedNetwork& resolved);

}  // namespace smadl
