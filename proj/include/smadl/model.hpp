#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smadl/diagnostic.hpp"

namespace smadl {

// Abstract syntax of one SMADL document. Lists keep source order; the
// formatter relies on it.

struct SemanticType {
  std::string base;  // string, int, float, bool, json, xml, or any identifier
  bool isArray = false;

  bool operator==(const SemanticType&) const = default;
};

std::string renderType(const SemanticType& t);

enum class PortDirection { Input, Output };

struct PortSpec {
  std::string name;
  SemanticType dataType;
  PortDirection direction = PortDirection::Input;

  bool operator==(const PortSpec&) const = default;
};

enum class PropertyForm { AssignmentString, AssignmentNumber, TypedDeclaration, Comparison };

enum class ComparisonOp { Less, LessEqual, Greater, GreaterEqual, Equal, NotEqual };

std::string_view opSymbol(ComparisonOp op);
bool compare(double lhs, ComparisonOp op, double rhs);

using PropertyValue = std::variant<std::string, double, SemanticType>;

struct PropertyEntry {
  std::string key;
  PropertyForm form = PropertyForm::AssignmentString;
  std::optional<ComparisonOp> op;  // set iff form == Comparison
  PropertyValue value;
  SourceSpan span;

  bool operator==(const PropertyEntry&) const = default;

  bool isNumericComparison() const {
    return form == PropertyForm::Comparison && op && std::holds_alternative<double>(value);
  }
};

/// Double-quoted literal with `\"`, `\\`, `\n` and `\t` escapes.
std::string quoteString(const std::string& s);
/// Shortest text that reads back as the same double ("5000", "0.25").
std::string renderNumber(double v);
/// `key = "v"`, `key = 3`, `key: int[]`, `key < 5000`; no `Property` keyword.
std::string renderProperty(const PropertyEntry& p);

struct ConstraintSpec {
  std::string name;
  std::vector<PropertyEntry> properties;

  bool operator==(const ConstraintSpec&) const = default;
};

struct ProcessingUnitSpec {
  std::string name;
  std::vector<PortSpec> inputs;
  std::vector<PortSpec> outputs;
  std::vector<std::string> states;
  SourceSpan span;

  bool operator==(const ProcessingUnitSpec&) const = default;
};

struct ResponseSpec {
  std::string name;
  SemanticType type;

  bool operator==(const ResponseSpec&) const = default;
};

struct RequestSpec {
  std::string name;
  std::vector<PortSpec> parameters;
  std::vector<ResponseSpec> responses;
  std::vector<PropertyEntry> properties;
  SourceSpan span;

  bool operator==(const RequestSpec&) const = default;
};

struct WrapperInterfaceSpec {
  std::string name;
  std::vector<RequestSpec> requests;

  bool operator==(const WrapperInterfaceSpec&) const = default;

  const RequestSpec* find(std::string_view request) const;
};

struct MachineSpec {
  std::string name;
  std::optional<ProcessingUnitSpec> processingUnit;
  std::vector<ConstraintSpec> constraints;
  std::optional<WrapperInterfaceSpec> wrapperInterface;
  SourceSpan span;

  bool operator==(const MachineSpec&) const = default;

  bool declaresState(std::string_view state) const;
  const RequestSpec* findRequest(std::string_view request) const;
};

struct RelationshipSpec {
  std::string fromMachine;  // the consumer
  std::string toMachine;    // the provider
  std::vector<PropertyEntry> connectionSettings;
  SourceSpan span;

  bool operator==(const RelationshipSpec&) const = default;
};

struct NetworkSpec {
  std::string name;
  std::vector<MachineSpec> machines;
  std::vector<RelationshipSpec> relationships;
  SourceSpan span;

  bool operator==(const NetworkSpec&) const = default;
};

/// Copy of `n` with every source span reset, for comparing documents that
/// differ only in layout.
NetworkSpec withoutSpans(NetworkSpec n);
bool structurallyEqual(const NetworkSpec& a, const NetworkSpec& b);

}  // namespace smadl
