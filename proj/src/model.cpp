#include "smadl/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace smadl {

std::string renderType(const SemanticType& t) {
  return t.isArray ? t.base + "[]" : t.base;
}

std::string_view opSymbol(ComparisonOp op) {
  switch (op) {
    case ComparisonOp::Less: return "<";
    case ComparisonOp::LessEqual: return "<=";
    case ComparisonOp::Greater: return ">";
    case ComparisonOp::GreaterEqual: return ">=";
    case ComparisonOp::Equal: return "==";
    case ComparisonOp::NotEqual: return "!=";
  }
  return "?";
}

bool compare(double lhs, ComparisonOp op, double rhs) {
  switch (op) {
    case ComparisonOp::Less: return lhs < rhs;
    case ComparisonOp::LessEqual: return lhs <= rhs;
    case ComparisonOp::Greater: return lhs > rhs;
    case ComparisonOp::GreaterEqual: return lhs >= rhs;
    case ComparisonOp::Equal: return lhs == rhs;
    case ComparisonOp::NotEqual: return lhs != rhs;
  }
  return false;
}

std::string renderNumber(double v) {
  // Fixed notation: the lexer has no exponent syntax.
  char buf[512];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

std::string quoteString(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

namespace {

std::string renderValue(const PropertyValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return quoteString(*s);
  if (const auto* d = std::get_if<double>(&v)) return renderNumber(*d);
  return renderType(std::get<SemanticType>(v));
}

}  // namespace

std::string renderProperty(const PropertyEntry& p) {
  switch (p.form) {
    case PropertyForm::AssignmentString:
    case PropertyForm::AssignmentNumber:
      return p.key + " = " + renderValue(p.value);
    case PropertyForm::TypedDeclaration:
      return p.key + ": " + renderValue(p.value);
    case PropertyForm::Comparison:
      return p.key + " " + std::string(opSymbol(p.op.value_or(ComparisonOp::Equal))) + " " +
             renderValue(p.value);
  }
  return p.key;
}

const RequestSpec* WrapperInterfaceSpec::find(std::string_view request) const {
  auto it = std::find_if(requests.begin(), requests.end(),
                         [&](const RequestSpec& r) { return r.name == request; });
  return it == requests.end() ? nullptr : &*it;
}

bool MachineSpec::declaresState(std::string_view state) const {
  if (!processingUnit) return false;
  const auto& s = processingUnit->states;
  return std::find(s.begin(), s.end(), state) != s.end();
}

const RequestSpec* MachineSpec::findRequest(std::string_view request) const {
  return wrapperInterface ? wrapperInterface->find(request) : nullptr;
}

NetworkSpec withoutSpans(NetworkSpec n) {
  auto clearProps = [](std::vector<PropertyEntry>& props) {
    for (auto& p : props) p.span = {};
  };
  n.span = {};
  for (auto& m : n.machines) {
    m.span = {};
    if (m.processingUnit) m.processingUnit->span = {};
    for (auto& c : m.constraints) clearProps(c.properties);
    if (m.wrapperInterface) {
      for (auto& r : m.wrapperInterface->requests) {
        r.span = {};
        clearProps(r.properties);
      }
    }
  }
  for (auto& r : n.relationships) {
    r.span = {};
    clearProps(r.connectionSettings);
  }
  return n;
}

bool structurallyEqual(const NetworkSpec& a, const NetworkSpec& b) {
  return withoutSpans(a) == withoutSpans(b);
}

}  // namespace smadl
