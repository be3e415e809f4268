#include <sstream>

#include "smadl/lexer.hpp"
#include "smadl/parser.hpp"

namespace smadl {

namespace {

class Printer {
 public:
  std::string run(const NetworkSpec& n) {
    line("SocialMachineNetwork " + n.name + " = {");
    ++depth_;
    for (const auto& m : n.machines) machine(m);
    if (!n.relationships.empty()) {
      line("Relationships {");
      ++depth_;
      for (const auto& r : n.relationships) relationship(r);
      close();
    }
    close();
    return os_.str();
  }

 private:
  void line(const std::string& text) {
    os_ << std::string(static_cast<size_t>(depth_) * 4, ' ') << text << '\n';
  }

  void close() {
    --depth_;
    line("}");
  }

  static std::string state(const std::string& s) {
    return isPlainIdentifier(s) ? s : quoteString(s);
  }

  static std::string port(const PortSpec& p) { return p.name + ": " + renderType(p.dataType); }

  void machine(const MachineSpec& m) {
    line("SocialMachine " + m.name + " = {");
    ++depth_;
    if (m.processingUnit) {
      const auto& pu = *m.processingUnit;
      line("ProcessingUnit " + pu.name + " = {");
      ++depth_;
      for (const auto& p : pu.inputs) line("Input " + port(p) + ";");
      for (const auto& p : pu.outputs) line("Output " + port(p) + ";");
      if (!pu.states.empty()) {
        std::string s = "States {";
        for (size_t i = 0; i < pu.states.size(); ++i) {
          if (i) s += "; ";
          s += state(pu.states[i]);
        }
        line(s + "};");
      }
      close();
    }
    for (const auto& c : m.constraints) {
      line("Constraint " + c.name + " = {");
      ++depth_;
      for (const auto& p : c.properties) line("Property " + renderProperty(p) + ";");
      close();
    }
    if (m.wrapperInterface) {
      line("WrapperInterface " + m.wrapperInterface->name + " = {");
      ++depth_;
      for (const auto& r : m.wrapperInterface->requests) request(r);
      close();
    }
    close();
  }

  void request(const RequestSpec& r) {
    line("Request " + r.name + " = {");
    ++depth_;
    if (!r.parameters.empty()) {
      std::string s = "Parameters {";
      for (size_t i = 0; i < r.parameters.size(); ++i) {
        if (i) s += "; ";
        s += port(r.parameters[i]);
      }
      line(s + "};");
    }
    for (const auto& resp : r.responses) line("Response " + resp.name + ": " + renderType(resp.type) + ";");
    for (const auto& p : r.properties) line("Property " + renderProperty(p) + ";");
    close();
  }

  void relationship(const RelationshipSpec& r) {
    line("(" + r.fromMachine + " to " + r.toMachine + ") = {");
    ++depth_;
    if (!r.connectionSettings.empty()) {
      line("ConnectionSettings {");
      ++depth_;
      for (const auto& p : r.connectionSettings) line(renderProperty(p) + ";");
      close();
    }
    close();
  }

  std::ostringstream os_;
  int depth_ = 0;
};

}  // namespace

std::string format(const NetworkSpec& network) { return Printer().run(network); }

}  // namespace smadl
