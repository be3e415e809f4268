#include "smadl/diagnostic.hpp"

#include <algorithm>
#include <sstream>

namespace smadl {

std::string_view severityName(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Note: return "note";
  }
  return "?";
}

const std::vector<std::string_view>& allDiagnosticCodes() {
  static const std::vector<std::string_view> all = {
      codes::kLexUnknownChar,        codes::kLexUnterminatedString,
      codes::kParseUnexpectedToken,  codes::kParseUnexpectedEof,
      codes::kParseDuplicateSection, codes::kSemDuplicateMachine,
      codes::kSemUnknownMachine,     codes::kSemSelfRelationship,
      codes::kSemDuplicateState,     codes::kSemDuplicatePort,
      codes::kSemDuplicateRequest,   codes::kSemDuplicateResponse,
      codes::kSemBadConstraint,      codes::kSemUnconsumedInterface,
      codes::kSemDependencyCycle,    codes::kScnBadLine,
      codes::kScnUnknownMachine,     codes::kScnUnknownRequest,
      codes::kScnUnknownState,       codes::kScnBadBinding,
      codes::kScnDuplicateBinding,   codes::kScnHorizon,
  };
  return all;
}

bool hasErrors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string renderDiagnostic(std::string_view file, const Diagnostic& d) {
  std::ostringstream os;
  os << file << ':' << d.span.startLine << ':' << d.span.startColumn << ": "
     << severityName(d.severity) << ' ' << d.code << ": " << d.message;
  return os.str();
}

}  // namespace smadl
