#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace smadl {

/// 1-based, inclusive start, exclusive end column on the end line.
struct SourceSpan {
  int startLine = 1;
  int startColumn = 1;
  int endLine = 1;
  int endColumn = 1;

  bool operator==(const SourceSpan&) const = default;
};

enum class Severity { Error, Warning, Note };

std::string_view severityName(Severity s);

// The closed set of diagnostic codes.
namespace codes {
inline constexpr std::string_view kLexUnknownChar = "LEX_UNKNOWN_CHAR";
inline constexpr std::string_view kLexUnterminatedString = "LEX_UNTERMINATED_STRING";
inline constexpr std::string_view kParseUnexpectedToken = "PARSE_UNEXPECTED_TOKEN";
inline constexpr std::string_view kParseUnexpectedEof = "PARSE_UNEXPECTED_EOF";
inline constexpr std::string_view kParseDuplicateSection = "PARSE_DUPLICATE_SECTION";
inline constexpr std::string_view kSemDuplicateMachine = "SEM_DUPLICATE_MACHINE";
inline constexpr std::string_view kSemUnknownMachine = "SEM_UNKNOWN_MACHINE";
inline constexpr std::string_view kSemSelfRelationship = "SEM_SELF_RELATIONSHIP";
inline constexpr std::string_view kSemDuplicateState = "SEM_DUPLICATE_STATE";
inline constexpr std::string_view kSemDuplicatePort = "SEM_DUPLICATE_PORT";
inline constexpr std::string_view kSemDuplicateRequest = "SEM_DUPLICATE_REQUEST";
inline constexpr std::string_view kSemDuplicateResponse = "SEM_DUPLICATE_RESPONSE";
inline constexpr std::string_view kSemBadConstraint = "SEM_BAD_CONSTRAINT";
inline constexpr std::string_view kSemUnconsumedInterface = "SEM_UNCONSUMED_INTERFACE";
inline constexpr std::string_view kSemDependencyCycle = "SEM_DEPENDENCY_CYCLE";
inline constexpr std::string_view kScnBadLine = "SCN_BAD_LINE";
inline constexpr std::string_view kScnUnknownMachine = "SCN_UNKNOWN_MACHINE";
inline constexpr std::string_view kScnUnknownRequest = "SCN_UNKNOWN_REQUEST";
inline constexpr std::string_view kScnUnknownState = "SCN_UNKNOWN_STATE";
inline constexpr std::string_view kScnBadBinding = "SCN_BAD_BINDING";
inline constexpr std::string_view kScnDuplicateBinding = "SCN_DUPLICATE_BINDING";
inline constexpr std::string_view kScnHorizon = "SCN_HORIZON";
}  // namespace codes

/// Every code in codes::.
const std::vector<std::string_view>& allDiagnosticCodes();

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;

  bool operator==(const Diagnostic&) const = default;
};

bool hasErrors(const std::vector<Diagnostic>& diags);

/// `<file>:<line>:<col>: <severity> <code>: <message>`
std::string renderDiagnostic(std::string_view file, const Diagnostic& d);

}  // namespace smadl
