#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smadl/diagnostic.hpp"
#include "smadl/model.hpp"

namespace smadl {

struct ParseResult {
  std::optional<NetworkSpec> network;  // present iff no error diagnostics
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return network.has_value(); }
};

/// Parses one SMADL document. After a syntax error the parser resumes at the
/// next `SocialMachine` keyword, so one pass reports errors from several
/// machines.
ParseResult parse(std::string_view source);

/// Canonical SMADL text for `network`: 4-space indentation, one declaration
/// per line, opening braces at line end.
std::string format(const NetworkSpec& network);

}  // namespace smadl
