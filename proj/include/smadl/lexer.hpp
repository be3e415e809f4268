#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smadl/diagnostic.hpp"

namespace smadl {

enum class TokenKind { Identifier, Keyword, String, Number, Punct };

struct Token {
  TokenKind kind = TokenKind::Identifier;
  // Identifier/keyword/punctuation text, the decoded contents of a string
  // literal, or the digits of a number.
  std::string lexeme;
  SourceSpan span;

  bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
  bool isPunct(std::string_view p) const { return is(TokenKind::Punct, p); }
  bool isKeyword(std::string_view kw) const { return is(TokenKind::Keyword, kw); }
};

bool isKeyword(std::string_view word);
/// True for text the lexer reads back as one identifier token.
bool isPlainIdentifier(std::string_view text);

struct TokenizeResult {
  std::vector<Token> tokens;
  std::vector<Diagnostic> diagnostics;
};

/// Splits SMADL source into tokens. `//` comments and whitespace are
/// dropped; unknown characters are reported and skipped.
TokenizeResult tokenize(std::string_view source);

}  // namespace smadl
