#include "smadl/lexer.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace smadl {

namespace {

constexpr std::array<std::string_view, 14> kKeywords = {
    "SocialMachineNetwork", "SocialMachine", "ProcessingUnit", "Input",
    "Output",               "States",        "Constraint",     "Property",
    "WrapperInterface",     "Request",       "Parameters",     "Response",
    "Relationships",        "ConnectionSettings"};

bool isIdentStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool isIdentChar(char c) { return isIdentStart(c) || (c >= '0' && c <= '9'); }
bool isDigit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  TokenizeResult run() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (isIdentStart(c)) {
        word();
      } else if (isDigit(c) || (c == '-' && isDigit(peek(1)))) {
        number();
      } else if (c == '"') {
        string();
      } else if (!punct()) {
        unknown();
      }
    }
    return std::move(out_);
  }

 private:
  char peek(size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    unsigned char c = static_cast<unsigned char>(src_[pos_]);
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((c & 0xC0) != 0x80) {  // UTF-8 continuation bytes share a column
      ++col_;
    }
    ++pos_;
  }

  SourceSpan spanFrom(int line, int col) const { return {line, col, line_, col_}; }

  void emit(TokenKind kind, std::string lexeme, int line, int col) {
    out_.tokens.push_back({kind, std::move(lexeme), spanFrom(line, col)});
  }

  void word() {
    int line = line_, col = col_;
    size_t start = pos_;
    while (pos_ < src_.size() && isIdentChar(src_[pos_])) advance();
    std::string text(src_.substr(start, pos_ - start));
    TokenKind kind = isKeyword(text) ? TokenKind::Keyword : TokenKind::Identifier;
    emit(kind, std::move(text), line, col);
  }

  void number() {
    int line = line_, col = col_;
    size_t start = pos_;
    if (src_[pos_] == '-') advance();
    while (pos_ < src_.size() && isDigit(src_[pos_])) advance();
    if (peek(0) == '.' && isDigit(peek(1))) {
      advance();
      while (pos_ < src_.size() && isDigit(src_[pos_])) advance();
    }
    emit(TokenKind::Number, std::string(src_.substr(start, pos_ - start)), line, col);
  }

  void string() {
    int line = line_, col = col_;
    advance();  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        out_.diagnostics.push_back({Severity::Error, std::string(codes::kLexUnterminatedString),
                                    "unterminated string literal", spanFrom(line, col)});
        return;
      }
      char c = src_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] != '\n') {
        advance();
        char e = src_[pos_];
        value += e == 'n' ? '\n' : e == 't' ? '\t' : e;
        advance();
        continue;
      }
      value += c;
      advance();
    }
    emit(TokenKind::String, std::move(value), line, col);
  }

  bool punct() {
    static constexpr std::array<std::string_view, 4> kTwo = {"<=", ">=", "==", "!="};
    static constexpr std::string_view kOne = "={}():;,<>[]";
    int line = line_, col = col_;
    for (auto p : kTwo) {
      if (src_.substr(pos_, 2) == p) {
        advance();
        advance();
        emit(TokenKind::Punct, std::string(p), line, col);
        return true;
      }
    }
    if (kOne.find(src_[pos_]) != std::string_view::npos) {
      std::string p(1, src_[pos_]);
      advance();
      emit(TokenKind::Punct, std::move(p), line, col);
      return true;
    }
    return false;
  }

  // Skips one character, treating a UTF-8 multi-byte sequence as a unit.
  void unknown() {
    int line = line_, col = col_;
    size_t start = pos_;
    advance();
    while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80) advance();
    std::string shown(src_.substr(start, pos_ - start));
    if (shown.size() == 1 && static_cast<unsigned char>(shown[0]) < 0x20) {
      char hex[8];
      std::snprintf(hex, sizeof hex, "\\x%02x", static_cast<unsigned char>(shown[0]));
      shown = hex;
    }
    out_.diagnostics.push_back({Severity::Error, std::string(codes::kLexUnknownChar),
                                "unexpected character '" + shown + "'", spanFrom(line, col)});
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  TokenizeResult out_;
};

}  // namespace

bool isKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool isPlainIdentifier(std::string_view text) {
  if (text.empty() || !isIdentStart(text[0]) || isKeyword(text)) return false;
  return std::all_of(text.begin(), text.end(), isIdentChar);
}

TokenizeResult tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace smadl
