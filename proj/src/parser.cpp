#include "smadl/parser.hpp"

#include <charconv>

#include "smadl/lexer.hpp"

namespace smadl {

namespace {

// Thrown after a syntax error has been recorded; unwinds to the nearest
// recovery point.
struct SyntaxError {};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic> diags)
      : toks_(std::move(tokens)), diags_(std::move(diags)) {}

  ParseResult run() {
    std::optional<NetworkSpec> net = network();
    ParseResult result;
    if (net && !hasErrors(diags_)) result.network = std::move(net);
    result.diagnostics = std::move(diags_);
    return result;
  }

 private:
  // -- token access --------------------------------------------------------

  bool atEnd() const { return pos_ >= toks_.size(); }
  const Token& cur() const { return toks_[pos_]; }
  bool curIsPunct(std::string_view p) const { return !atEnd() && cur().isPunct(p); }
  bool curIsKeyword(std::string_view k) const { return !atEnd() && cur().isKeyword(k); }

  SourceSpan endSpan() const {
    if (toks_.empty()) return {};
    const SourceSpan& last = toks_.back().span;
    return {last.endLine, last.endColumn, last.endLine, last.endColumn};
  }

  SourceSpan prevSpan() const { return pos_ == 0 ? SourceSpan{} : toks_[pos_ - 1].span; }

  static SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
    return {a.startLine, a.startColumn, b.endLine, b.endColumn};
  }

  [[noreturn]] void fail(std::string_view expected) {
    if (atEnd()) {
      diags_.push_back({Severity::Error, std::string(codes::kParseUnexpectedEof),
                        "unexpected end of input, expected " + std::string(expected), endSpan()});
    } else {
      diags_.push_back({Severity::Error, std::string(codes::kParseUnexpectedToken),
                        "expected " + std::string(expected) + " but found '" + cur().lexeme + "'",
                        cur().span});
    }
    throw SyntaxError{};
  }

  const Token& take() { return toks_[pos_++]; }

  void expectPunct(std::string_view p) {
    if (!curIsPunct(p)) fail("'" + std::string(p) + "'");
    ++pos_;
  }

  void expectKeyword(std::string_view k) {
    if (!curIsKeyword(k)) fail("'" + std::string(k) + "'");
    ++pos_;
  }

  std::string expectIdent(std::string_view what) {
    if (atEnd() || cur().kind != TokenKind::Identifier) fail(what);
    return take().lexeme;
  }

  bool acceptPunct(std::string_view p) {
    if (!curIsPunct(p)) return false;
    ++pos_;
    return true;
  }

  void acceptSeparator() {
    if (!acceptPunct(";")) acceptPunct(",");
  }

  // Skips to the next `SocialMachine` keyword (or the end of input).
  void recover() {
    while (!atEnd() && !cur().isKeyword("SocialMachine")) ++pos_;
  }

  void duplicateSection(std::string_view what, const SourceSpan& span) {
    diags_.push_back({Severity::Error, std::string(codes::kParseDuplicateSection),
                      "duplicate " + std::string(what) + " section", span});
  }

  // -- grammar -------------------------------------------------------------

  std::optional<NetworkSpec> network() {
    NetworkSpec net;
    bool headerOk = true;
    try {
      expectKeyword("SocialMachineNetwork");
      net.span = prevSpan();
      net.name = expectIdent("network name");
      expectPunct("=");
      expectPunct("{");
    } catch (const SyntaxError&) {
      headerOk = false;
      recover();
    }

    while (true) {
      if (atEnd()) {
        // One end-of-input report is enough.
        bool reported = !diags_.empty() && diags_.back().code == codes::kParseUnexpectedEof;
        if (headerOk && !reported) {
          try {
            fail("'}' closing the network");
          } catch (const SyntaxError&) {
          }
        }
        return std::nullopt;
      }
      if (cur().isPunct("}")) {
        net.span = join(net.span, cur().span);
        ++pos_;
        break;
      }
      try {
        if (cur().isKeyword("SocialMachine")) {
          net.machines.push_back(machine(net.relationships));
        } else if (cur().isKeyword("Relationships")) {
          relationships(net.relationships);
        } else {
          fail("'SocialMachine', 'Relationships' or '}'");
        }
      } catch (const SyntaxError&) {
        if (!atEnd() && !cur().isKeyword("SocialMachine")) ++pos_;
        recover();
      }
    }
    acceptPunct(";");
    if (!atEnd()) {
      try {
        fail("end of input");
      } catch (const SyntaxError&) {
      }
      return std::nullopt;
    }
    if (!headerOk) return std::nullopt;
    return net;
  }

  MachineSpec machine(std::vector<RelationshipSpec>& rels) {
    MachineSpec m;
    expectKeyword("SocialMachine");
    SourceSpan start = prevSpan();
    m.name = expectIdent("machine name");
    expectPunct("=");
    expectPunct("{");
    while (!curIsPunct("}")) {
      if (curIsKeyword("ProcessingUnit")) {
        SourceSpan s = cur().span;
        auto pu = processingUnit();
        if (m.processingUnit) {
          duplicateSection("ProcessingUnit", s);
        } else {
          m.processingUnit = std::move(pu);
        }
      } else if (curIsKeyword("Constraint")) {
        m.constraints.push_back(constraint());
      } else if (curIsKeyword("WrapperInterface")) {
        SourceSpan s = cur().span;
        auto wi = wrapperInterface();
        if (m.wrapperInterface) {
          duplicateSection("WrapperInterface", s);
        } else {
          m.wrapperInterface = std::move(wi);
        }
      } else if (curIsKeyword("Relationships")) {
        relationships(rels);
      } else {
        fail("'ProcessingUnit', 'Constraint', 'WrapperInterface', 'Relationships' or '}'");
      }
      acceptPunct(";");
    }
    ++pos_;
    m.span = join(start, prevSpan());
    acceptPunct(";");
    return m;
  }

  SemanticType type() {
    SemanticType t;
    t.base = expectIdent("type name");
    if (acceptPunct("[")) {
      expectPunct("]");
      t.isArray = true;
    }
    return t;
  }

  PortSpec port(PortDirection dir) {
    PortSpec p;
    p.direction = dir;
    ++pos_;  // Input / Output
    p.name = expectIdent("port name");
    expectPunct(":");
    p.dataType = type();
    acceptPunct(";");
    return p;
  }

  ProcessingUnitSpec processingUnit() {
    ProcessingUnitSpec pu;
    expectKeyword("ProcessingUnit");
    SourceSpan start = prevSpan();
    pu.name = expectIdent("processing unit name");
    expectPunct("=");
    expectPunct("{");
    while (!curIsPunct("}")) {
      if (curIsKeyword("Input")) {
        pu.inputs.push_back(port(PortDirection::Input));
      } else if (curIsKeyword("Output")) {
        pu.outputs.push_back(port(PortDirection::Output));
      } else if (curIsKeyword("States")) {
        ++pos_;
        expectPunct("{");
        while (!curIsPunct("}")) {
          if (!atEnd() && (cur().kind == TokenKind::Identifier || cur().kind == TokenKind::String)) {
            pu.states.push_back(take().lexeme);
          } else {
            fail("state name");
          }
          acceptSeparator();
        }
        ++pos_;
        acceptPunct(";");
      } else {
        fail("'Input', 'Output', 'States' or '}'");
      }
    }
    ++pos_;
    pu.span = join(start, prevSpan());
    return pu;
  }

  std::optional<ComparisonOp> relop() const {
    if (atEnd() || cur().kind != TokenKind::Punct) return std::nullopt;
    const std::string& p = cur().lexeme;
    if (p == "<") return ComparisonOp::Less;
    if (p == "<=") return ComparisonOp::LessEqual;
    if (p == ">") return ComparisonOp::Greater;
    if (p == ">=") return ComparisonOp::GreaterEqual;
    if (p == "==") return ComparisonOp::Equal;
    if (p == "!=") return ComparisonOp::NotEqual;
    return std::nullopt;
  }

  double numberValue(const Token& t) {
    double v = 0;
    std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), v);
    return v;
  }

  PropertyEntry property(bool keywordRequired) {
    PropertyEntry p;
    SourceSpan start = atEnd() ? endSpan() : cur().span;
    if (keywordRequired) {
      expectKeyword("Property");
    } else if (curIsKeyword("Property")) {
      ++pos_;
    }
    p.key = expectIdent("property name");
    if (acceptPunct("=")) {
      if (!atEnd() && cur().kind == TokenKind::String) {
        p.form = PropertyForm::AssignmentString;
        p.value = take().lexeme;
      } else if (!atEnd() && cur().kind == TokenKind::Number) {
        p.form = PropertyForm::AssignmentNumber;
        p.value = numberValue(take());
      } else {
        fail("string or number");
      }
    } else if (auto op = relop()) {
      ++pos_;
      p.form = PropertyForm::Comparison;
      p.op = op;
      if (!atEnd() && cur().kind == TokenKind::Number) {
        p.value = numberValue(take());
      } else if (!atEnd() &&
                 (cur().kind == TokenKind::String || cur().kind == TokenKind::Identifier)) {
        // Not numeric; reported by the analyzer.
        p.value = take().lexeme;
      } else {
        fail("number");
      }
    } else if (acceptPunct(":")) {
      p.form = PropertyForm::TypedDeclaration;
      p.value = type();
    } else {
      fail("'=', ':' or a comparison operator");
    }
    p.span = join(start, prevSpan());
    return p;
  }

  ConstraintSpec constraint() {
    ConstraintSpec c;
    expectKeyword("Constraint");
    c.name = expectIdent("constraint name");
    expectPunct("=");
    expectPunct("{");
    while (!curIsPunct("}")) {
      c.properties.push_back(property(true));
      acceptSeparator();
    }
    ++pos_;
    return c;
  }

  RequestSpec request() {
    RequestSpec r;
    expectKeyword("Request");
    SourceSpan start = prevSpan();
    r.name = expectIdent("request name");
    expectPunct("=");
    expectPunct("{");
    bool sawParameters = false;
    while (!curIsPunct("}")) {
      if (curIsKeyword("Parameters")) {
        SourceSpan s = cur().span;
        ++pos_;
        expectPunct("{");
        std::vector<PortSpec> params;
        while (!curIsPunct("}")) {
          PortSpec p;
          p.name = expectIdent("parameter name");
          expectPunct(":");
          p.dataType = type();
          params.push_back(std::move(p));
          acceptSeparator();
        }
        ++pos_;
        if (sawParameters) {
          duplicateSection("Parameters", s);
        } else {
          r.parameters = std::move(params);
          sawParameters = true;
        }
      } else if (curIsKeyword("Response")) {
        ++pos_;
        ResponseSpec resp;
        resp.name = expectIdent("response name");
        expectPunct(":");
        resp.type = type();
        r.responses.push_back(std::move(resp));
      } else if (curIsKeyword("Property")) {
        r.properties.push_back(property(true));
      } else {
        fail("'Parameters', 'Response', 'Property' or '}'");
      }
      acceptPunct(";");
    }
    ++pos_;
    r.span = join(start, prevSpan());
    acceptPunct(";");
    return r;
  }

  WrapperInterfaceSpec wrapperInterface() {
    WrapperInterfaceSpec wi;
    expectKeyword("WrapperInterface");
    wi.name = expectIdent("wrapper interface name");
    expectPunct("=");
    expectPunct("{");
    while (!curIsPunct("}")) {
      if (!curIsKeyword("Request")) fail("'Request' or '}'");
      wi.requests.push_back(request());
    }
    ++pos_;
    return wi;
  }

  void relationships(std::vector<RelationshipSpec>& out) {
    expectKeyword("Relationships");
    expectPunct("{");
    while (!curIsPunct("}")) {
      if (!curIsPunct("(")) fail("'(' or '}'");
      out.push_back(relationship());
    }
    ++pos_;
    acceptPunct(";");
  }

  RelationshipSpec relationship() {
    RelationshipSpec r;
    expectPunct("(");
    SourceSpan start = prevSpan();
    r.fromMachine = expectIdent("machine name");
    if (atEnd() || !cur().is(TokenKind::Identifier, "to")) fail("'to'");
    ++pos_;
    r.toMachine = expectIdent("machine name");
    expectPunct(")");
    SourceSpan head = join(start, prevSpan());
    expectPunct("=");
    expectPunct("{");
    if (curIsKeyword("ConnectionSettings")) {
      ++pos_;
      expectPunct("{");
      while (!curIsPunct("}")) {
        r.connectionSettings.push_back(property(false));
        acceptSeparator();
      }
      ++pos_;
      acceptPunct(";");
    }
    expectPunct("}");
    acceptPunct(";");
    r.span = head;
    return r;
  }

  std::vector<Token> toks_;
  std::vector<Diagnostic> diags_;
  size_t pos_ = 0;
};

}  // namespace

ParseResult parse(std::string_view source) {
  auto lexed = tokenize(source);
  return Parser(std::move(lexed.tokens), std::move(lexed.diagnostics)).run();
}

}  // namespace smadl
