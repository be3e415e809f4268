#include "smadl/scenario.hpp"

#include <algorithm>
#include <charconv>

namespace smadl {

namespace {

SourceSpan lineSpan(int line, size_t length) {
  return {line, 1, line, static_cast<int>(length) + 1};
}

Diagnostic scnError(std::string_view code, std::string message, SourceSpan span) {
  return {Severity::Error, std::string(code), std::move(message), span};
}

// Splits on whitespace; double quotes group and are removed; `#` outside
// quotes ends the line. Returns false on an unbalanced quote.
bool splitWords(std::string_view line, std::vector<std::string>& out) {
  std::string word;
  bool inWord = false, quoted = false;
  for (char c : line) {
    if (quoted) {
      if (c == '"') {
        quoted = false;
      } else {
        word += c;
      }
    } else if (c == '"') {
      quoted = inWord = true;
    } else if (c == '#') {
      break;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      if (inWord) out.push_back(std::move(word));
      word.clear();
      inWord = false;
    } else {
      word += c;
      inWord = true;
    }
  }
  if (quoted) return false;
  if (inWord) out.push_back(std::move(word));
  return true;
}

std::optional<Tick> parseTick(const std::string& s) {
  Tick v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0) return std::nullopt;
  return v;
}

std::optional<BindingKey> splitTarget(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == s.size() ||
      s.find('.', dot + 1) != std::string::npos)
    return std::nullopt;
  return BindingKey{s.substr(0, dot), s.substr(dot + 1)};
}

std::optional<Behavior> parseBehavior(const std::string& s) {
  constexpr std::string_view kPrefix = "builtin:";
  if (s.rfind(kPrefix, 0) != 0) return std::nullopt;
  std::string_view rest = std::string_view(s).substr(kPrefix.size());
  Behavior b;
  if (rest == "succ") {
    b.kind = Behavior::Kind::Succ;
  } else if (rest == "echo") {
    b.kind = Behavior::Kind::Echo;
  } else if (rest.rfind("const:", 0) == 0) {
    b.kind = Behavior::Kind::Const;
    b.constValue = std::string(rest.substr(6));
  } else if (rest.rfind("forward:", 0) == 0) {
    auto target = splitTarget(std::string(rest.substr(8)));
    if (!target) return std::nullopt;
    b.kind = Behavior::Kind::Forward;
    b.targetMachine = target->first;
    b.targetRequest = target->second;
  } else {
    return std::nullopt;
  }
  return b;
}

struct Checker {
  const ResolvedNetwork& net;
  std::vector<Diagnostic>& diags;

  bool machine(const std::string& name, const SourceSpan& span) {
    if (net.contains(name)) return true;
    diags.push_back(scnError(codes::kScnUnknownMachine, "unknown machine '" + name + "'", span));
    return false;
  }

  bool request(const std::string& m, const std::string& r, const SourceSpan& span) {
    if (!machine(m, span)) return false;
    if (net.machine(m).findRequest(r)) return true;
    diags.push_back(scnError(codes::kScnUnknownRequest,
                             "machine '" + m + "' declares no request '" + r + "'", span));
    return false;
  }

  void binding(const BindingKey& key, const Behavior& b, const SourceSpan& span) {
    if (!request(key.first, key.second, span)) return;
    if (b.kind != Behavior::Kind::Forward) return;
    if (!request(b.targetMachine, b.targetRequest, span)) return;
    if (!net.hasEdge(key.first, b.targetMachine)) {
      diags.push_back(scnError(codes::kScnBadBinding,
                               "'" + key.first + "' has no relationship to '" + b.targetMachine +
                                   "' and cannot forward to it",
                               span));
    }
  }

  void event(const ScenarioEvent& e, const SourceSpan& span) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, RequestStimulus>) {
            request(s.machine, s.request, span);
          } else if constexpr (std::is_same_v<T, SetStateStimulus>) {
            if (machine(s.machine, span) && !net.machine(s.machine).declaresState(s.state)) {
              diags.push_back(scnError(codes::kScnUnknownState,
                                       "machine '" + s.machine + "' declares no state '" +
                                           s.state + "'",
                                       span));
            }
          } else if constexpr (std::is_same_v<T, DownStimulus>) {
            if (machine(s.machine, span) && s.duration < 1) {
              diags.push_back(scnError(codes::kScnBadLine, "down duration must be positive", span));
            }
          } else {
            machine(s.machine, span);
          }
        },
        e.stimulus);
  }
};

void finish(Scenario& sc, std::vector<Diagnostic>& diags, std::optional<Tick> horizon) {
  std::stable_sort(sc.events.begin(), sc.events.end(),
                   [](const ScenarioEvent& a, const ScenarioEvent& b) { return a.time < b.time; });
  Tick latest = sc.events.empty() ? 0 : sc.events.back().time;
  if (horizon) {
    if (*horizon < latest) {
      diags.push_back(scnError(codes::kScnHorizon,
                               "horizon " + std::to_string(*horizon) +
                                   " is before the last scenario event at " + std::to_string(latest),
                               {}));
    }
    sc.config.horizon = *horizon;
  } else {
    sc.config.horizon = std::max(sc.config.horizon, latest);
  }
}

}  // namespace

std::string_view metaQueryName(MetaQuery q) {
  switch (q) {
    case MetaQuery::WhoAmI: return "whoami";
    case MetaQuery::State: return "state";
    case MetaQuery::Constraints: return "constraints";
    case MetaQuery::Signatures: return "signatures";
  }
  return "?";
}

std::optional<MetaQuery> parseMetaQuery(std::string_view text) {
  for (MetaQuery q : {MetaQuery::WhoAmI, MetaQuery::State, MetaQuery::Constraints, MetaQuery::Signatures})
    if (metaQueryName(q) == text) return q;
  return std::nullopt;
}

std::string renderBehavior(const Behavior& b) {
  switch (b.kind) {
    case Behavior::Kind::Succ: return "builtin:succ";
    case Behavior::Kind::Echo: return "builtin:echo";
    case Behavior::Kind::Const: return "builtin:const:" + b.constValue;
    case Behavior::Kind::Forward: return "builtin:forward:" + b.targetMachine + "." + b.targetRequest;
  }
  return "?";
}

std::pair<std::optional<Scenario>, std::vector<Diagnostic>> loadScenario(
    std::string_view text, const ResolvedNetwork& network, const ScenarioOptions& options) {
  std::vector<Diagnostic> diags;
  Checker check{network, diags};
  Scenario sc;
  sc.config.seed = options.seed;
  sc.config.defaultLatency = options.defaultLatency;

  int lineNo = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineNo;
    SourceSpan span = lineSpan(lineNo, line.size());

    std::vector<std::string> w;
    if (!splitWords(line, w)) {
      diags.push_back(scnError(codes::kScnBadLine, "unbalanced quote", span));
      continue;
    }
    if (w.empty()) continue;

    auto bad = [&](const std::string& why) {
      diags.push_back(scnError(codes::kScnBadLine, why, span));
    };
    if (w.size() < 3 || w[0] != "at") {
      bad("expected 'at <tick> <command> ...'");
      continue;
    }
    auto tick = parseTick(w[1]);
    if (!tick) {
      bad("bad tick '" + w[1] + "'");
      continue;
    }
    const std::string& cmd = w[2];
    ScenarioEvent ev;
    ev.time = *tick;
    ev.line = lineNo;

    if (cmd == "bind") {
      if (w.size() != 5) {
        bad("usage: bind <machine>.<request> builtin:<behavior>");
        continue;
      }
      auto key = splitTarget(w[3]);
      auto behavior = parseBehavior(w[4]);
      if (!key || !behavior) {
        bad("bad binding '" + w[3] + " " + w[4] + "'");
        continue;
      }
      if (sc.bindings.count(*key)) {
        diags.push_back(scnError(codes::kScnDuplicateBinding,
                                 "'" + w[3] + "' is already bound", span));
        continue;
      }
      check.binding(*key, *behavior, span);
      sc.bindings.emplace(*key, *behavior);
      continue;
    } else if (cmd == "request") {
      std::optional<BindingKey> target;
      if (w.size() < 5 || !(target = splitTarget(w[4]))) {
        bad("usage: request <client> <machine>.<request> [<arg>...]");
        continue;
      }
      ev.stimulus = RequestStimulus{w[3], target->first, target->second,
                                    std::vector<std::string>(w.begin() + 5, w.end())};
    } else if (cmd == "meta") {
      std::optional<MetaQuery> q;
      if (w.size() != 6 || !(q = parseMetaQuery(w[5]))) {
        bad("usage: meta <client> <machine> <whoami|state|constraints|signatures>");
        continue;
      }
      ev.stimulus = MetaStimulus{w[3], w[4], *q};
    } else if (cmd == "subscribe") {
      if (w.size() != 5) {
        bad("usage: subscribe <client> <machine>");
        continue;
      }
      ev.stimulus = SubscribeStimulus{w[3], w[4]};
    } else if (cmd == "down") {
      std::optional<Tick> d;
      if (w.size() != 5 || !(d = parseTick(w[4]))) {
        bad("usage: down <machine> <duration-ticks>");
        continue;
      }
      ev.stimulus = DownStimulus{w[3], *d};
    } else if (cmd == "up") {
      if (w.size() != 4) {
        bad("usage: up <machine>");
        continue;
      }
      ev.stimulus = UpStimulus{w[3]};
    } else if (cmd == "state") {
      if (w.size() != 5) {
        bad("usage: state <machine> \"<state>\"");
        continue;
      }
      ev.stimulus = SetStateStimulus{w[3], w[4]};
    } else {
      bad("unknown command '" + cmd + "'");
      continue;
    }
    check.event(ev, span);
    sc.events.push_back(std::move(ev));
  }

  finish(sc, diags, options.horizon);
  if (hasErrors(diags)) return {std::nullopt, std::move(diags)};
  return {std::move(sc), std::move(diags)};
}

std::vector<Diagnostic> validateScenario(Scenario& scenario, const ResolvedNetwork& network) {
  std::vector<Diagnostic> diags;
  Checker check{network, diags};
  for (const auto& [key, b] : scenario.bindings) check.binding(key, b, {});
  for (const auto& e : scenario.events) check.event(e, lineSpan(e.line == 0 ? 1 : e.line, 0));
  std::optional<Tick> horizon = scenario.config.horizon;
  finish(scenario, diags, horizon);
  return diags;
}

}  // namespace smadl
