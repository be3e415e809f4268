#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "smadl/analyzer.hpp"
#include "smadl/diagnostic.hpp"

namespace smadl {

/// Simulated time; one tick is one second.
using Tick = std::int64_t;

inline constexpr Tick kTicksPerHour = 3600;

enum class MetaQuery { WhoAmI, State, Constraints, Signatures };

std::string_view metaQueryName(MetaQuery q);
std::optional<MetaQuery> parseMetaQuery(std::string_view text);

/// What a machine does when one of its requests is invoked.
struct Behavior {
  enum class Kind { Succ, Echo, Const, Forward };

  Kind kind = Kind::Echo;
  std::string constValue;     // Const
  std::string targetMachine;  // Forward
  std::string targetRequest;  // Forward

  bool operator==(const Behavior&) const = default;
};

std::string renderBehavior(const Behavior& b);

/// (machine, request)
using BindingKey = std::pair<std::string, std::string>;

struct RequestStimulus {
  std::string client;
  std::string machine;
  std::string request;
  std::vector<std::string> arguments;

  bool operator==(const RequestStimulus&) const = default;
};

struct MetaStimulus {
  std::string client;
  std::string machine;
  MetaQuery query = MetaQuery::WhoAmI;

  bool operator==(const MetaStimulus&) const = default;
};

struct SubscribeStimulus {
  std::string client;
  std::string machine;

  bool operator==(const SubscribeStimulus&) const = default;
};

struct DownStimulus {
  std::string machine;
  Tick duration = 1;

  bool operator==(const DownStimulus&) const = default;
};

struct UpStimulus {
  std::string machine;

  bool operator==(const UpStimulus&) const = default;
};

struct SetStateStimulus {
  std::string machine;
  std::string state;

  bool operator==(const SetStateStimulus&) const = default;
};

using Stimulus = std::variant<RequestStimulus, MetaStimulus, SubscribeStimulus, DownStimulus,
                              UpStimulus, SetStateStimulus>;

struct ScenarioEvent {
  Tick time = 0;
  Stimulus stimulus;
  int line = 0;  // source line, 0 when built in code

  bool operator==(const ScenarioEvent&) const = default;
};

struct SimConfig {
  std::uint64_t seed = 0;  // recorded in the trace header; the run is not randomized
  Tick defaultLatency = 1;
  Tick horizon = 0;
};

struct Scenario {
  std::vector<ScenarioEvent> events;  // sorted by time, file order within a tick
  std::map<BindingKey, Behavior> bindings;
  SimConfig config;
};

struct ScenarioOptions {
  std::uint64_t seed = 0;
  Tick defaultLatency = 1;
  std::optional<Tick> horizon;  // defaults to the latest event time
};

/// Parses a scenario script and validates it against `network`. A scenario
/// is returned iff there are no error diagnostics.
///
///   at <tick> bind <machine>.<request> builtin:<succ|echo|const:<v>|forward:<m>.<r>>
///   at <tick> request <client> <machine>.<request> [<arg>...]
///   at <tick> meta <client> <machine> <whoami|state|constraints|signatures>
///   at <tick> subscribe <client> <machine>
///   at <tick> down <machine> <duration>
///   at <tick> up <machine>
///   at <tick> state <machine> "<state>"
///
/// `#` starts a comment; double quotes group words.
std::pair<std::optional<Scenario>, std::vector<Diagnostic>> loadScenario(
    std::string_view text, const ResolvedNetwork& network, const ScenarioOptions& options = {});

/// Checks a scenario built in code against `network`, with the same rules
/// loadScenario applies. Sorts events by time.
std::vector<Diagnostic> validateScenario(Scenario& scenario, const ResolvedNetwork& network);

}  // namespace smadl
