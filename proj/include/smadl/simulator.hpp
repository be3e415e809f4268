#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smadl/analyzer.hpp"
#include "smadl/scenario.hpp"

namespace smadl {

enum class MessageKind {
  FunctionalityRequest,   // F-Req
  MetaRequest,            // MI-Req
  FunctionalityResponse,  // f-Resp
  MetaResponse,           // MI-Resp
  Notification,           // N-Resp
};

std::string_view messageKindName(MessageKind k);
bool isRequest(MessageKind k);

struct MessageEnvelope {
  std::uint64_t id = 0;
  Tick time = 0;
  std::string source;
  std::string destination;
  MessageKind kind = MessageKind::FunctionalityRequest;
  std::string request;
  // For a response, the request it answers. For a nested request, the
  // request that caused it. For a stimulus, its own id.
  std::uint64_t correlationId = 0;
  std::string payload;
  std::optional<std::string> rootCause;
};

// Notification details.
namespace detail {
inline constexpr std::string_view kMachineDown = "MACHINE_DOWN";
inline constexpr std::string_view kConstraintViolation = "CONSTRAINT_VIOLATION";
inline constexpr std::string_view kNoBehaviorBound = "NO_BEHAVIOR_BOUND";
inline constexpr std::string_view kBadParameter = "BAD_PARAMETER";
inline constexpr std::string_view kForwardCycle = "FORWARD_CYCLE";
}  // namespace detail

enum class RecordKind {
  RequestSent,
  RequestAccepted,
  RequestRejected,
  ResponseSent,
  StateChanged,
  MachineDown,
  MachineUp,
  SubscriptionCreated,
};

std::string_view recordKindName(RecordKind k);

struct EventRecord {
  std::uint64_t seq = 0;
  Tick time = 0;
  RecordKind kind = RecordKind::RequestSent;
  // Message records carry the envelope; machine records (state, up, down)
  // put the machine in envelope.source.
  MessageEnvelope envelope;
  std::string detail;
};

/// Mutable per-machine state during a run.
struct MachineRuntime {
  std::string name;
  std::string currentState = "unset";
  bool available = true;
  /// Accepted F-Req timestamps per caller, oldest first.
  std::map<std::string, std::deque<Tick>> rateWindows;
  /// Subscription request ids with their subscriber, in subscription order.
  std::vector<std::pair<std::uint64_t, std::string>> subscribers;
};

/// True iff one more request from `caller` at `now` satisfies
/// `constraint` (a `request_per_hour <op> N` comparison), counting that
/// caller's accepted requests in (now - 3600, now]. Drops older entries from
/// the caller's window. Does not record the request.
bool checkRateLimit(MachineRuntime& runtime, const std::string& caller, Tick now,
                    const PropertyEntry& constraint);

std::string answerMetaRequest(const MachineRuntime& runtime, const MetaInfo& meta, MetaQuery query);

struct MachineCounts {
  std::size_t accepted = 0;
  std::size_t rejected = 0;

  bool operator==(const MachineCounts&) const = default;
};

struct SimReport {
  std::map<std::string, MachineCounts> perMachine;  // every declared machine
  /// Notifications that reached a scenario client, by root cause.
  std::map<std::string, std::size_t> failuresByRootCause;
  /// Client F-Req count keyed by how many f-Resps each received.
  std::map<std::size_t, std::size_t> responseMultiplicity;
  /// (subscriber, machine) -> f-Resps delivered through subscriptions.
  std::map<std::pair<std::string, std::string>, std::size_t> subscriptionDeliveries;
};

struct SimResult {
  std::vector<EventRecord> trace;
  SimReport report;
};

/// Runs `scenario` to its horizon, then delivers responses still in flight.
/// Deterministic: same inputs, same trace.
SimResult runSimulation(const ResolvedNetwork& network, const Scenario& scenario);

}  // namespace smadl
