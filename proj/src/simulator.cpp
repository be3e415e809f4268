#include "smadl/simulator.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>
#include <set>

namespace smadl {

std::string_view messageKindName(MessageKind k) {
  switch (k) {
    case MessageKind::FunctionalityRequest: return "F-Req";
    case MessageKind::MetaRequest: return "MI-Req";
    case MessageKind::FunctionalityResponse: return "f-Resp";
    case MessageKind::MetaResponse: return "MI-Resp";
    case MessageKind::Notification: return "N-Resp";
  }
  return "?";
}

bool isRequest(MessageKind k) {
  return k == MessageKind::FunctionalityRequest || k == MessageKind::MetaRequest;
}

std::string_view recordKindName(RecordKind k) {
  switch (k) {
    case RecordKind::RequestSent: return "request_sent";
    case RecordKind::RequestAccepted: return "request_accepted";
    case RecordKind::RequestRejected: return "request_rejected";
    case RecordKind::ResponseSent: return "response_sent";
    case RecordKind::StateChanged: return "state_changed";
    case RecordKind::MachineDown: return "machine_down";
    case RecordKind::MachineUp: return "machine_up";
    case RecordKind::SubscriptionCreated: return "subscription_created";
  }
  return "?";
}

bool checkRateLimit(MachineRuntime& runtime, const std::string& caller, Tick now,
                    const PropertyEntry& constraint) {
  if (!constraint.isNumericComparison()) return true;
  auto& window = runtime.rateWindows[caller];
  while (!window.empty() && window.front() <= now - kTicksPerHour) window.pop_front();
  double count = static_cast<double>(window.size()) + 1;
  return compare(count, *constraint.op, std::get<double>(constraint.value));
}

std::string answerMetaRequest(const MachineRuntime& runtime, const MetaInfo& meta, MetaQuery query) {
  std::string out;
  switch (query) {
    case MetaQuery::WhoAmI:
      return meta.description;
    case MetaQuery::State:
      return runtime.currentState;
    case MetaQuery::Constraints:
      for (const auto& p : meta.constraints) out += (out.empty() ? "" : "; ") + renderProperty(p);
      return out;
    case MetaQuery::Signatures:
      for (const auto& s : meta.requestSignatures)
        out += (out.empty() ? "" : "; ") + renderSignature(s);
      return out;
  }
  return out;
}

namespace {

constexpr std::string_view kSubscribeRequest = "subscribe";

std::string joinArgs(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
  return out;
}

class Engine {
 public:
  Engine(const ResolvedNetwork& net, const Scenario& sc) : net_(net), sc_(sc) {
    for (const auto& m : net.spec().machines) {
      MachineRuntime rt;
      rt.name = m.name;
      runtimes_.emplace(m.name, std::move(rt));
      meta_.emplace(m.name, metaInfo(net, m.name));
      result_.report.perMachine[m.name];
      for (const auto& c : m.constraints)
        for (const auto& p : c.properties)
          if (p.key == "request_per_hour" && p.isNumericComparison()) rateLimits_[m.name].push_back(p);
    }
  }

  SimResult run() {
    for (size_t i = 0; i < sc_.events.size(); ++i)
      queue_.push({sc_.events[i].time, 0, i, Action::Stimulus, {}, {}, 0, {}});
    while (!queue_.empty()) {
      Item item = queue_.top();
      queue_.pop();
      now_ = item.time;
      switch (item.action) {
        case Action::Stimulus: stimulus(sc_.events[item.order]); break;
        case Action::Deliver: deliver(std::move(item.message), item.detail); break;
        case Action::AutoUp: autoUp(item.machine, item.epoch); break;
      }
    }
    for (const auto& [id, count] : clientResponses_) ++result_.report.responseMultiplicity[count];
    return std::move(result_);
  }

 private:
  enum class Action { Stimulus, Deliver, AutoUp };

  struct Item {
    Tick time;
    int phase;  // stimuli before internal work within a tick
    std::uint64_t order;
    Action action;
    MessageEnvelope message;
    std::string machine;  // AutoUp
    std::uint64_t epoch;  // AutoUp
    std::string detail;   // Deliver

    bool operator>(const Item& o) const {
      return std::tie(time, phase, order) > std::tie(o.time, o.phase, o.order);
    }
  };

  // What a machine must do when the response to a nested request arrives.
  struct PendingForward {
    MessageEnvelope parent;
  };

  void record(RecordKind kind, const MessageEnvelope& env, std::string detail = {}) {
    EventRecord r;
    r.seq = result_.trace.size();
    r.time = now_;
    r.kind = kind;
    r.envelope = env;
    r.detail = std::move(detail);
    result_.trace.push_back(std::move(r));
  }

  void recordMachine(RecordKind kind, const std::string& machine, std::string payload,
                     std::string detail = {}) {
    MessageEnvelope env;
    env.time = now_;
    env.source = machine;
    env.payload = std::move(payload);
    record(kind, env, std::move(detail));
  }

  void schedule(Item item) {
    item.phase = 1;
    item.order = internalOrder_++;
    queue_.push(std::move(item));
  }

  // Sends a response to `req` after the processing latency.
  void respond(const MessageEnvelope& req, MessageKind kind, std::string payload,
               std::optional<std::string> rootCause = std::nullopt, std::string detail = {}) {
    MessageEnvelope resp;
    resp.id = nextId_++;
    resp.time = now_ + sc_.config.defaultLatency;
    resp.source = req.destination;
    resp.destination = req.source;
    resp.kind = kind;
    resp.request = req.request;
    resp.correlationId = req.id;
    resp.payload = std::move(payload);
    resp.rootCause = std::move(rootCause);
    Item item{resp.time, 1, 0, Action::Deliver, std::move(resp), {}, 0, std::move(detail)};
    schedule(std::move(item));
  }

  MessageEnvelope newRequest(const std::string& source, const std::string& dest, MessageKind kind,
                             const std::string& request, std::string payload,
                             std::optional<std::uint64_t> parent) {
    MessageEnvelope env;
    env.id = nextId_++;
    env.time = now_;
    env.source = source;
    env.destination = dest;
    env.kind = kind;
    env.request = request;
    env.correlationId = parent.value_or(env.id);
    env.payload = std::move(payload);
    return env;
  }

  void stimulus(const ScenarioEvent& ev) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, RequestStimulus>) {
            auto env = newRequest(s.client, s.machine, MessageKind::FunctionalityRequest, s.request,
                                  joinArgs(s.arguments), std::nullopt);
            clientRequest(env);
            request(env, s.arguments, {}, false);
          } else if constexpr (std::is_same_v<T, MetaStimulus>) {
            auto env = newRequest(s.client, s.machine, MessageKind::MetaRequest,
                                  std::string(metaQueryName(s.query)), "", std::nullopt);
            request(env, {}, {}, false);
          } else if constexpr (std::is_same_v<T, SubscribeStimulus>) {
            auto env = newRequest(s.client, s.machine, MessageKind::FunctionalityRequest,
                                  std::string(kSubscribeRequest), "", std::nullopt);
            clientRequest(env);
            request(env, {}, {}, true);
          } else if constexpr (std::is_same_v<T, DownStimulus>) {
            down(s.machine, s.duration);
          } else if constexpr (std::is_same_v<T, UpStimulus>) {
            up(s.machine);
          } else if constexpr (std::is_same_v<T, SetStateStimulus>) {
            setState(s.machine, s.state);
          }
        },
        ev.stimulus);
  }

  void clientRequest(const MessageEnvelope& env) { clientResponses_[env.id] = 0; }

  void reject(const MessageEnvelope& req, std::string_view why) {
    ++result_.report.perMachine[req.destination].rejected;
    record(RecordKind::RequestRejected, req, std::string(why));
    respond(req, MessageKind::Notification, "", req.destination, std::string(why));
  }

  void request(const MessageEnvelope& req, const std::vector<std::string>& args,
               std::vector<std::string> chain, bool subscription) {
    record(RecordKind::RequestSent, req);
    MachineRuntime& rt = runtimes_.at(req.destination);
    const bool functional = req.kind == MessageKind::FunctionalityRequest;

    if (std::find(chain.begin(), chain.end(), req.destination) != chain.end()) {
      reject(req, detail::kForwardCycle);
      return;
    }
    if (!rt.available) {
      reject(req, detail::kMachineDown);
      return;
    }
    if (functional) {
      for (const auto& limit : rateLimits_[req.destination]) {
        if (!checkRateLimit(rt, req.source, now_, limit)) {
          reject(req, detail::kConstraintViolation);
          return;
        }
      }
      if (rateLimits_.count(req.destination)) rt.rateWindows[req.source].push_back(now_);
    }
    ++result_.report.perMachine[req.destination].accepted;
    record(RecordKind::RequestAccepted, req);

    if (!functional) {
      auto query = parseMetaQuery(req.request).value_or(MetaQuery::WhoAmI);
      respond(req, MessageKind::MetaResponse, answerMetaRequest(rt, meta_.at(req.destination), query));
      return;
    }
    if (subscription) {
      rt.subscribers.emplace_back(req.id, req.source);
      record(RecordKind::SubscriptionCreated, req);
      return;
    }

    auto it = sc_.bindings.find({req.destination, req.request});
    if (it == sc_.bindings.end()) {
      respond(req, MessageKind::Notification, "", req.destination, std::string(detail::kNoBehaviorBound));
      return;
    }
    const Behavior& b = it->second;
    switch (b.kind) {
      case Behavior::Kind::Succ: {
        long long n = 0;
        const std::string a = args.size() == 1 ? args[0] : "";
        auto [p, ec] = std::from_chars(a.data(), a.data() + a.size(), n);
        if (a.empty() || ec != std::errc() || p != a.data() + a.size() ||
            n == std::numeric_limits<long long>::max()) {
          respond(req, MessageKind::Notification, "", req.destination, std::string(detail::kBadParameter));
        } else {
          respond(req, MessageKind::FunctionalityResponse, std::to_string(n + 1));
        }
        break;
      }
      case Behavior::Kind::Echo:
        respond(req, MessageKind::FunctionalityResponse, req.payload);
        break;
      case Behavior::Kind::Const:
        respond(req, MessageKind::FunctionalityResponse, b.constValue);
        break;
      case Behavior::Kind::Forward: {
        auto nested = newRequest(req.destination, b.targetMachine, MessageKind::FunctionalityRequest,
                                 b.targetRequest, req.payload, req.id);
        pending_.emplace(nested.id, PendingForward{req});
        chain.push_back(req.destination);
        request(nested, args, std::move(chain), false);
        break;
      }
    }
  }

  void deliver(MessageEnvelope resp, const std::string& detailText) {
    record(RecordKind::ResponseSent, resp, detailText);
    auto it = pending_.find(resp.correlationId);
    if (it != pending_.end()) {
      // Relay to the machine's own requester; notifications keep their root cause.
      MessageEnvelope parent = std::move(it->second.parent);
      pending_.erase(it);
      respond(parent, resp.kind, resp.payload, resp.rootCause, detailText);
      return;
    }
    if (resp.kind == MessageKind::FunctionalityResponse) {
      auto c = clientResponses_.find(resp.correlationId);
      if (c != clientResponses_.end()) ++c->second;
      auto s = subscriptionTarget_.find(resp.correlationId);
      if (s != subscriptionTarget_.end()) ++result_.report.subscriptionDeliveries[{resp.destination, s->second}];
    } else if (resp.kind == MessageKind::Notification && resp.rootCause) {
      ++result_.report.failuresByRootCause[*resp.rootCause];
    }
  }

  void down(const std::string& machine, Tick duration) {
    MachineRuntime& rt = runtimes_.at(machine);
    std::uint64_t epoch = ++epochs_[machine];
    if (rt.available) {
      rt.available = false;
      recordMachine(RecordKind::MachineDown, machine, "", "duration=" + std::to_string(duration));
    }
    if (now_ + duration <= sc_.config.horizon) {
      schedule({now_ + duration, 1, 0, Action::AutoUp, {}, machine, epoch, {}});
    }
  }

  void up(const std::string& machine) {
    ++epochs_[machine];
    MachineRuntime& rt = runtimes_.at(machine);
    if (!rt.available) {
      rt.available = true;
      recordMachine(RecordKind::MachineUp, machine, "");
    }
  }

  void autoUp(const std::string& machine, std::uint64_t epoch) {
    if (epochs_[machine] == epoch) up(machine);
  }

  void setState(const std::string& machine, const std::string& state) {
    MachineRuntime& rt = runtimes_.at(machine);
    rt.currentState = state;
    recordMachine(RecordKind::StateChanged, machine, state);
    for (const auto& [subId, subscriber] : rt.subscribers) {
      MessageEnvelope sub;
      sub.id = subId;
      sub.source = subscriber;
      sub.destination = machine;
      sub.request = std::string(kSubscribeRequest);
      subscriptionTarget_.emplace(subId, machine);
      respond(sub, MessageKind::FunctionalityResponse, state);
    }
  }

  const ResolvedNetwork& net_;
  const Scenario& sc_;
  std::map<std::string, MachineRuntime> runtimes_;
  std::map<std::string, MetaInfo> meta_;
  std::map<std::string, std::vector<PropertyEntry>> rateLimits_;
  std::map<std::string, std::uint64_t> epochs_;
  std::map<std::uint64_t, PendingForward> pending_;
  std::map<std::uint64_t, std::size_t> clientResponses_;
  std::map<std::uint64_t, std::string> subscriptionTarget_;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue_;
  std::uint64_t internalOrder_ = 0;
  std::uint64_t nextId_ = 0;
  Tick now_ = 0;
  SimResult result_;
};

}  // namespace

SimResult runSimulation(const ResolvedNetwork& network, const Scenario& scenario) {
  return Engine(network, scenario).run();
}

}  // namespace smadl
