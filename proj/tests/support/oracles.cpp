#include "oracles.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace smadl::testing {

using C = TaxonomyClass;

bool tableLeq(TaxonomyClass a, TaxonomyClass b) {
  static const std::set<std::pair<C, C>> order = {
      {C::Isolated, C::Isolated}, {C::Isolated, C::Consumer}, {C::Isolated, C::Provider},
      {C::Isolated, C::Prosumer}, {C::Consumer, C::Consumer}, {C::Consumer, C::Prosumer},
      {C::Provider, C::Provider}, {C::Provider, C::Prosumer}, {C::Prosumer, C::Prosumer},
  };
  return order.count({a, b}) != 0;
}

TaxonomyClass enumeratedJoin(TaxonomyClass a, TaxonomyClass b) {
  std::vector<C> upper;
  for (C u : kAllClasses)
    if (tableLeq(a, u) && tableLeq(b, u)) upper.push_back(u);
  for (C u : upper) {
    bool least = true;
    for (C v : upper) least = least && tableLeq(u, v);
    if (least) return u;
  }
  throw std::logic_error("no least upper bound");
}

TaxonomyClass enumeratedMeet(TaxonomyClass a, TaxonomyClass b) {
  std::vector<C> lower;
  for (C l : kAllClasses)
    if (tableLeq(l, a) && tableLeq(l, b)) lower.push_back(l);
  for (C l : lower) {
    bool greatest = true;
    for (C v : lower) greatest = greatest && tableLeq(v, l);
    if (greatest) return l;
  }
  throw std::logic_error("no greatest lower bound");
}

std::vector<bool> bruteForceRateDecisions(const std::vector<Tick>& arrivals, ComparisonOp op,
                                          double bound) {
  std::vector<Tick> accepted;
  std::vector<bool> decisions;
  for (Tick t : arrivals) {
    long long inWindow = 0;
    for (Tick a : accepted)
      if (a > t - kTicksPerHour && a <= t) ++inWindow;
    bool ok = compare(static_cast<double>(inWindow + 1), op, bound);
    if (ok) accepted.push_back(t);
    decisions.push_back(ok);
  }
  return decisions;
}

namespace {

std::string describe(const EventRecord& r) {
  std::ostringstream os;
  os << "#" << r.seq << " t=" << r.time << " " << recordKindName(r.kind) << " "
     << r.envelope.source << "->" << r.envelope.destination << " " << r.envelope.request;
  return os.str();
}

bool isResponse(const EventRecord& r) { return r.kind == RecordKind::ResponseSent; }

struct Index {
  std::map<std::uint64_t, const EventRecord*> sent;  // request id -> request_sent
  std::map<std::uint64_t, std::vector<const EventRecord*>> dispositions;
  std::map<std::uint64_t, std::vector<const EventRecord*>> responses;  // by correlationId
  std::map<std::uint64_t, std::vector<const EventRecord*>> children;   // nested requests

  explicit Index(const std::vector<EventRecord>& trace) {
    for (const auto& r : trace) {
      const auto& e = r.envelope;
      switch (r.kind) {
        case RecordKind::RequestSent:
          sent[e.id] = &r;
          if (e.correlationId != e.id) children[e.correlationId].push_back(&r);
          break;
        case RecordKind::RequestAccepted:
        case RecordKind::RequestRejected:
          dispositions[e.id].push_back(&r);
          break;
        case RecordKind::ResponseSent:
          responses[e.correlationId].push_back(&r);
          break;
        default:
          break;
      }
    }
  }
};

}  // namespace

std::vector<std::string> rateLimitViolations(const ResolvedNetwork& net,
                                             const std::vector<EventRecord>& trace) {
  std::vector<std::string> out;
  // machine -> caller -> accepted F-Req ticks
  std::map<std::string, std::map<std::string, std::vector<Tick>>> accepted;
  for (const auto& r : trace) {
    if (r.kind == RecordKind::RequestAccepted &&
        r.envelope.kind == MessageKind::FunctionalityRequest)
      accepted[r.envelope.destination][r.envelope.source].push_back(r.time);
  }
  for (const auto& m : net.spec().machines) {
    for (const auto& c : m.constraints) {
      for (const auto& p : c.properties) {
        if (p.key != "request_per_hour" || !p.isNumericComparison()) continue;
        double bound = std::get<double>(p.value);
        for (const auto& [caller, ticks] : accepted[m.name]) {
          // The fullest window ending anywhere ends at an accepted tick.
          for (Tick end : ticks) {
            long long count = 0;
            for (Tick t : ticks)
              if (t > end - kTicksPerHour && t <= end) ++count;
            if (!compare(static_cast<double>(count), *p.op, bound)) {
              out.push_back(m.name + ": caller " + caller + " has " + std::to_string(count) +
                            " accepted requests in the hour ending at " + std::to_string(end));
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::string> subscriptionViolations(const std::vector<EventRecord>& trace) {
  std::vector<std::string> out;
  Index idx(trace);
  for (const auto& sub : trace) {
    if (sub.kind != RecordKind::SubscriptionCreated) continue;
    size_t changes = 0;
    for (const auto& r : trace)
      if (r.kind == RecordKind::StateChanged && r.seq > sub.seq &&
          r.envelope.source == sub.envelope.destination)
        ++changes;
    size_t delivered = 0;
    for (const auto* r : idx.responses[sub.envelope.id])
      if (r->envelope.kind == MessageKind::FunctionalityResponse &&
          r->envelope.destination == sub.envelope.source)
        ++delivered;
    if (changes != delivered) {
      out.push_back(describe(sub) + ": " + std::to_string(changes) + " state changes but " +
                    std::to_string(delivered) + " responses");
    }
  }
  return out;
}

std::vector<std::string> accountingViolations(const std::vector<EventRecord>& trace) {
  std::vector<std::string> out;
  Index idx(trace);
  std::set<std::uint64_t> subscriptions;
  for (const auto& r : trace)
    if (r.kind == RecordKind::SubscriptionCreated) subscriptions.insert(r.envelope.id);

  for (const auto& [id, req] : idx.sent) {
    const auto& disp = idx.dispositions[id];
    const auto& resp = idx.responses[id];
    if (disp.size() != 1) {
      out.push_back(describe(*req) + ": " + std::to_string(disp.size()) + " dispositions");
      continue;
    }
    if (req->envelope.kind == MessageKind::MetaRequest) {
      if (resp.size() != 1 || (resp[0]->envelope.kind != MessageKind::MetaResponse &&
                               resp[0]->envelope.kind != MessageKind::Notification)) {
        out.push_back(describe(*req) + ": MI-Req needs exactly one MI-Resp or N-Resp");
      }
    } else if (disp[0]->kind == RecordKind::RequestRejected) {
      if (resp.size() != 1 || resp[0]->envelope.kind != MessageKind::Notification)
        out.push_back(describe(*req) + ": rejected request needs exactly one N-Resp");
    } else if (!subscriptions.count(id) && resp.size() != 1) {
      out.push_back(describe(*req) + ": " + std::to_string(resp.size()) + " responses");
    }
    for (const auto* r : resp) {
      if (r->envelope.destination != req->envelope.source ||
          r->envelope.source != req->envelope.destination)
        out.push_back(describe(*r) + ": response endpoints do not mirror its request");
    }
  }
  for (const auto& r : trace) {
    if (isResponse(r) && !idx.sent.count(r.envelope.correlationId))
      out.push_back(describe(r) + ": answers an unknown request");
  }
  return out;
}

std::vector<std::string> availabilityViolations(const std::vector<EventRecord>& trace) {
  std::vector<std::string> out;
  std::set<std::string> down;
  for (const auto& r : trace) {
    if (r.kind == RecordKind::MachineDown) down.insert(r.envelope.source);
    if (r.kind == RecordKind::MachineUp) down.erase(r.envelope.source);
    if (r.kind == RecordKind::RequestAccepted && down.count(r.envelope.destination))
      out.push_back(describe(r) + ": accepted while down");
  }
  return out;
}

std::vector<std::string> causalityViolations(const std::vector<EventRecord>& trace, Tick latency) {
  std::vector<std::string> out;
  Index idx(trace);
  for (const auto& r : trace) {
    if (!isResponse(r)) continue;
    auto it = idx.sent.find(r.envelope.correlationId);
    if (it != idx.sent.end() && r.time < it->second->time + latency)
      out.push_back(describe(r) + ": earlier than request time + latency");
  }
  return out;
}

std::vector<std::string> orderingViolations(const std::vector<EventRecord>& trace) {
  std::vector<std::string> out;
  for (size_t i = 0; i < trace.size(); ++i) {
    if (trace[i].seq != i) out.push_back(describe(trace[i]) + ": seq not dense");
    if (i && trace[i].time < trace[i - 1].time) out.push_back(describe(trace[i]) + ": time decreases");
  }
  return out;
}

std::vector<std::string> rootCauseViolations(const std::vector<EventRecord>& trace) {
  std::vector<std::string> out;
  Index idx(trace);
  // First machine in the chain below `id` that failed.
  std::function<std::string(std::uint64_t)> origin = [&](std::uint64_t id) -> std::string {
    const auto& disp = idx.dispositions[id];
    const EventRecord* req = idx.sent.at(id);
    if (!disp.empty() && disp[0]->kind == RecordKind::RequestRejected) return req->envelope.destination;
    auto kids = idx.children.find(id);
    if (kids != idx.children.end() && !kids->second.empty()) return origin(kids->second.front()->envelope.id);
    return req->envelope.destination;
  };
  for (const auto& r : trace) {
    if (!isResponse(r) || r.envelope.kind != MessageKind::Notification) continue;
    if (!idx.sent.count(r.envelope.correlationId)) continue;
    std::string expected = origin(r.envelope.correlationId);
    if (r.envelope.rootCause.value_or("") != expected)
      out.push_back(describe(r) + ": root cause " + r.envelope.rootCause.value_or("<none>") +
                    ", expected " + expected);
  }
  return out;
}

std::vector<std::string> allTraceViolations(const ResolvedNetwork& net,
                                            const std::vector<EventRecord>& trace, Tick latency) {
  std::vector<std::string> all;
  for (auto part : {rateLimitViolations(net, trace), subscriptionViolations(trace),
                    accountingViolations(trace), availabilityViolations(trace),
                    causalityViolations(trace, latency), orderingViolations(trace),
                    rootCauseViolations(trace)})
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

bool spanInBounds(const std::string& source, const SourceSpan& span) {
  std::vector<int> lengths{0};
  for (char c : source) {
    if (c == '\n') {
      lengths.push_back(0);
    } else {
      ++lengths.back();
    }
  }
  auto ok = [&](int line, int col) {
    return line >= 1 && line <= static_cast<int>(lengths.size()) && col >= 1 &&
           col <= lengths[static_cast<size_t>(line - 1)] + 1;
  };
  bool ordered = std::pair(span.startLine, span.startColumn) <= std::pair(span.endLine, span.endColumn);
  return ok(span.startLine, span.startColumn) && ok(span.endLine, span.endColumn) && ordered;
}

}  // namespace smadl::testing
