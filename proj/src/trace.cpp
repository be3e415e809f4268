#include "smadl/trace.hpp"

#include <sstream>

namespace smadl {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string renderTrace(const SimConfig& config, const std::vector<EventRecord>& trace) {
  std::ostringstream os;
  os << "# smadl-trace seed=" << config.seed << " horizon=" << config.horizon
     << " defaultLatency=" << config.defaultLatency << '\n';
  for (const auto& r : trace) {
    const MessageEnvelope& e = r.envelope;
    bool message = r.kind == RecordKind::RequestSent || r.kind == RecordKind::RequestAccepted ||
                   r.kind == RecordKind::RequestRejected || r.kind == RecordKind::ResponseSent ||
                   r.kind == RecordKind::SubscriptionCreated;
    os << r.seq << '\t' << r.time << '\t' << recordKindName(r.kind) << '\t' << escape(e.source)
       << '\t' << escape(e.destination) << '\t' << escape(e.request) << '\t'
       << (message ? messageKindName(e.kind) : "") << '\t' << escape(e.payload) << '\t'
       << escape(e.rootCause.value_or("")) << '\t' << escape(r.detail) << '\n';
  }
  return os.str();
}

std::vector<std::string> splitTraceLine(const std::string& line) {
  std::vector<std::string> fields(1);
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '\t') {
      fields.emplace_back();
    } else if (c == '\\' && i + 1 < line.size()) {
      char e = line[++i];
      fields.back() += e == 't' ? '\t' : e == 'n' ? '\n' : e;
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::string renderReport(const SimConfig& config, const SimReport& report) {
  std::ostringstream os;
  os << "simulation report (seed " << config.seed << ", horizon " << config.horizon
     << ", latency " << config.defaultLatency << ")\n";
  os << "\nrequests per machine:\n";
  for (const auto& [m, c] : report.perMachine)
    os << "  " << m << ": accepted " << c.accepted << ", rejected " << c.rejected << '\n';
  os << "\nclient-visible failures by root cause:\n";
  if (report.failuresByRootCause.empty()) os << "  (none)\n";
  for (const auto& [m, n] : report.failuresByRootCause) os << "  " << m << ": " << n << '\n';
  os << "\nresponse multiplicity (f-Resp per client request):\n";
  if (report.responseMultiplicity.empty()) os << "  (none)\n";
  for (const auto& [k, n] : report.responseMultiplicity)
    os << "  " << k << " response(s): " << n << " request(s)\n";
  os << "\nsubscription deliveries:\n";
  if (report.subscriptionDeliveries.empty()) os << "  (none)\n";
  for (const auto& [key, n] : report.subscriptionDeliveries)
    os << "  " << key.second << " -> " << key.first << ": " << n << '\n';
  return os.str();
}

}  // namespace smadl
