#pragma once

#include <string>
#include <vector>

#include "smadl/scenario.hpp"
#include "smadl/simulator.hpp"

namespace smadl {

/// Header line, then one tab-separated line per record with the fields
/// seq, time, kind, source, destination, request, responseKind, payload,
/// rootCause, detail. Empty fields stay empty; tab, newline and backslash
/// in values are escaped as \t, \n, \\.
std::string renderTrace(const SimConfig& config, const std::vector<EventRecord>& trace);

/// Inverse of one renderTrace record line, for tools that read traces back.
std::vector<std::string> splitTraceLine(const std::string& line);

std::string renderReport(const SimConfig& config, const SimReport& report);

}  // namespace smadl
