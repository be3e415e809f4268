#pragma once

#include <random>
#include <string>
#include <vector>

#include "smadl/analyzer.hpp"
#include "smadl/lexer.hpp"
#include "smadl/model.hpp"
#include "smadl/scenario.hpp"

namespace smadl::testing {

using Rng = std::mt19937_64;

/// Machines m0..m{n-1}. Roughly two thirds have a wrapper interface with one
/// or two requests; some declare states and a request_per_hour limit.
/// `edges` random distinct (from, to) relationships are added.
NetworkSpec randomNetwork(Rng& rng, int machines, int edges);

/// A relationship between two distinct random machines of `net`.
RelationshipSpec randomRelationship(Rng& rng, const NetworkSpec& net);

/// Random bindings and `events` stimuli in [0, horizon], valid against `net`.
Scenario randomScenario(Rng& rng, const ResolvedNetwork& net, int events, Tick horizon);

/// Source text with 1-3 random token-level edits applied to `tokens`.
std::string mutateTokens(Rng& rng, const std::vector<Token>& tokens);

/// Reassembles tokens into source text, re-quoting string literals.
std::string renderTokens(const std::vector<Token>& tokens);

}  // namespace smadl::testing
