#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "smadl/analyzer.hpp"
#include "smadl/parser.hpp"

namespace smadl::testing {

inline std::filesystem::path sourceRoot() { return SMADL_SOURCE_DIR; }
inline std::filesystem::path fixturePath(const std::string& name) {
  return sourceRoot() / "fixtures" / name;
}

inline std::string readText(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixtureText(const std::string& name) { return readText(fixturePath(name)); }

/// Parses and resolves; throws if either step reports an error.
inline ResolvedNetwork resolveText(const std::string& text) {
  auto parsed = parse(text);
  if (!parsed.network) throw std::runtime_error("fixture does not parse");
  auto [resolved, diags] = resolve(*parsed.network);
  if (!resolved) throw std::runtime_error("fixture does not resolve");
  return std::move(*resolved);
}

inline ResolvedNetwork futweet() { return resolveText(fixtureText("futweet.smadl")); }

inline std::vector<std::filesystem::path> malformedCorpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(sourceRoot() / "tests" / "corpus" / "malformed"))
    out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace smadl::testing
