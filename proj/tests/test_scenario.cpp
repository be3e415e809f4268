#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "smadl/scenario.hpp"

namespace smadl {
namespace {

std::vector<std::string> codesOf(const std::vector<Diagnostic>& diags) {
  std::vector<std::string> out;
  for (const auto& d : diags) out.push_back(d.code);
  return out;
}

class ScenarioTest : public ::testing::Test {
 protected:
  ResolvedNetwork futweet = testing::futweet();
  ResolvedNetwork succ = testing::resolveText(testing::fixtureText("succ.smadl"));
};

TEST_F(ScenarioTest, SingleRequest) {
  auto [sc, diags] = loadScenario("at 10 request client1 succ_machine.compute 2", succ);
  ASSERT_TRUE(sc);
  ASSERT_EQ(sc->events.size(), 1u);
  EXPECT_EQ(sc->events[0].time, 10);
  EXPECT_EQ(std::get<RequestStimulus>(sc->events[0].stimulus),
            (RequestStimulus{"client1", "succ_machine", "compute", {"2"}}));
  EXPECT_EQ(sc->config.horizon, 10);
}

TEST_F(ScenarioTest, QuotedState) {
  auto [sc, diags] = loadScenario("at 60 state twitter \"over capacity\"", futweet);
  ASSERT_TRUE(sc);
  EXPECT_EQ(std::get<SetStateStimulus>(sc->events[0].stimulus),
            (SetStateStimulus{"twitter", "over capacity"}));
}

TEST_F(ScenarioTest, UnknownMachine) {
  auto [sc, diags] = loadScenario("at 5 request c ghost.r 1", futweet);
  EXPECT_FALSE(sc);
  EXPECT_EQ(codesOf(diags), (std::vector<std::string>{"SCN_UNKNOWN_MACHINE"}));
  EXPECT_EQ(diags[0].span.startLine, 1);
}

TEST_F(ScenarioTest, UnknownStateAndRequest) {
  auto [sc, diags] = loadScenario(
      "at 1 state twitter \"on fire\"\n"
      "at 2 request c twitter.delete\n"
      "at 3 meta c twitter whoami\n",
      futweet);
  EXPECT_FALSE(sc);
  ASSERT_EQ(codesOf(diags), (std::vector<std::string>{"SCN_UNKNOWN_STATE", "SCN_UNKNOWN_REQUEST"}));
  EXPECT_EQ(diags[1].span.startLine, 2);
}

TEST_F(ScenarioTest, BadLines) {
  auto [sc, diags] = loadScenario(
      "# comment only\n"
      "\n"
      "at x request c twitter.search\n"
      "after 3 up twitter\n"
      "at 3 jump twitter\n"
      "at 4 meta c twitter mood\n"
      "at 5 request c twitter\n"
      "at 6 down twitter 0\n"
      "at 7 state twitter \"unterminated\n"
      "at -1 up twitter\n",
      futweet);
  EXPECT_FALSE(sc);
  EXPECT_EQ(diags.size(), 8u);
  for (const auto& d : diags) EXPECT_EQ(d.code, "SCN_BAD_LINE");
}

TEST_F(ScenarioTest, Bindings) {
  auto [sc, diags] = loadScenario(
      "at 0 bind futweet_core.getFutweets builtin:forward:twitter.search  # relay\n"
      "at 0 bind twitter.search builtin:const:\"no results\"\n"
      "at 0 bind futweet_core.doGuess builtin:succ\n",
      futweet);
  ASSERT_TRUE(sc) << diags.at(0).message;
  ASSERT_EQ(sc->bindings.size(), 3u);
  const Behavior& fwd = sc->bindings.at({"futweet_core", "getFutweets"});
  EXPECT_EQ(fwd.kind, Behavior::Kind::Forward);
  EXPECT_EQ(fwd.targetMachine, "twitter");
  EXPECT_EQ(fwd.targetRequest, "search");
  EXPECT_EQ(sc->bindings.at({"twitter", "search"}).constValue, "no results");
  EXPECT_EQ(renderBehavior(fwd), "builtin:forward:twitter.search");
}

TEST_F(ScenarioTest, BadBindings) {
  auto [sc, diags] = loadScenario(
      "at 0 bind twitter.search builtin:forward:futweet_core.getFutweets\n"  // no edge
      "at 0 bind twitter.search builtin:echo\n"                               // duplicate key
      "at 0 bind futweet_core.getFutweets builtin:forward:twitter.nothing\n"
      "at 0 bind futweet_core.doGuess builtin:teleport\n",
      futweet);
  EXPECT_FALSE(sc);
  EXPECT_EQ(codesOf(diags), (std::vector<std::string>{"SCN_BAD_BINDING", "SCN_DUPLICATE_BINDING",
                                                      "SCN_UNKNOWN_REQUEST", "SCN_BAD_LINE"}));
}

TEST_F(ScenarioTest, EventsSortedStablyByTime) {
  auto [sc, diags] = loadScenario(
      "at 20 up twitter\n"
      "at 5 state twitter \"over capacity\"\n"
      "at 5 state twitter \"fully operational\"\n",
      futweet);
  ASSERT_TRUE(sc);
  EXPECT_EQ(sc->events[0].line, 2);
  EXPECT_EQ(sc->events[1].line, 3);
  EXPECT_EQ(sc->events[2].line, 1);
}

TEST_F(ScenarioTest, Horizon) {
  ScenarioOptions opts;
  opts.horizon = 100;
  auto [sc, diags] = loadScenario("at 50 up twitter", futweet, opts);
  ASSERT_TRUE(sc);
  EXPECT_EQ(sc->config.horizon, 100);

  opts.horizon = 10;
  auto [bad, badDiags] = loadScenario("at 50 up twitter", futweet, opts);
  EXPECT_FALSE(bad);
  EXPECT_EQ(codesOf(badDiags), (std::vector<std::string>{"SCN_HORIZON"}));
}

TEST_F(ScenarioTest, ValidateBuiltScenario) {
  Scenario sc;
  sc.events.push_back({3, SetStateStimulus{"twitter", "asleep"}, 0});
  sc.events.push_back({1, UpStimulus{"nobody"}, 0});
  sc.config.horizon = 5;
  auto diags = validateScenario(sc, futweet);
  EXPECT_EQ(codesOf(diags), (std::vector<std::string>{"SCN_UNKNOWN_STATE", "SCN_UNKNOWN_MACHINE"}));
  EXPECT_EQ(sc.events[0].time, 1);
}

TEST(MetaQuery, Names) {
  for (auto q : {MetaQuery::WhoAmI, MetaQuery::State, MetaQuery::Constraints, MetaQuery::Signatures})
    EXPECT_EQ(parseMetaQuery(metaQueryName(q)), q);
  EXPECT_FALSE(parseMetaQuery("WHOAMI"));
}

}  // namespace
}  // namespace smadl
