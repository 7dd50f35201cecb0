#include "support.hpp"

namespace picwalk {
namespace {

using testing::error_kind;
using testing::pic;

const Picture kWitness = pic({"1011010", "0110011"});

Automaton looping_fixture() {
  AutomatonBuilder b("LOOP_fixture", binary_alphabet());
  b.policy(DirectionPolicy::three_way()).budget({Bound(0), Bound::infinite()});
  const auto q0 = b.state("q0"), q1 = b.state("q1"), q2 = b.state("q2"), acc = b.state("acc");
  b.initial(q0).accepting(acc);
  b.transition(q0, '1', acc, Direction::R).transition(q0, '0', q1, Direction::R);
  b.transition(q1, '0', q2, Direction::L).transition(q1, '1', q2, Direction::L);
  b.transition(q1, kBoundary, q2, Direction::L).transition(q2, '0', q1, Direction::R);
  return b.build();
}

TEST(EffectiveBudget, OverridesOnlyDownward) {
  const auto a = build_A_L1();
  EXPECT_EQ(effective_budget(a).up, Bound(1));
  EXPECT_EQ(effective_budget(a, {Bound(0), std::nullopt}).up, Bound(0));
  EXPECT_EQ(error_kind([&] { effective_budget(a, {Bound(2), std::nullopt}); }), ErrorKind::Parameter);
  // finite override on a free direction
  EXPECT_EQ(error_kind([&] { effective_budget(a, {std::nullopt, Bound(3)}); }), ErrorKind::Parameter);
}

TEST(InitialConfiguration, TopLeftWithDeclaredBudget) {
  const auto c = initial_configuration(build_A_L1(), kWitness);
  EXPECT_EQ(c.row, 1);
  EXPECT_EQ(c.col, 1);
  EXPECT_EQ(c.up_left, Bound(1));
  EXPECT_EQ(error_kind([] { initial_configuration(build_A_L1(), Picture(1, 1, "x")); }),
            ErrorKind::Alphabet);
}

TEST(Step, BudgetGatesUpMoves) {
  const auto a = build_A_L1();
  const auto p = pic({"11", "11"});
  Configuration c{*a.find_state("scan2"), 2, 1, Bound(1), Bound::infinite()};
  auto next = step(a, p, c);
  ASSERT_EQ(next.size(), 2u);  // R then U, declaration order
  EXPECT_EQ(next[1].row, 1);
  EXPECT_EQ(next[1].up_left, Bound(0));
  c.up_left = Bound(0);
  EXPECT_EQ(step(a, p, c).size(), 1u);
}

TEST(Step, NeverLeavesTheFrame) {
  const auto a = looping_fixture();
  const auto p = pic({"0"});
  // q1 on the right boundary moves L; q2 on the left boundary has no edge
  Configuration c{*a.find_state("q2"), 1, 0, Bound(0), Bound::infinite()};
  EXPECT_TRUE(step(a, p, c).empty());
  AutomatonBuilder b("edge", binary_alphabet());
  const auto q = b.state("q"), acc = b.state("acc");
  b.initial(q).accepting(acc).transition(q, kBoundary, acc, Direction::R);
  Configuration far{q, 1, 2, Bound::infinite(), Bound::infinite()};
  EXPECT_TRUE(step(b.build(), p, far).empty());
}

TEST(Accepts, StackedWitnessWord) {
  EXPECT_TRUE(accepts(build_A_L1(), kWitness));
  for (std::size_t z = 1; z <= 5; ++z) {
    EXPECT_FALSE(accepts(build_A_L1(), Picture(2, z, std::string(2 * z, '0'))));
  }
}

TEST(Accepts, ZeroUpBudgetStarvesA) {
  EXPECT_FALSE(accepts(build_A_L1(), kWitness, {Bound(0), std::nullopt}));
}

TEST(AcceptingTrace, CanonicalAndShortest) {
  const auto a = build_A_L1();
  const auto t = accepting_trace(a, kWitness);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->outcome, RunOutcome::Accept);
  EXPECT_EQ(t->count(Direction::U), 1u);
  EXPECT_EQ(t->count(Direction::D), 1u);
  EXPECT_EQ(t->final.state, a.accepting());
  EXPECT_EQ(t->steps.size(), 8u);  // stacked columns 3 and 6, accept one right of column 6
  EXPECT_EQ(t->steps[2].dir, Direction::D);
  EXPECT_EQ(t->steps[2].config.col, 3);
  EXPECT_FALSE(accepting_trace(a, pic({"10", "01"})));
}

TEST(RunDeterministic, OutcomesAndModeError) {
  const auto loop = looping_fixture();
  EXPECT_EQ(run_deterministic(loop, pic({"1"})).outcome, RunOutcome::Accept);
  EXPECT_EQ(run_deterministic(loop, pic({"00"})).outcome, RunOutcome::Loop);
  EXPECT_EQ(run_deterministic(loop, pic({"01"})).outcome, RunOutcome::Loop);
  EXPECT_EQ(run_deterministic(build_M_M1(), pic({"00", "00"})).outcome, RunOutcome::RejectHalt);
  EXPECT_EQ(error_kind([] { run_deterministic(build_A_L1(), kWitness); }), ErrorKind::Mode);
}

TEST(DecideComplement, FlipsAcceptance) {
  const auto loop = looping_fixture();
  for (const auto& p : enumerate_pictures(binary_alphabet(), 2, 3)) {
    EXPECT_EQ(decide_complement(loop, p), !accepts(loop, p));
  }
}

TEST(ConfigurationSpace, SizeFormula) {
  const auto m = build_M_M1();
  const auto p = pic({"101", "101"});
  // |Q| * (rows+2) * (cols+2) * (up+1); left is free
  EXPECT_EQ(configuration_space_size(m, p), m.state_count() * 4 * 5 * 2);
  EXPECT_EQ(configuration_space_size(m, p, {Bound(0), std::nullopt}), m.state_count() * 4 * 5);
}

TEST(LanguageSample, CountsAcceptedPictures) {
  const auto sample = language_sample(build_A_L1(), 2, 3);
  EXPECT_EQ(sample.size(), 11u);  // 2x2 all-ones plus ten 2x3 words
}

TEST(FormatTrace, StepLinesAndVerdict) {
  const auto a = build_A_L1();
  const auto text = format_trace(a, *accepting_trace(a, kWitness));
  EXPECT_NE(text.find("scan1 (1,1) up=1 left=inf --R-->"), std::string::npos) << text;
  EXPECT_NE(text.find("--U-->"), std::string::npos);
  EXPECT_EQ(text.find("--U-->"), text.rfind("--U-->"));
  EXPECT_NE(text.find("ACCEPT\n"), std::string::npos);
  const auto loop = format_trace(looping_fixture(), run_deterministic(looping_fixture(), pic({"00"})));
  EXPECT_EQ(loop.substr(loop.size() - 5), "LOOP\n");
}

}  // namespace
}  // namespace picwalk
