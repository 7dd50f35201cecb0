#include "support.hpp"

namespace picwalk {
namespace {

using testing::error_kind;
using testing::pic;

struct Case {
  BuilderId id;
  std::size_t cols_max;
  const char* expected;
};

void PrintTo(const Case& c, std::ostream* os) { *os << c.id.to_string(); }

class BuilderContract : public ::testing::TestWithParam<Case> {};

TEST_P(BuilderContract, ClassAndOracleEquivalence) {
  const auto& c = GetParam();
  const auto a = build(c.id);
  EXPECT_TRUE(validate(a).empty());
  EXPECT_EQ(classify(a).to_string(), c.expected);
  EXPECT_EQ(expected_class(c.id), c.expected);
  const auto k = contract(c.id);
  const auto report = oracle_equivalence(a, k.language, k.rows, c.cols_max);
  EXPECT_TRUE(report.mismatches.empty()) << report.to_table();
  EXPECT_GT(report.levels[0].members, 0u);
}

TEST_P(BuilderContract, StarvedBudgetRejectsAllMembers) {
  const auto& c = GetParam();
  const auto a = build(c.id);
  const Bound up = a.budget().up;
  if (!a.policy().budgeted.contains(Direction::U) || up.is_infinite() || up.count() == 0) {
    GTEST_SKIP() << "no finite up budget to starve";
  }
  const auto k = contract(c.id);
  const auto report = budget_sweep(a, k.language, k.rows, c.cols_max, up_budgets(a, {up.count() - 1}));
  EXPECT_EQ(report.levels[0].accepted_members, 0u);
}

std::string case_name(const ::testing::TestParamInfo<Case>& info) {
  std::string s = info.param.id.to_string();
  for (auto& ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
  }
  return s;
}

INSTANTIATE_TEST_SUITE_P(
    Builders, BuilderContract,
    ::testing::Values(Case{{BuilderKind::A_L1, 1}, 6, "2NFA-3W[1]"},
                      Case{{BuilderKind::B_L, 1}, 5, "2NFA-3W[1]"},
                      Case{{BuilderKind::B_L, 2}, 3, "2NFA-3W[2]"},
                      Case{{BuilderKind::M_M1, 1}, 6, "2DFA-3W[1]"},
                      Case{{BuilderKind::M_Mi, 2}, 3, "2DFA-3W[2]"},
                      Case{{BuilderKind::P_N2, 1}, 3, "2NFA-3W[0]"},
                      Case{{BuilderKind::C_L1_2W, 1}, 5, "2NFA-2W[1,0]"},
                      Case{{BuilderKind::D_K, 1}, 5, "2NFA-2W[1,0]"},
                      Case{{BuilderKind::D_K, 2}, 5, "2NFA-2W[2,0]"},
                      Case{{BuilderKind::D_K, 3}, 6, "2NFA-2W[3,0]"},
                      Case{{BuilderKind::S_rec, 0}, 5, "2DFA-2W[1,0]"},
                      Case{{BuilderKind::S_rec, 1}, 6, "2DFA-2W[2,0]"},
                      Case{{BuilderKind::S_rec, 3}, 9, "2DFA-2W[4,0]"}),
    case_name);

TEST(BuilderA, TraceShape) {
  const auto a = build_A_L1();
  for (std::size_t z = 2; z <= 5; ++z) {
    for_each_picture(binary_alphabet(), 2, z, [&](const Picture& p) {
      if (auto t = accepting_trace(a, p)) {
        EXPECT_EQ(t->count(Direction::U), 1u);
        EXPECT_EQ(t->count(Direction::D), 1u);
      }
    });
  }
}

TEST(BuilderB, UpStepsPerTrace) {
  const auto b = build_B_L(2);
  for (std::size_t z = 2; z <= 3; ++z) {
    for_each_picture(binary_alphabet(), 4, z, [&](const Picture& p) {
      if (auto t = accepting_trace(b, p)) EXPECT_EQ(t->count(Direction::U), 2u);
    });
  }
}

TEST(BuilderP, NoUpSteps) {
  const auto p = build_P_N2();
  for (std::size_t z = 1; z <= 2; ++z) {
    for_each_picture(binary_alphabet(), 4, z, [&](const Picture& w) {
      if (auto t = accepting_trace(p, w)) EXPECT_EQ(t->count(Direction::U), 0u);
    });
  }
}

TEST(BuilderM, RejectsThirdOneInTopRow) {
  const auto m = build_M_M1();
  EXPECT_TRUE(accepts(m, pic({"0110", "0110"})));
  EXPECT_FALSE(accepts(m, pic({"0111", "0110"})));
  EXPECT_FALSE(accepts(m, pic({"0110", "1100"})));
  EXPECT_EQ(m.state_count(), 14u);
}

TEST(BuilderC, VisitsEveryCellOfTheTwoByTwoWord) {
  const auto c = build_C_L1_2W();
  EXPECT_TRUE(accepts(c, pic({"11", "11"})));
  for (std::size_t n = 0; n < 4; ++n) {
    std::string cells = "1111";
    cells[n] = '0';
    EXPECT_FALSE(accepts(c, Picture(2, 2, cells))) << cells;
  }
}

TEST(BuilderS, SingletonAtFullBudgetOnly) {
  const auto s = build_S_rec(0);
  EXPECT_TRUE(accepts(s, pic({"11", "11"})));
  EXPECT_FALSE(accepts(s, pic({"11", "11"}), {Bound(0), std::nullopt}));
  EXPECT_FALSE(accepts(s, pic({"111", "111"})));
  EXPECT_FALSE(accepts(s, pic({"1", "1"})));
}

TEST(Flawed, LabelledAndOverAccepts) {
  const auto f = build_flawed_L1_3W0();
  EXPECT_NE(f.name().find("not_a_recognizer"), std::string::npos);
  const auto report = oracle_equivalence(f, *LanguageId::parse("L1"), 2, 4);
  ASSERT_FALSE(report.mismatches.empty());
  for (const auto& m : report.mismatches) {
    EXPECT_TRUE(m.machine);
    EXPECT_FALSE(m.oracle);
  }
}

TEST(BuilderId, ParseAndParameters) {
  EXPECT_EQ(BuilderId::parse_kind("M_Mi"), BuilderKind::M_Mi);
  EXPECT_FALSE(BuilderId::parse_kind("Z_Z"));
  EXPECT_TRUE(BuilderId::takes_param(BuilderKind::S_rec));
  EXPECT_FALSE(BuilderId::takes_param(BuilderKind::A_L1));
  EXPECT_EQ(BuilderId::default_param(BuilderKind::S_rec), 0u);
  EXPECT_EQ(error_kind([] { build_B_L(0); }), ErrorKind::Precondition);
  EXPECT_EQ(error_kind([] { build_D_K(0); }), ErrorKind::Precondition);
  EXPECT_EQ(error_kind([] { build_M_Mi(0); }), ErrorKind::Precondition);
  EXPECT_EQ(build_M_Mi(1).transitions(), build_M_M1().transitions());
}

}  // namespace
}  // namespace picwalk
