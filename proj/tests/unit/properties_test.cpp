// Randomized checks over seeded machines and pictures.
#include "support.hpp"

namespace picwalk {
namespace {

using testing::random_machine;
using testing::random_picture;

constexpr int kMachines = 150;

std::vector<Picture> small_pictures(std::size_t rows_max, std::size_t cols_max) {
  std::vector<Picture> out;
  for (std::size_t r = 1; r <= rows_max; ++r) {
    for (std::size_t c = 1; c <= cols_max; ++c) {
      for_each_picture(binary_alphabet(), r, c, [&](const Picture& p) { out.push_back(p); });
    }
  }
  return out;
}

struct PolicyCase {
  DirectionPolicy policy;
  Budget budget;
};

std::vector<PolicyCase> policies() {
  const auto inf = Bound::infinite();
  return {{DirectionPolicy::four_way(), {inf, inf}},
          {DirectionPolicy::three_way(), {Bound(1), inf}},
          {DirectionPolicy::three_way(), {Bound(2), inf}},
          {DirectionPolicy::three_way_rotated(), {inf, Bound(1)}},
          {DirectionPolicy::two_way(), {Bound(1), Bound(1)}},
          {DirectionPolicy::two_way(), {Bound(2), Bound(0)}}};
}

TEST(Properties, TransposeEquivalence) {
  std::mt19937 rng(11);
  const auto pictures = small_pictures(3, 3);
  for (const auto& pc : policies()) {
    for (int n = 0; n < kMachines / 3; ++n) {
      const auto mode = n % 2 ? Mode::Nondeterministic : Mode::Deterministic;
      const auto a = random_machine(rng, pc.policy, pc.budget, mode, 4);
      const auto t = transpose_machine(a);
      ASSERT_TRUE(validate(t).empty());
      EXPECT_EQ(transpose_machine(t), a);
      for (const auto& p : pictures) {
        ASSERT_EQ(accepts(t, transpose(p)), accepts(a, p)) << serialize_machine(a) << p.to_text();
      }
    }
  }
}

TEST(Properties, RotationEquivalence) {
  std::mt19937 rng(12);
  const auto pictures = small_pictures(3, 3);
  for (int n = 0; n < kMachines; ++n) {
    const auto mode = n % 2 ? Mode::Nondeterministic : Mode::Deterministic;
    const Budget budget{Bound::infinite(), Bound(n % 3)};
    const auto a = random_machine(rng, DirectionPolicy::three_way_rotated(), budget, mode, 4);
    const auto r = rotate_machine(a);
    ASSERT_TRUE(validate(r).empty());
    EXPECT_EQ(classify(r).family, Family::ThreeWay);
    for (const auto& p : pictures) {
      ASSERT_EQ(accepts(r, rotate90_cw(p)), accepts(a, p)) << serialize_machine(a) << p.to_text();
    }
  }
}

TEST(Properties, UnionIsLanguageUnion) {
  std::mt19937 rng(13);
  const auto pictures = small_pictures(3, 3);
  const auto cases = policies();
  for (int n = 0; n < kMachines; ++n) {
    const auto& pa = cases[rng() % cases.size()];
    const auto& pb = cases[rng() % cases.size()];
    const auto a = random_machine(rng, pa.policy, pa.budget, Mode::Nondeterministic, 3);
    const auto b = random_machine(rng, pb.policy, pb.budget, Mode::Deterministic, 3);
    const auto u = union_machine(a, b);
    ASSERT_TRUE(validate(u).empty()) << serialize_machine(u);
    for (const auto& p : pictures) {
      ASSERT_EQ(accepts(u, p), accepts(a, p) || accepts(b, p))
          << serialize_machine(a) << serialize_machine(b) << p.to_text();
    }
  }
}

TEST(Properties, AcceptanceMonotoneInBudget) {
  std::mt19937 rng(14);
  const auto pictures = small_pictures(3, 3);
  for (int n = 0; n < kMachines; ++n) {
    const auto a = random_machine(rng, DirectionPolicy::two_way(), {Bound(2), Bound(2)},
                                  Mode::Nondeterministic, 4, 0.8);
    for (const auto& p : pictures) {
      for (std::uint32_t up = 0; up < 2; ++up) {
        for (std::uint32_t left = 0; left <= 2; ++left) {
          if (accepts(a, p, {Bound(up), Bound(left)})) {
            EXPECT_TRUE(accepts(a, p, {Bound(up + 1), Bound(left)}));
          }
        }
      }
    }
  }
}

TEST(Properties, TraceInvariants) {
  std::mt19937 rng(15);
  const auto cases = policies();
  for (int n = 0; n < kMachines; ++n) {
    const auto& pc = cases[n % cases.size()];
    const auto mode = n % 2 ? Mode::Nondeterministic : Mode::Deterministic;
    const auto a = random_machine(rng, pc.policy, pc.budget, mode, 4, 0.8);
    for (int k = 0; k < 20; ++k) {
      std::uniform_int_distribution<std::size_t> dim(1, 4);
      const auto p = random_picture(rng, binary_alphabet(), dim(rng), dim(rng));
      const auto bound = configuration_space_size(a, p);
      const auto t = accepting_trace(a, p);
      ASSERT_EQ(t.has_value(), accepts(a, p));
      if (a.deterministic()) {
        const auto run = run_deterministic(a, p);
        EXPECT_LE(run.steps.size(), bound);
        EXPECT_EQ(run.outcome == RunOutcome::Accept, accepts(a, p));
        EXPECT_EQ(decide_complement(a, p), run.outcome != RunOutcome::Accept);
      }
      if (!t) continue;
      EXPECT_EQ(t->final.state, a.accepting());
      EXPECT_LE(t->steps.size(), bound);
      const auto budget = effective_budget(a);
      if (!budget.up.is_infinite() && pc.policy.budgeted.contains(Direction::U)) {
        EXPECT_LE(t->count(Direction::U), budget.up.count());
      }
      if (!budget.left.is_infinite() && pc.policy.budgeted.contains(Direction::L)) {
        EXPECT_LE(t->count(Direction::L), budget.left.count());
      }
      for (std::size_t s = 0; s < t->steps.size(); ++s) {
        const auto& from = t->steps[s].config;
        const auto& to = s + 1 < t->steps.size() ? t->steps[s + 1].config : t->final;
        const auto next = step(a, p, from);
        EXPECT_NE(std::find(next.begin(), next.end(), to), next.end());
        EXPECT_GE(to.row, 0);
        EXPECT_LE(to.row, static_cast<long>(p.rows()) + 1);
        EXPECT_GE(to.col, 0);
        EXPECT_LE(to.col, static_cast<long>(p.cols()) + 1);
      }
    }
  }
}

TEST(Properties, MachineTextRoundTrip) {
  std::mt19937 rng(16);
  const auto cases = policies();
  for (int n = 0; n < kMachines; ++n) {
    const auto& pc = cases[n % cases.size()];
    const auto a = random_machine(rng, pc.policy, pc.budget, Mode::Nondeterministic, 5);
    EXPECT_EQ(parse_machine(serialize_machine(a)), a);
  }
}

TEST(Properties, ClassifyMonotoneInBudget) {
  std::mt19937 rng(17);
  for (int n = 0; n < kMachines; ++n) {
    const auto a = random_machine(rng, DirectionPolicy::two_way(), {Bound(n % 3), Bound(n % 2)},
                                  Mode::Deterministic, 3);
    auto more = a.to_builder();
    more.budget({Bound(n % 3 + 1), Bound(n % 2)});
    const auto small = classify(a), big = classify(more.build());
    EXPECT_LE(small.up, big.up);
    EXPECT_LE(small.left, big.left);
  }
}

}  // namespace
}  // namespace picwalk
