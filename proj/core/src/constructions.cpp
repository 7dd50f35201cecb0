#include "picwalk/constructions.hpp"

#include "picwalk/error.hpp"

namespace picwalk {

namespace {

using D = Direction;

std::string suffix(unsigned k) { return "_p" + std::to_string(k); }

AutomatonBuilder three_way(std::string name, Mode mode, unsigned up) {
  AutomatonBuilder b(std::move(name), binary_alphabet());
  b.mode(mode).policy(DirectionPolicy::three_way()).budget({Bound(up), Bound::infinite()});
  return b;
}

AutomatonBuilder two_way(std::string name, Mode mode, unsigned up) {
  AutomatonBuilder b(std::move(name), binary_alphabet());
  b.mode(mode).policy(DirectionPolicy::two_way()).budget({Bound(up), Bound(0)});
  return b;
}

/// Scan right along a row, optionally dropping into `select_to` with `dir`
/// on a 1. The continue-scanning edge is declared first.
void scan_and_pick(AutomatonBuilder& b, StateId scan, StateId select_to, D dir) {
  b.transition(scan, '0', scan, D::R);
  b.transition(scan, '1', scan, D::R);
  b.transition(scan, '1', select_to, dir);
}

/// Walk left to the border of the current row, drop two rows and step back
/// onto column 1, ending in `next`.
void return_and_descend(AutomatonBuilder& b, const std::string& tag, StateId from_state,
                        StateId next) {
  const StateId ret = b.state("return" + tag);
  const StateId descend = b.state("descend" + tag);
  const StateId enter = b.state("enter" + tag);
  b.transition(from_state, '1', ret, D::L);
  b.on_any_symbol(ret, ret, D::L);
  b.transition(ret, kBoundary, descend, D::D);
  b.transition(descend, kBoundary, enter, D::D);
  b.transition(enter, kBoundary, next, D::R);
}

Automaton stacked_pair_checker(unsigned pairs, AutomatonBuilder b) {
  std::vector<StateId> entry;
  for (unsigned k = 1; k <= pairs; ++k) entry.push_back(b.state("scan1" + suffix(k)));
  const StateId accept = b.state("accept");
  b.initial(entry.front()).accepting(accept);
  for (unsigned k = 1; k <= pairs; ++k) {
    const auto tag = suffix(k);
    const StateId scan1 = entry[k - 1];
    const StateId verify_dn = b.state("verify_dn" + tag);
    const StateId scan2 = b.state("scan2" + tag);
    const StateId verify_up = b.state("verify_up" + tag);
    scan_and_pick(b, scan1, verify_dn, D::D);
    b.transition(verify_dn, '1', scan2, D::R);
    scan_and_pick(b, scan2, verify_up, D::U);
    if (k == pairs) {
      b.transition(verify_up, '1', accept, D::R);
    } else {
      return_and_descend(b, tag, verify_up, entry[k]);
    }
  }
  return b.build();
}

}  // namespace

Automaton build_A_L1() {
  AutomatonBuilder b = three_way("A_L1", Mode::Nondeterministic, 1);
  const StateId scan1 = b.state("scan1");
  const StateId verify_dn = b.state("verify_dn");
  const StateId scan2 = b.state("scan2");
  const StateId verify_up = b.state("verify_up");
  const StateId accept = b.state("accept");
  b.initial(scan1).accepting(accept);
  scan_and_pick(b, scan1, verify_dn, D::D);
  b.transition(verify_dn, '1', scan2, D::R);
  scan_and_pick(b, scan2, verify_up, D::U);
  b.transition(verify_up, '1', accept, D::R);
  return b.build();
}

Automaton build_B_L(unsigned i) {
  if (i < 1) throw Error(ErrorKind::Precondition, "B_L needs i >= 1");
  const auto name = "B_L" + std::to_string(i);
  return stacked_pair_checker(i, three_way(name, Mode::Nondeterministic, i));
}

Automaton build_M_Mi(unsigned i) {
  if (i < 1) throw Error(ErrorKind::Precondition, "M_Mi needs i >= 1");
  AutomatonBuilder b = three_way("M_M" + std::to_string(i), Mode::Deterministic, i);
  std::vector<StateId> entry;
  for (unsigned k = 1; k <= i; ++k) entry.push_back(b.state("count_top0" + suffix(k)));
  const StateId accept = b.state("accept");
  b.initial(entry.front()).accepting(accept);

  for (unsigned k = 1; k <= i; ++k) {
    const auto tag = suffix(k);
    // Row 1 of the pair: exactly two 1s.
    const StateId top0 = entry[k - 1];
    const StateId top1 = b.state("count_top1" + tag);
    const StateId top2 = b.state("count_top2" + tag);
    b.transition(top0, '0', top0, D::R).transition(top0, '1', top1, D::R);
    b.transition(top1, '0', top1, D::R).transition(top1, '1', top2, D::R);
    const StateId back_top0 = b.state("back_top0" + tag);
    b.transition(top2, '0', top2, D::R).transition(top2, kBoundary, back_top0, D::L);
    // Back to the leftmost 1 and check the cell below it.
    const StateId back_top1 = b.state("back_top1" + tag);
    const StateId verify_dn = b.state("verify_dn" + tag);
    b.transition(back_top0, '0', back_top0, D::L).transition(back_top0, '1', back_top1, D::L);
    b.transition(back_top1, '0', back_top1, D::L).transition(back_top1, '1', verify_dn, D::D);
    // Row 2: home to the left border, then exactly two 1s.
    const StateId home = b.state("home_bot" + tag);
    const StateId bot0 = b.state("count_bot0" + tag);
    const StateId bot1 = b.state("count_bot1" + tag);
    const StateId bot2 = b.state("count_bot2" + tag);
    b.transition(verify_dn, '1', home, D::L);
    b.on_any_symbol(home, home, D::L).transition(home, kBoundary, bot0, D::R);
    b.transition(bot0, '0', bot0, D::R).transition(bot0, '1', bot1, D::R);
    b.transition(bot1, '0', bot1, D::R).transition(bot1, '1', bot2, D::R);
    // Back to the rightmost 1 of row 2, climb, and make sure it is also the
    // rightmost 1 of row 1.
    const StateId back_bot = b.state("back_bot" + tag);
    const StateId verify_up = b.state("verify_up" + tag);
    const StateId tail = b.state("tail_top" + tag);
    b.transition(bot2, '0', bot2, D::R).transition(bot2, kBoundary, back_bot, D::L);
    b.transition(back_bot, '0', back_bot, D::L).transition(back_bot, '1', verify_up, D::U);
    b.transition(verify_up, '1', tail, D::R);
    b.transition(tail, '0', tail, D::R);
    if (k == i) {
      b.transition(tail, kBoundary, accept, D::L);
    } else {
      const StateId ret = b.state("return" + tag);
      const StateId descend = b.state("descend" + tag);
      const StateId enter = b.state("enter" + tag);
      b.transition(tail, kBoundary, ret, D::L);
      b.on_any_symbol(ret, ret, D::L).transition(ret, kBoundary, descend, D::D);
      b.transition(descend, kBoundary, enter, D::D);
      b.transition(enter, kBoundary, entry[k], D::R);
    }
  }
  return b.build();
}

Automaton build_M_M1() { return build_M_Mi(1); }

Automaton build_P_N2() {
  AutomatonBuilder b(std::string("P_N2"), binary_alphabet());
  b.mode(Mode::Nondeterministic)
      .policy({{D::D, D::L, D::R}, {}})
      .budget({Bound(0), Bound::infinite()});
  const StateId scan1 = b.state("scan1");
  const StateId verify1 = b.state("verify_dn1");
  const StateId home = b.state("home");
  const StateId enter3 = b.state("enter3");
  const StateId scan3 = b.state("scan3");
  const StateId verify3 = b.state("verify_dn3");
  const StateId accept = b.state("accept");
  b.initial(scan1).accepting(accept);
  scan_and_pick(b, scan1, verify1, D::D);
  b.transition(verify1, '1', home, D::L);
  b.on_any_symbol(home, home, D::L).transition(home, kBoundary, enter3, D::D);
  b.transition(enter3, kBoundary, scan3, D::R);
  scan_and_pick(b, scan3, verify3, D::D);
  b.transition(verify3, '1', accept, D::R);
  return b.build();
}

Automaton build_C_L1_2W() {
  auto b = build_A_L1().to_builder();
  b.name("C_L1_2W").policy(DirectionPolicy::two_way()).budget({Bound(1), Bound(0)});
  return b.build();
}

Automaton build_D_K(unsigned i) {
  if (i < 1) throw Error(ErrorKind::Precondition, "D_K needs i >= 1");
  AutomatonBuilder b = two_way("D_K" + std::to_string(i), Mode::Nondeterministic, i);
  std::vector<StateId> entry;
  for (unsigned r = 1; r <= i; ++r) entry.push_back(b.state("pick_top" + suffix(r)));
  const StateId accept = b.state("accept");
  b.initial(entry.front()).accepting(accept);
  for (unsigned r = 1; r <= i; ++r) {
    const auto tag = suffix(r);
    const StateId check_bot = b.state("verify_dn" + tag);
    const StateId pick_bot = b.state("pick_bot" + tag);
    const StateId check_top = b.state("verify_up" + tag);
    scan_and_pick(b, entry[r - 1], check_bot, D::D);
    b.transition(check_bot, '1', pick_bot, D::R);
    scan_and_pick(b, pick_bot, check_top, D::U);
    b.transition(check_top, '1', r == i ? accept : entry[r], D::R);
  }
  return b.build();
}

Automaton build_S_rec(unsigned i) {
  AutomatonBuilder b = two_way("S_rec" + std::to_string(i), Mode::Deterministic, i + 1);
  std::vector<StateId> entry;
  for (unsigned k = 0; k <= i; ++k) entry.push_back(b.state("top_left" + suffix(k)));
  const StateId edge = b.state("right_border");
  const StateId accept = b.state("accept");
  b.initial(entry.front()).accepting(accept);
  for (unsigned k = 0; k <= i; ++k) {
    const auto tag = suffix(k);
    const StateId bot_left = b.state("bot_left" + tag);
    const StateId bot_right = b.state("bot_right" + tag);
    const StateId top_right = b.state("top_right" + tag);
    b.transition(entry[k], '1', bot_left, D::D);
    b.transition(bot_left, '1', bot_right, D::R);
    b.transition(bot_right, '1', top_right, D::U);
    b.transition(top_right, '1', k == i ? edge : entry[k + 1], D::R);
  }
  b.transition(edge, kBoundary, accept, D::D);
  return b.build();
}

Automaton build_flawed_L1_3W0() {
  AutomatonBuilder b(std::string("FLAWED_L1_3W0_not_a_recognizer"), binary_alphabet());
  b.mode(Mode::Nondeterministic)
      .policy({{D::D, D::L, D::R}, {}})
      .budget({Bound(0), Bound::infinite()});
  const StateId first = b.state("top_first");
  const StateId second = b.state("top_second");
  const StateId cross = b.state("cross");
  const StateId home = b.state("home");
  const StateId bot_first = b.state("bot_first");
  const StateId bot_second = b.state("bot_second");
  const StateId accept = b.state("accept");
  b.initial(first).accepting(accept);
  b.transition(first, '0', first, D::R).transition(first, '1', second, D::R);
  scan_and_pick(b, second, cross, D::D);
  b.on_any_symbol(cross, home, D::L);
  b.on_any_symbol(home, home, D::L).transition(home, kBoundary, bot_first, D::R);
  b.transition(bot_first, '0', bot_first, D::R).transition(bot_first, '1', bot_second, D::R);
  b.transition(bot_second, '0', bot_second, D::R).transition(bot_second, '1', accept, D::R);
  return b.build();
}

// ---------------------------------------------------------------------------

namespace {

struct KindInfo {
  BuilderKind kind;
  std::string_view name;
};

constexpr KindInfo kKinds[] = {
    {BuilderKind::A_L1, "A_L1"},   {BuilderKind::B_L, "B_L"},
    {BuilderKind::M_M1, "M_M1"},   {BuilderKind::M_Mi, "M_Mi"},
    {BuilderKind::P_N2, "P_N2"},   {BuilderKind::C_L1_2W, "C_L1_2W"},
    {BuilderKind::D_K, "D_K"},     {BuilderKind::S_rec, "S_rec"},
    {BuilderKind::FLAWED_L1_3W0, "FLAWED_L1_3W0"},
};

}  // namespace

std::optional<BuilderKind> BuilderId::parse_kind(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

bool BuilderId::takes_param(BuilderKind kind) {
  return kind == BuilderKind::B_L || kind == BuilderKind::M_Mi ||
         kind == BuilderKind::D_K || kind == BuilderKind::S_rec;
}

unsigned BuilderId::default_param(BuilderKind kind) {
  return kind == BuilderKind::S_rec ? 0 : 1;
}

std::string BuilderId::to_string() const {
  for (const auto& k : kKinds) {
    if (k.kind == kind) {
      std::string out(k.name);
      if (takes_param(kind)) out += "(" + std::to_string(param) + ")";
      return out;
    }
  }
  return "?";
}

Automaton build(const BuilderId& id) {
  switch (id.kind) {
    case BuilderKind::A_L1: return build_A_L1();
    case BuilderKind::B_L: return build_B_L(id.param);
    case BuilderKind::M_M1: return build_M_M1();
    case BuilderKind::M_Mi: return build_M_Mi(id.param);
    case BuilderKind::P_N2: return build_P_N2();
    case BuilderKind::C_L1_2W: return build_C_L1_2W();
    case BuilderKind::D_K: return build_D_K(id.param);
    case BuilderKind::S_rec: return build_S_rec(id.param);
    case BuilderKind::FLAWED_L1_3W0: return build_flawed_L1_3W0();
  }
  throw Error(ErrorKind::Argument, "unknown builder");
}

std::string expected_class(const BuilderId& id) {
  const auto i = std::to_string(id.param);
  switch (id.kind) {
    case BuilderKind::A_L1: return "2NFA-3W[1]";
    case BuilderKind::B_L: return "2NFA-3W[" + i + "]";
    case BuilderKind::M_M1: return "2DFA-3W[1]";
    case BuilderKind::M_Mi: return "2DFA-3W[" + i + "]";
    case BuilderKind::P_N2: return "2NFA-3W[0]";
    case BuilderKind::C_L1_2W: return "2NFA-2W[1,0]";
    case BuilderKind::D_K: return "2NFA-2W[" + i + ",0]";
    case BuilderKind::S_rec: return "2DFA-2W[" + std::to_string(id.param + 1) + ",0]";
    case BuilderKind::FLAWED_L1_3W0: return "2NFA-3W[0]";
  }
  return "?";
}

LanguageContract contract(const BuilderId& id) {
  using K = LanguageId::Kind;
  switch (id.kind) {
    case BuilderKind::A_L1: return {{K::L, 1}, 2};
    case BuilderKind::B_L: return {{K::L, id.param}, 2 * std::size_t{id.param}};
    case BuilderKind::M_M1: return {{K::M, 1}, 2};
    case BuilderKind::M_Mi: return {{K::M, id.param}, 2 * std::size_t{id.param}};
    case BuilderKind::P_N2: return {{K::N, 2}, 4};
    case BuilderKind::C_L1_2W: return {{K::L, 1}, 2};
    case BuilderKind::D_K: return {{K::K, id.param}, 2};
    case BuilderKind::S_rec: return {{K::S, 2 * id.param + 2}, 2};
    case BuilderKind::FLAWED_L1_3W0: return {{K::L, 1}, 2};
  }
  throw Error(ErrorKind::Argument, "unknown builder");
}

}  // namespace picwalk
