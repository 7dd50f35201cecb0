#include "picwalk/machine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "picwalk/error.hpp"

namespace picwalk {

char to_char(Direction d) {
  switch (d) {
    case Direction::U: return 'U';
    case Direction::D: return 'D';
    case Direction::L: return 'L';
    case Direction::R: return 'R';
  }
  return '?';
}

std::optional<Direction> direction_from_char(char c) {
  switch (c) {
    case 'U': return Direction::U;
    case 'D': return Direction::D;
    case 'L': return Direction::L;
    case 'R': return Direction::R;
    default: return std::nullopt;
  }
}

std::string Bound::to_string() const {
  return infinite_ ? "inf" : std::to_string(count_);
}

std::optional<Bound> Bound::parse(std::string_view text) {
  if (text == "inf") return Bound::infinite();
  if (text.empty() || text.size() > 9) return std::nullopt;
  std::uint32_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::uint32_t>(c - '0');
  }
  return Bound(value);
}

Bound max(const Bound& a, const Bound& b) { return a < b ? b : a; }

std::string DirectionSet::to_string() const {
  std::string out;
  for (auto d : kAllDirections) {
    if (!contains(d)) continue;
    if (!out.empty()) out += ' ';
    out += to_char(d);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<StateId> Automaton::find_state(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

void Automaton::index() {
  const std::size_t width = alphabet_.size() + 1;
  const std::size_t keys = states_.size() * width;
  offsets_.assign(keys + 1, 0);
  auto key_of = [&](const Transition& t) -> std::optional<std::size_t> {
    if (t.from >= states_.size()) return std::nullopt;
    if (t.symbol != kBoundary && !alphabet_.contains(t.symbol)) return std::nullopt;
    return t.from * width + alphabet_.index_of(t.symbol);
  };
  for (const auto& t : transitions_) {
    if (auto k = key_of(t)) ++offsets_[*k + 1];
  }
  for (std::size_t k = 0; k < keys; ++k) offsets_[k + 1] += offsets_[k];
  edges_.assign(offsets_.back(), Edge{});
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& t : transitions_) {
    if (auto k = key_of(t)) edges_[fill[*k]++] = Edge{t.to, t.dir};
  }
}

std::span<const Edge> Automaton::edges(StateId state, char symbol) const {
  if (state >= states_.size()) return {};
  if (symbol != kBoundary && !alphabet_.contains(symbol)) return {};
  const std::size_t k = state * (alphabet_.size() + 1) + alphabet_.index_of(symbol);
  return std::span<const Edge>(edges_.data() + offsets_[k],
                               offsets_[k + 1] - offsets_[k]);
}

DirectionSet Automaton::used_directions() const {
  DirectionSet used;
  for (const auto& t : transitions_) used.insert(t.dir);
  return used;
}

AutomatonBuilder Automaton::to_builder() const {
  AutomatonBuilder b(name_, alphabet_);
  for (const auto& s : states_) b.state(s);
  b.initial(initial_).accepting(accepting_).mode(mode_).policy(policy_).budget(budget_);
  for (const auto& t : transitions_) b.transition(t.from, t.symbol, t.to, t.dir);
  return b;
}

AutomatonBuilder::AutomatonBuilder(std::string name, Alphabet alphabet)
    : name_(std::move(name)), alphabet_(std::move(alphabet)) {}

AutomatonBuilder& AutomatonBuilder::mode(Mode m) {
  mode_ = m;
  return *this;
}
AutomatonBuilder& AutomatonBuilder::policy(DirectionPolicy p) {
  policy_ = p;
  return *this;
}
AutomatonBuilder& AutomatonBuilder::budget(Budget b) {
  budget_ = b;
  return *this;
}
AutomatonBuilder& AutomatonBuilder::name(std::string n) {
  name_ = std::move(n);
  return *this;
}

StateId AutomatonBuilder::state(std::string_view name) {
  if (auto existing = find_state(name)) return *existing;
  states_.emplace_back(name);
  return static_cast<StateId>(states_.size() - 1);
}

std::optional<StateId> AutomatonBuilder::find_state(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

AutomatonBuilder& AutomatonBuilder::initial(StateId s) {
  initial_ = s;
  return *this;
}
AutomatonBuilder& AutomatonBuilder::accepting(StateId s) {
  accepting_ = s;
  return *this;
}
AutomatonBuilder& AutomatonBuilder::transition(StateId from, char symbol,
                                               StateId to, Direction dir) {
  transitions_.push_back(Transition{from, symbol, to, dir});
  return *this;
}
AutomatonBuilder& AutomatonBuilder::on_any_symbol(StateId from, StateId to,
                                                  Direction dir) {
  for (char c : alphabet_.symbols()) transition(from, c, to, dir);
  return *this;
}

Automaton AutomatonBuilder::build() const {
  Automaton a;
  a.name_ = name_;
  a.alphabet_ = alphabet_;
  a.states_ = states_;
  a.initial_ = initial_;
  a.accepting_ = accepting_;
  a.mode_ = mode_;
  a.policy_ = policy_;
  a.budget_ = budget_;
  a.transitions_ = transitions_;
  a.index();
  return a;
}

// ---------------------------------------------------------------------------

namespace {

std::string describe(const Automaton& a, const Transition& t) {
  auto name = [&](StateId s) {
    return s < a.state_count() ? a.state_name(s) : "<" + std::to_string(s) + ">";
  };
  return name(t.from) + " " + t.symbol + " -> " + name(t.to) + " " + to_char(t.dir);
}

const DirectionSet kBudgetable{Direction::U, Direction::L};

}  // namespace

std::vector<Violation> validate(const Automaton& a) {
  std::vector<Violation> out;
  const auto& policy = a.policy();
  const auto n = a.state_count();

  if (!(policy.free & policy.budgeted).empty()) {
    out.push_back({ViolationKind::PolicyShape,
                   "directions both free and budgeted: " +
                       (policy.free & policy.budgeted).to_string()});
  }
  if (!policy.budgeted.subset_of(kBudgetable)) {
    out.push_back({ViolationKind::PolicyShape,
                   "only U and L may be budgeted, got: " + policy.budgeted.to_string()});
  }
  if (policy.free.contains(Direction::U) && !a.budget().up.is_infinite()) {
    out.push_back({ViolationKind::BudgetPolicy,
                   "U is free but declares finite budget " + a.budget().up.to_string()});
  }
  if (policy.free.contains(Direction::L) && !a.budget().left.is_infinite()) {
    out.push_back({ViolationKind::BudgetPolicy,
                   "L is free but declares finite budget " + a.budget().left.to_string()});
  }
  if (n == 0) {
    out.push_back({ViolationKind::DanglingState, "machine declares no states"});
  }
  if (a.initial() >= n) {
    out.push_back({ViolationKind::DanglingState, "initial state is not declared"});
  }
  if (a.accepting() >= n) {
    out.push_back({ViolationKind::DanglingState, "accepting state is not declared"});
  }

  std::map<std::pair<StateId, char>, std::size_t> seen;
  for (const auto& t : a.transitions()) {
    const auto text = describe(a, t);
    if (t.from >= n || t.to >= n) {
      out.push_back({ViolationKind::DanglingState, "undeclared state in: " + text});
    }
    if (t.symbol != kBoundary && !a.alphabet().contains(t.symbol)) {
      out.push_back({ViolationKind::UnknownSymbol, "symbol outside alphabet in: " + text});
    }
    if (t.from == a.accepting()) {
      out.push_back({ViolationKind::AcceptingTransition,
                     "transition leaves the accepting state: " + text});
    }
    if (!policy.allows(t.dir)) {
      out.push_back({ViolationKind::DirectionPolicy,
                     std::string("direction ") + to_char(t.dir) +
                         " is forbidden by the policy: " + text});
    }
    if (a.deterministic() && ++seen[{t.from, t.symbol}] == 2) {
      out.push_back({ViolationKind::Determinism,
                     "more than one transition on (" +
                         (t.from < n ? a.state_name(t.from) : std::string("?")) + ", " +
                         t.symbol + ") in a deterministic machine"});
    }
  }
  return out;
}

void require_valid(const Automaton& a) {
  const auto violations = validate(a);
  if (violations.empty()) return;
  std::string msg = "machine '" + a.name() + "' is not well formed:";
  for (const auto& v : violations) msg += "\n  " + v.message;
  throw Error(ErrorKind::Validation, msg);
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::FourWay: return "4W";
    case Family::ThreeWay: return "3W";
    case Family::ThreeWayRotated: return "3W-rot";
    case Family::TwoWay: return "2W";
  }
  return "?";
}

std::string ClassTag::to_string() const {
  std::string out = mode == Mode::Deterministic ? "2DFA-" : "2NFA-";
  out += picwalk::to_string(family);
  switch (family) {
    case Family::FourWay: break;
    case Family::ThreeWay: out += "[" + up.to_string() + "]"; break;
    case Family::ThreeWayRotated: out += "[" + left.to_string() + "]"; break;
    case Family::TwoWay:
      out += "[" + up.to_string() + "," + left.to_string() + "]";
      break;
  }
  return out;
}

Bound allowance(const Automaton& a, Direction d) {
  if (a.policy().free.contains(d)) return Bound::infinite();
  if (!a.policy().budgeted.contains(d)) return Bound(0);
  if (d == Direction::U) return a.budget().up;
  if (d == Direction::L) return a.budget().left;
  return Bound(0);
}

ClassTag classify(const Automaton& a) {
  require_valid(a);
  ClassTag tag{Family::TwoWay, allowance(a, Direction::U), allowance(a, Direction::L), a.mode()};
  const bool up_inf = tag.up.is_infinite();
  const bool left_inf = tag.left.is_infinite();
  if (up_inf && left_inf) {
    tag.family = Family::FourWay;
  } else if (up_inf) {
    tag.family = Family::ThreeWayRotated;
  } else if (left_inf) {
    tag.family = Family::ThreeWay;
  }
  return tag;
}

// ---------------------------------------------------------------------------

namespace {

bool same_symbols(const Alphabet& a, const Alphabet& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.symbols().begin(), a.symbols().end(),
                     [&](char c) { return b.contains(c); });
}

struct UnionSide {
  const Automaton* machine;
  std::string prefix;
  // When limited, the side's remaining moves in that direction are tracked
  // in its state layers and a move from layer 0 is dropped.
  bool up_limited = false;
  bool left_limited = false;
  std::uint32_t up_layers = 1;
  std::uint32_t left_layers = 1;
};

std::string layered_name(const UnionSide& side, StateId s, std::uint32_t up,
                         std::uint32_t left) {
  std::string name = side.prefix + side.machine->state_name(s);
  if (side.up_layers > 1) name += "@u" + std::to_string(up);
  if (side.left_layers > 1) name += "@l" + std::to_string(left);
  return name;
}

std::string fresh_name(const AutomatonBuilder& b, std::string base) {
  while (b.find_state(base)) base += "'";
  return base;
}

}  // namespace

Automaton union_machine(const Automaton& a, const Automaton& b) {
  if (!same_symbols(a.alphabet(), b.alphabet())) {
    throw Error(ErrorKind::Composition, "union needs machines over the same alphabet");
  }
  require_valid(a);
  require_valid(b);

  DirectionPolicy policy;
  Budget budget{Bound(0), Bound(0)};
  for (auto d : kAllDirections) {
    if (a.policy().free.contains(d) || b.policy().free.contains(d)) {
      policy.free.insert(d);
    } else if (a.policy().budgeted.contains(d) || b.policy().budgeted.contains(d)) {
      policy.budgeted.insert(d);
    }
  }
  auto result_bound = [&](Direction d) {
    if (policy.free.contains(d)) return Bound::infinite();
    Bound best(0);
    for (const Automaton* m : {&a, &b}) {
      if (m->policy().budgeted.contains(d)) {
        best = max(best, d == Direction::U ? m->budget().up : m->budget().left);
      }
    }
    return best;
  };
  budget.up = result_bound(Direction::U);
  budget.left = result_bound(Direction::L);

  AutomatonBuilder out("union(" + a.name() + "," + b.name() + ")", a.alphabet());
  out.mode(Mode::Nondeterministic).policy(policy).budget(budget);

  std::vector<UnionSide> sides{{&a, "a."}, {&b, "b."}};
  for (auto& side : sides) {
    const auto used = side.machine->used_directions();
    const Bound up = allowance(*side.machine, Direction::U);
    const Bound left = allowance(*side.machine, Direction::L);
    if (used.contains(Direction::U) && !up.is_infinite() && up < budget.up) {
      side.up_limited = true;
      side.up_layers = up.count() + 1;
    }
    if (used.contains(Direction::L) && !left.is_infinite() && left < budget.left) {
      side.left_limited = true;
      side.left_layers = left.count() + 1;
    }
  }

  // State ids: start, then each side's non-accepting states in every layer,
  // then the shared accepting state.
  const bool a_trivial = a.initial() == a.accepting();
  const bool b_trivial = b.initial() == b.accepting();
  const StateId start = out.state("u.start");
  std::vector<std::vector<StateId>> ids(sides.size());
  for (std::size_t k = 0; k < sides.size(); ++k) {
    const auto& side = sides[k];
    const auto& m = *side.machine;
    ids[k].assign(m.state_count() * side.up_layers * side.left_layers, 0);
    for (StateId s = 0; s < m.state_count(); ++s) {
      if (s == m.accepting()) continue;
      for (std::uint32_t u = 0; u < side.up_layers; ++u) {
        for (std::uint32_t l = 0; l < side.left_layers; ++l) {
          ids[k][(s * side.up_layers + u) * side.left_layers + l] =
              out.state(layered_name(side, s, u, l));
        }
      }
    }
  }
  const StateId accept = out.state(fresh_name(out, "u.accept"));
  out.accepting(accept);
  if (a_trivial || b_trivial) {
    out.initial(accept);
    return out.build();
  }
  out.initial(start);

  auto id_of = [&](std::size_t k, StateId s, std::uint32_t u, std::uint32_t l) {
    const auto& side = sides[k];
    if (s == side.machine->accepting()) return accept;
    return ids[k][(s * side.up_layers + u) * side.left_layers + l];
  };

  // Relabelled copy of one side. With `start_only`, the full-budget copy of
  // the initial state's transitions is emitted from the fresh start state.
  auto emit = [&](std::size_t k, bool start_only) {
    const auto& side = sides[k];
    const auto& m = *side.machine;
    for (std::uint32_t u = 0; u < side.up_layers; ++u) {
      for (std::uint32_t l = 0; l < side.left_layers; ++l) {
        const bool full = u + 1 == side.up_layers && l + 1 == side.left_layers;
        if (start_only && !full) continue;
        for (const auto& t : m.transitions()) {
          if (start_only && t.from != m.initial()) continue;
          std::uint32_t nu = u;
          std::uint32_t nl = l;
          if (t.dir == Direction::U && side.up_limited) {
            if (u == 0) continue;
            nu = u - 1;
          }
          if (t.dir == Direction::L && side.left_limited) {
            if (l == 0) continue;
            nl = l - 1;
          }
          const StateId from = start_only ? start : id_of(k, t.from, u, l);
          out.transition(from, t.symbol, id_of(k, t.to, nu, nl), t.dir);
        }
      }
    }
  };
  emit(0, true);
  emit(1, true);
  emit(0, false);
  emit(1, false);
  return out.build();
}

namespace {

Direction transposed(Direction d) {
  switch (d) {
    case Direction::U: return Direction::L;
    case Direction::L: return Direction::U;
    case Direction::D: return Direction::R;
    case Direction::R: return Direction::D;
  }
  return d;
}

Direction rotated_cw(Direction d) {
  switch (d) {
    case Direction::U: return Direction::R;
    case Direction::R: return Direction::D;
    case Direction::D: return Direction::L;
    case Direction::L: return Direction::U;
  }
  return d;
}

template <typename Map>
DirectionSet map_set(DirectionSet s, Map map) {
  DirectionSet out;
  for (auto d : kAllDirections) {
    if (s.contains(d)) out.insert(map(d));
  }
  return out;
}

}  // namespace

Automaton transpose_machine(const Automaton& a) {
  require_valid(a);
  AutomatonBuilder out(a.name(), a.alphabet());
  const auto& n = a.name();
  if (n.size() >= 2 && n.compare(n.size() - 2, 2, "^T") == 0) {
    out.name(n.substr(0, n.size() - 2));
  } else {
    out.name(n + "^T");
  }
  for (const auto& s : a.states()) out.state(s);
  out.initial(a.initial()).accepting(a.accepting()).mode(a.mode());
  out.policy({map_set(a.policy().free, transposed), map_set(a.policy().budgeted, transposed)});
  out.budget({a.budget().left, a.budget().up});
  for (const auto& t : a.transitions()) {
    out.transition(t.from, t.symbol, t.to, transposed(t.dir));
  }
  return out.build();
}

Automaton rotate_machine(const Automaton& a) {
  require_valid(a);
  if (!a.policy().free.contains(Direction::U) || !a.policy().free.contains(Direction::D)) {
    throw Error(ErrorKind::UnsupportedRotation,
                "rotating '" + a.name() +
                    "' clockwise needs free U and D moves (they become free R and L)");
  }
  AutomatonBuilder out(a.name() + "^R", a.alphabet());
  for (const auto& s : a.states()) out.state(s);
  const StateId seek = out.state(fresh_name(out, "rot.seek"));
  out.initial(seek).accepting(a.accepting()).mode(a.mode());
  out.policy({map_set(a.policy().free, rotated_cw), map_set(a.policy().budgeted, rotated_cw)});
  out.budget({a.budget().left, Bound::infinite()});
  // The old top-left corner lands on the new top-right corner.
  out.on_any_symbol(seek, seek, Direction::R);
  out.transition(seek, kBoundary, a.initial(), Direction::L);
  for (const auto& t : a.transitions()) {
    out.transition(t.from, t.symbol, t.to, rotated_cw(t.dir));
  }
  return out.build();
}

}  // namespace picwalk
