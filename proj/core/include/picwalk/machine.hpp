#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "picwalk/grid.hpp"

namespace picwalk {

enum class Direction : std::uint8_t { U, D, L, R };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::U, Direction::D, Direction::L, Direction::R};

char to_char(Direction d);
std::optional<Direction> direction_from_char(char c);

/// A move allowance: a nonnegative count, or infinite. Infinite compares
/// above every count.
class Bound {
 public:
  constexpr Bound() = default;
  constexpr explicit Bound(std::uint32_t count) : count_(count) {}

  static constexpr Bound infinite() {
    Bound b;
    b.infinite_ = true;
    return b;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Meaningless when infinite.
  constexpr std::uint32_t count() const { return count_; }

  friend constexpr bool operator==(const Bound& a, const Bound& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.count_ == b.count_);
  }
  friend constexpr std::strong_ordering operator<=>(const Bound& a,
                                                    const Bound& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.count_ <=> b.count_;
  }

  std::string to_string() const;
  static std::optional<Bound> parse(std::string_view text);

 private:
  std::uint32_t count_ = 0;
  bool infinite_ = false;
};

Bound max(const Bound& a, const Bound& b);

struct Budget {
  Bound up;
  Bound left;

  friend bool operator==(const Budget&, const Budget&) = default;
};

/// Four-bit direction set.
class DirectionSet {
 public:
  constexpr DirectionSet() = default;
  constexpr DirectionSet(std::initializer_list<Direction> dirs) {
    for (auto d : dirs) bits_ |= bit(d);
  }

  constexpr bool contains(Direction d) const { return (bits_ & bit(d)) != 0; }
  constexpr void insert(Direction d) { bits_ |= bit(d); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr DirectionSet operator|(DirectionSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr DirectionSet operator&(DirectionSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr bool subset_of(DirectionSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// Letters in U, D, L, R order, space separated.
  std::string to_string() const;

  friend constexpr bool operator==(DirectionSet, DirectionSet) = default;

 private:
  static constexpr std::uint8_t bit(Direction d) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(d));
  }
  static constexpr DirectionSet from_bits(std::uint8_t bits) {
    DirectionSet s;
    s.bits_ = bits & 0xF;
    return s;
  }
  std::uint8_t bits_ = 0;
};

/// Splits the four directions into free, budgeted and (implicitly)
/// forbidden moves.
struct DirectionPolicy {
  DirectionSet free;
  DirectionSet budgeted;

  bool allows(Direction d) const {
    return free.contains(d) || budgeted.contains(d);
  }
  bool forbids(Direction d) const { return !allows(d); }

  static DirectionPolicy four_way() {
    return {{Direction::U, Direction::D, Direction::L, Direction::R}, {}};
  }
  /// {D, L, R} free, U budgeted.
  static DirectionPolicy three_way() {
    return {{Direction::D, Direction::L, Direction::R}, {Direction::U}};
  }
  /// {U, D, R} free, L budgeted.
  static DirectionPolicy three_way_rotated() {
    return {{Direction::U, Direction::D, Direction::R}, {Direction::L}};
  }
  /// {D, R} free, U and L budgeted.
  static DirectionPolicy two_way() {
    return {{Direction::D, Direction::R}, {Direction::U, Direction::L}};
  }

  friend bool operator==(const DirectionPolicy&, const DirectionPolicy&) = default;
};

enum class Mode : std::uint8_t { Deterministic, Nondeterministic };

using StateId = std::uint32_t;

struct Transition {
  StateId from;
  char symbol;  // alphabet symbol or kBoundary
  StateId to;
  Direction dir;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Target of a transition, as seen from the (state, symbol) lookup.
struct Edge {
  StateId to;
  Direction dir;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class AutomatonBuilder;

/// An immutable two-dimensional automaton with a bounded budget of upward
/// and leftward moves. Transitions keep their declaration order; lookups
/// preserve it, which is what makes canonical traces reproducible.
class Automaton {
 public:
  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  std::size_t state_count() const { return states_.size(); }
  StateId initial() const { return initial_; }
  StateId accepting() const { return accepting_; }
  Mode mode() const { return mode_; }
  bool deterministic() const { return mode_ == Mode::Deterministic; }
  const DirectionPolicy& policy() const { return policy_; }
  const Budget& budget() const { return budget_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  const std::string& state_name(StateId s) const { return states_.at(s); }
  std::optional<StateId> find_state(std::string_view name) const;

  /// Edges on (state, symbol) in declaration order. Symbols outside the
  /// alphabet and dangling state ids yield an empty span.
  std::span<const Edge> edges(StateId state, char symbol) const;

  /// Directions that appear on at least one transition.
  DirectionSet used_directions() const;

  AutomatonBuilder to_builder() const;

  friend bool operator==(const Automaton& a, const Automaton& b) {
    return a.name_ == b.name_ && a.alphabet_ == b.alphabet_ &&
           a.states_ == b.states_ && a.initial_ == b.initial_ &&
           a.accepting_ == b.accepting_ && a.mode_ == b.mode_ &&
           a.policy_ == b.policy_ && a.budget_ == b.budget_ &&
           a.transitions_ == b.transitions_;
  }

 private:
  friend class AutomatonBuilder;
  Automaton() = default;
  void index();

  std::string name_;
  Alphabet alphabet_;
  std::vector<std::string> states_;
  StateId initial_ = 0;
  StateId accepting_ = 0;
  Mode mode_ = Mode::Deterministic;
  DirectionPolicy policy_;
  Budget budget_;
  std::vector<Transition> transitions_;

  // (state * (|alphabet| + 1) + symbol index) -> [offsets[k], offsets[k+1])
  std::vector<std::uint32_t> offsets_;
  std::vector<Edge> edges_;
};

/// Mutable assembly of an Automaton. build() does not validate; run
/// validate() on the result when the input is untrusted.
class AutomatonBuilder {
 public:
  AutomatonBuilder(std::string name, Alphabet alphabet);

  AutomatonBuilder& mode(Mode m);
  AutomatonBuilder& policy(DirectionPolicy p);
  AutomatonBuilder& budget(Budget b);
  AutomatonBuilder& name(std::string n);

  /// Returns the existing id when the state is already declared.
  StateId state(std::string_view name);
  std::optional<StateId> find_state(std::string_view name) const;
  std::size_t state_count() const { return states_.size(); }

  AutomatonBuilder& initial(StateId s);
  AutomatonBuilder& accepting(StateId s);
  AutomatonBuilder& transition(StateId from, char symbol, StateId to, Direction dir);
  /// Same transition for every alphabet symbol (not the boundary).
  AutomatonBuilder& on_any_symbol(StateId from, StateId to, Direction dir);

  const Alphabet& alphabet() const { return alphabet_; }

  Automaton build() const;

 private:
  std::string name_;
  Alphabet alphabet_;
  std::vector<std::string> states_;
  StateId initial_ = 0;
  StateId accepting_ = 0;
  Mode mode_ = Mode::Deterministic;
  DirectionPolicy policy_ = DirectionPolicy::four_way();
  Budget budget_{Bound::infinite(), Bound::infinite()};
  std::vector<Transition> transitions_;
};

// ---------------------------------------------------------------------------
// Validation and classification

enum class ViolationKind {
  Determinism,
  AcceptingTransition,
  DirectionPolicy,
  DanglingState,
  PolicyShape,
  BudgetPolicy,
  UnknownSymbol,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Every violated well-formedness rule; empty iff the machine is well formed.
std::vector<Violation> validate(const Automaton& a);

/// Throws ErrorKind::Validation listing the violations, if any.
void require_valid(const Automaton& a);

enum class Family { FourWay, ThreeWay, ThreeWayRotated, TwoWay };

std::string_view to_string(Family f);

struct ClassTag {
  Family family;
  Bound up;
  Bound left;
  Mode mode;

  /// e.g. "2NFA-3W[1]", "2DFA-2W[1,0]", "2NFA-4W", "2DFA-3W-rot[2]".
  std::string to_string() const;

  friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

/// Class tag from the declared policy. A direction's allowance is infinite
/// when it is free, the declared budget when it is budgeted, and zero when
/// forbidden; the family follows from which allowances are infinite.
ClassTag classify(const Automaton& a);

/// Effective runtime allowance of a direction: infinite for free moves, the
/// declared budget for budgeted moves, zero for forbidden moves.
Bound allowance(const Automaton& a, Direction d);

// ---------------------------------------------------------------------------
// Constructions

/// Nondeterministic machine accepting L(a) ∪ L(b). A fresh start state
/// carries both initial states' transitions and a fresh accepting state
/// absorbs both. When one side's allowance for U or L is smaller than the
/// union's, that side's states are layered by remaining budget so it never
/// gains moves it did not have.
Automaton union_machine(const Automaton& a, const Automaton& b);

/// Swaps D<->R and U<->L and the budgets with them. Accepts transpose(p)
/// iff `a` accepts p.
Automaton transpose_machine(const Automaton& a);

/// Maps directions under a clockwise quarter turn (U->R, R->D, D->L, L->U).
/// Accepts rotate90_cw(p) iff `a` accepts p. A short prelude walks the head
/// from the new top-left corner to the image of the old one. Only machines
/// whose U and D moves are free can be rotated this way.
Automaton rotate_machine(const Automaton& a);

// ---------------------------------------------------------------------------
// Text format

Automaton parse_machine(std::string_view text);
std::string serialize_machine(const Automaton& a);

}  // namespace picwalk
