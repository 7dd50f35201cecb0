#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "picwalk/languages.hpp"
#include "picwalk/machine.hpp"

namespace picwalk {

// Recognizers for the witness languages. Each builder emits an explicit
// transition table over {0, 1}; state names spell out the gadget they belong
// to (scan, verify_dn, verify_up, return, descend, ...). None of them checks
// the row count: their language contracts hold on pictures of the stated
// height.

/// Nondeterministic 3W[1]: on 2-row pictures accepts exactly L_1. Picks a
/// stacked column from row 1 (down move to confirm), a later one from row 2
/// (the single up move confirms).
Automaton build_A_L1();

/// Nondeterministic 3W[i]: on 2i-row pictures accepts exactly L_i. Repeats
/// the A_L1 gadget per row pair, returning to the left border and
/// descending two rows between pairs.
Automaton build_B_L(unsigned i);

/// Deterministic 3W[1]: on 2-row pictures accepts exactly M_1. Counts the
/// 1s of each row with a three-valued counter, checks the leftmost 1 of
/// row 1 from below, then climbs from the rightmost 1 of row 2 and checks
/// that nothing to its right in row 1 is a 1.
Automaton build_M_M1();

/// Deterministic 3W[i]: the M_M1 gadget per row pair; on 2i-row pictures
/// accepts exactly M_i using i up moves.
Automaton build_M_Mi(unsigned i);

/// Nondeterministic 3W[0]: on 4-row pictures accepts exactly N_2.
Automaton build_P_N2();

/// Nondeterministic 2W[1,0]: the A_L1 procedure under the two-way policy.
Automaton build_C_L1_2W();

/// Nondeterministic 2W[i,0]: on 2-row pictures accepts exactly K_i (at
/// least 2i stacked columns). Alternates picks between the rows; every
/// second pick costs one up move.
Automaton build_D_K(unsigned i);

/// Deterministic 2W[i+1,0]: zig-zags through the 2 x (2i+2) all-ones word,
/// one up move per column pair, then confirms the right border. On 2-row
/// pictures accepts exactly S_{2i+2}.
Automaton build_S_rec(unsigned i);

/// NOT a recognizer of L_1. Nondeterministic 3W[0] fixture that accepts
/// when row 1 holds two 1s and, after descending at a 1, row 2 holds two
/// 1s. Accepts every make_w(i, j, z) and some pictures outside L_1.
Automaton build_flawed_L1_3W0();

enum class BuilderKind { A_L1, B_L, M_M1, M_Mi, P_N2, C_L1_2W, D_K, S_rec, FLAWED_L1_3W0 };

struct BuilderId {
  BuilderKind kind;
  unsigned param = 1;  // only for B_L, M_Mi, D_K (>= 1) and S_rec (>= 0)

  /// Names: A_L1, B_L, M_M1, M_Mi, P_N2, C_L1_2W, D_K, S_rec, FLAWED_L1_3W0.
  static std::optional<BuilderKind> parse_kind(std::string_view name);
  static bool takes_param(BuilderKind kind);
  static unsigned default_param(BuilderKind kind);

  std::string to_string() const;
};

Automaton build(const BuilderId& id);

/// Class the construction is meant to inhabit, e.g. "2NFA-3W[1]".
std::string expected_class(const BuilderId& id);

/// Language the construction recognizes and the picture height on which
/// that contract holds.
struct LanguageContract {
  LanguageId language;
  std::size_t rows;
};

LanguageContract contract(const BuilderId& id);

}  // namespace picwalk
