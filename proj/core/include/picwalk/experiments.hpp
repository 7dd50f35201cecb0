#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picwalk/grid.hpp"
#include "picwalk/languages.hpp"
#include "picwalk/machine.hpp"
#include "picwalk/simulator.hpp"

namespace picwalk {

struct Mismatch {
  Picture picture;
  bool machine;  // machine verdict
  bool oracle;   // membership
  Budget budget;
};

/// Acceptance counts at one budget level.
struct BudgetLevel {
  Budget budget;
  std::size_t pictures = 0;
  std::size_t accepted = 0;
  std::size_t members = 0;
  std::size_t accepted_members = 0;

  bool starved() const { return members > 0 && accepted_members == 0; }
};

struct SweepReport {
  std::string machine;
  LanguageId language;
  std::size_t rows = 0;
  std::size_t cols_max = 0;
  std::vector<BudgetLevel> levels;
  std::vector<Mismatch> mismatches;
  /// Accepted set at a smaller budget is contained in the accepted set at
  /// every componentwise larger budget.
  bool monotone = true;

  std::string to_table() const;
  std::string to_records() const;
};

/// Runs `a` at its declared budget on every picture with `rows` rows and
/// 1..cols_max columns and lists every disagreement with the oracle.
SweepReport oracle_equivalence(const Automaton& a, const LanguageId& lang, std::size_t rows,
                               std::size_t cols_max);

/// The same sweep repeated at each budget override. Mismatches are
/// over-acceptances at any level plus under-acceptances at the declared
/// budget; a starved level rejecting members is the expected outcome.
SweepReport budget_sweep(const Automaton& a, const LanguageId& lang, std::size_t rows,
                         std::size_t cols_max, const std::vector<Budget>& budgets);

/// Budgets {k, declared left} for each k in `ups`.
std::vector<Budget> up_budgets(const Automaton& a, const std::vector<unsigned>& ups);

/// A vertical move. `boundary` is x when the head moves between rows x-1
/// and x; `state` and `col` are taken before the move.
struct CrossingEvent {
  std::size_t step;
  long boundary;
  long col;
  StateId state;
  Direction dir;

  friend bool operator==(const CrossingEvent&, const CrossingEvent&) = default;
};

std::vector<CrossingEvent> crossing_events(const Trace& t);

struct CrossingMatch {
  std::size_t first;  // indices into the supplied word list
  std::size_t second;
  Picture word1;
  Picture word2;
  CrossingEvent event;  // the shared downward crossing, as seen in word1's trace
};

struct CrossingSearch {
  std::optional<CrossingMatch> match;
  /// Words whose canonical trace never crosses the boundary downward, or
  /// (with the upward filter) also crosses it upward.
  std::vector<std::size_t> skipped;
};

/// Looks for two distinct words whose canonical accepting traces first
/// cross `boundary` downward in the same column and state. With
/// `forbid_upward_crossing`, traces that also cross the boundary upward are
/// skipped. Throws ErrorKind::Argument if a word is not accepted.
CrossingSearch find_crossing_match(const Automaton& machine, const std::vector<Picture>& words,
                                   long boundary, bool forbid_upward_crossing = false);

enum class SpliceStatus {
  Demonstrated,  // spliced word accepted but not in L_1
  Survived,      // machine rejected the spliced word (or it is in L_1)
  Inconclusive,  // no crossing match among the words
};

std::string_view to_string(SpliceStatus s);

struct SpliceReport {
  std::size_t z = 0;
  std::size_t state_count = 0;
  SpliceStatus status = SpliceStatus::Inconclusive;
  std::optional<CrossingMatch> match;
  std::optional<Picture> word;
  bool accepted = false;
  bool in_language = false;
  std::size_t words_tried = 0;

  std::string to_text(const Automaton& machine) const;
  std::string to_records(const Automaton& machine) const;
};

/// The cut-and-paste argument against a claimed L_1 recognizer: among all
/// make_w(i, j, z), find two whose traces cross into row 2 with the same
/// signature, splice row 1 of one over row 2 of the other, and run the
/// machine on the result.
SpliceReport splice_counterexample(const Automaton& machine, std::size_t z);

/// Least z with (z - 1) / 2 > m * (i + 1), i.e. 2m(i + 1) + 2.
std::size_t fooling_z(std::size_t m, std::size_t i);

struct HierarchyRow {
  std::string family;  // "three-way" or "two-way"
  unsigned level;
  std::string expected_class;
  std::string classified;
  LanguageId witness;
  std::size_t rows;
  std::size_t pictures;
  std::size_t members;
  std::size_t accepted_members;  // at the full budget
  std::size_t starved_accepts;   // members accepted one up move short
  std::size_t mismatches;

  bool starvation_confirmed() const { return members > 0 && starved_accepts == 0; }
};

struct HierarchyReport {
  std::size_t cols_max = 0;
  std::vector<HierarchyRow> rows;

  std::string to_table() const;
  std::string to_records() const;
};

/// For i = 1..i_max: M_i against the deterministic three-way machine with i
/// up moves, and S_{2i} against the deterministic two-way machine with i up
/// moves, each swept at budgets i and i - 1.
HierarchyReport hierarchy_report(unsigned i_max, std::size_t cols_max);

/// Left-aligned columns separated by two spaces.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace picwalk
