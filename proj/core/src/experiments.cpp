#include "picwalk/experiments.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "picwalk/constructions.hpp"
#include "picwalk/error.hpp"

namespace picwalk {

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

namespace {

std::string budget_text(const Budget& b) {
  return "up=" + b.up.to_string() + " left=" + b.left.to_string();
}

const char* verdict(bool accepted) { return accepted ? "accept" : "reject"; }

bool leq(const Budget& a, const Budget& b) { return a.up <= b.up && a.left <= b.left; }

}  // namespace

std::string SweepReport::to_table() const {
  std::vector<std::vector<std::string>> rows_out{
      {"budget", "pictures", "accepted", "members", "accepted_members", "starved"}};
  for (const auto& l : levels) {
    rows_out.push_back({budget_text(l.budget), std::to_string(l.pictures),
                        std::to_string(l.accepted), std::to_string(l.members),
                        std::to_string(l.accepted_members), l.starved() ? "yes" : "no"});
  }
  std::ostringstream out;
  out << "machine " << machine << " vs " << language.to_string() << " on " << rows
      << "-row pictures, cols <= " << cols_max << "\n";
  out << format_table(rows_out);
  out << "monotone in budget: " << (monotone ? "yes" : "NO") << "\n";
  out << "mismatches: " << mismatches.size() << "\n";
  constexpr std::size_t kShown = 20;
  for (std::size_t n = 0; n < mismatches.size() && n < kShown; ++n) {
    const auto& m = mismatches[n];
    out << "MISMATCH " << m.picture.to_inline() << " machine=" << verdict(m.machine)
        << " oracle=" << (m.oracle ? "member" : "non-member") << " " << budget_text(m.budget)
        << "\n";
  }
  if (mismatches.size() > kShown) {
    out << "... " << mismatches.size() - kShown << " more (use records format for all)\n";
  }
  return out.str();
}

std::string SweepReport::to_records() const {
  std::ostringstream out;
  for (const auto& l : levels) {
    out << "record=level machine=" << machine << " language=" << language.to_string()
        << " rows=" << rows << " cols_max=" << cols_max << " budget_up=" << l.budget.up.to_string()
        << " budget_left=" << l.budget.left.to_string() << " pictures=" << l.pictures
        << " accepted=" << l.accepted << " members=" << l.members
        << " accepted_members=" << l.accepted_members << " starved=" << (l.starved() ? 1 : 0)
        << "\n";
  }
  for (const auto& m : mismatches) {
    out << "record=mismatch machine=" << machine << " language=" << language.to_string()
        << " picture=" << m.picture.to_inline() << " machine_verdict=" << verdict(m.machine)
        << " oracle=" << (m.oracle ? 1 : 0) << " budget_up=" << m.budget.up.to_string()
        << " budget_left=" << m.budget.left.to_string() << "\n";
  }
  out << "record=summary machine=" << machine << " language=" << language.to_string()
      << " mismatches=" << mismatches.size() << " monotone=" << (monotone ? 1 : 0) << "\n";
  return out.str();
}

SweepReport budget_sweep(const Automaton& a, const LanguageId& lang, std::size_t rows,
                         std::size_t cols_max, const std::vector<Budget>& budgets) {
  require_valid(a);
  if (rows == 0 || cols_max == 0) {
    throw Error(ErrorKind::Parameter, "sweeps need rows >= 1 and cols_max >= 1");
  }
  const Budget declared = effective_budget(a);
  std::vector<RunOptions> options;
  for (const auto& b : budgets) {
    RunOptions o{b.up, b.left};
    effective_budget(a, o);  // rejects upward overrides
    options.push_back(o);
  }

  SweepReport report{a.name(), lang, rows, cols_max, {}, {}, true};
  for (const auto& b : budgets) report.levels.push_back(BudgetLevel{b});
  std::vector<std::vector<bool>> accepted_sets(budgets.size());

  for (std::size_t c = 1; c <= cols_max; ++c) {
    for_each_picture(a.alphabet(), rows, c, [&](const Picture& p) {
      const bool member = in_language(lang, p);
      for (std::size_t k = 0; k < budgets.size(); ++k) {
        const bool acc = accepts(a, p, options[k]);
        auto& level = report.levels[k];
        ++level.pictures;
        level.accepted += acc ? 1 : 0;
        level.members += member ? 1 : 0;
        level.accepted_members += acc && member ? 1 : 0;
        accepted_sets[k].push_back(acc);
        const bool at_declared = budgets[k] == declared;
        if ((acc && !member) || (at_declared && !acc && member)) {
          report.mismatches.push_back({p, acc, member, budgets[k]});
        }
      }
    });
  }

  for (std::size_t x = 0; x < budgets.size(); ++x) {
    for (std::size_t y = 0; y < budgets.size(); ++y) {
      if (x == y || !leq(budgets[x], budgets[y])) continue;
      for (std::size_t n = 0; n < accepted_sets[x].size(); ++n) {
        if (accepted_sets[x][n] && !accepted_sets[y][n]) report.monotone = false;
      }
    }
  }
  return report;
}

SweepReport oracle_equivalence(const Automaton& a, const LanguageId& lang, std::size_t rows,
                               std::size_t cols_max) {
  return budget_sweep(a, lang, rows, cols_max, {effective_budget(a)});
}

std::vector<Budget> up_budgets(const Automaton& a, const std::vector<unsigned>& ups) {
  const Budget declared = effective_budget(a);
  std::vector<Budget> out;
  for (auto u : ups) out.push_back({Bound(u), declared.left});
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CrossingEvent> crossing_events(const Trace& t) {
  std::vector<CrossingEvent> out;
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    if (s.dir == Direction::D) {
      out.push_back({k, s.config.row + 1, s.config.col, s.config.state, s.dir});
    } else if (s.dir == Direction::U) {
      out.push_back({k, s.config.row, s.config.col, s.config.state, s.dir});
    }
  }
  return out;
}

CrossingSearch find_crossing_match(const Automaton& machine, const std::vector<Picture>& words,
                                   long boundary, bool forbid_upward_crossing) {
  CrossingSearch result;
  // (column, state) of the first downward crossing -> first word carrying it
  std::map<std::pair<long, StateId>, std::size_t> seen;
  std::vector<CrossingEvent> first_event(words.size());
  for (std::size_t n = 0; n < words.size(); ++n) {
    const auto trace = accepting_trace(machine, words[n]);
    if (!trace) {
      throw Error(ErrorKind::Argument,
                  "word " + words[n].to_inline() + " is not accepted by '" + machine.name() + "'");
    }
    const auto events = crossing_events(*trace);
    std::optional<CrossingEvent> down;
    bool up = false;
    for (const auto& e : events) {
      if (e.boundary != boundary) continue;
      if (e.dir == Direction::D && !down) down = e;
      if (e.dir == Direction::U) up = true;
    }
    if (!down || (forbid_upward_crossing && up)) {
      result.skipped.push_back(n);
      continue;
    }
    first_event[n] = *down;
    auto [it, fresh] = seen.emplace(std::make_pair(down->col, down->state), n);
    if (fresh) continue;
    // The earlier word may be identical; keep looking for a distinct one.
    if (words[it->second] == words[n]) continue;
    result.match = CrossingMatch{it->second, n, words[it->second], words[n],
                                 first_event[it->second]};
    return result;
  }
  return result;
}

std::string_view to_string(SpliceStatus s) {
  switch (s) {
    case SpliceStatus::Demonstrated: return "demonstrated";
    case SpliceStatus::Survived: return "survived";
    case SpliceStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

SpliceReport splice_counterexample(const Automaton& machine, std::size_t z) {
  SpliceReport report;
  report.z = z;
  report.state_count = machine.state_count();
  std::vector<Picture> words;
  for (std::size_t i = 1; i <= z; ++i) {
    for (std::size_t j = i + 1; j <= z; ++j) words.push_back(make_w(i, j, z));
  }
  report.words_tried = words.size();
  auto search = find_crossing_match(machine, words, 2);
  if (!search.match) return report;
  report.match = search.match;
  const auto spliced = splice_words(search.match->word1, search.match->word2, 2);
  report.word = spliced;
  report.accepted = accepts(machine, spliced);
  report.in_language = in_L(1, spliced);
  report.status = report.accepted && !report.in_language ? SpliceStatus::Demonstrated
                                                         : SpliceStatus::Survived;
  return report;
}

std::string SpliceReport::to_text(const Automaton& machine) const {
  std::ostringstream out;
  out << "machine " << machine.name() << " (" << state_count << " states), z=" << z << ", "
      << words_tried << " words\n";
  if (!match) {
    out << "INCONCLUSIVE: no two words share a downward crossing into row 2\n";
    return out.str();
  }
  out << "match: " << match->word1.to_inline() << " and " << match->word2.to_inline()
      << " cross into row 2 at column " << match->event.col << " in state "
      << machine.state_name(match->event.state) << "\n";
  out << "spliced word:\n" << word->to_text();
  out << (accepted ? "ACCEPTED" : "REJECTED") << ", " << (in_language ? "IN L1" : "NOT IN L1")
      << "\n";
  return out.str();
}

std::string SpliceReport::to_records(const Automaton& machine) const {
  std::ostringstream out;
  out << "record=splice machine=" << machine.name() << " states=" << state_count << " z=" << z
      << " words=" << words_tried << " status=" << to_string(status);
  if (match) {
    out << " word1=" << match->word1.to_inline() << " word2=" << match->word2.to_inline()
        << " col=" << match->event.col << " state=" << machine.state_name(match->event.state)
        << " spliced=" << word->to_inline() << " accepted=" << (accepted ? 1 : 0)
        << " in_language=" << (in_language ? 1 : 0);
  }
  out << "\n";
  return out.str();
}

std::size_t fooling_z(std::size_t m, std::size_t i) {
  if (m < 1) throw Error(ErrorKind::Precondition, "fooling_z needs m >= 1");
  return 2 * m * (i + 1) + 2;
}

// ---------------------------------------------------------------------------

namespace {

HierarchyRow hierarchy_row(std::string family, unsigned level, const BuilderId& id,
                           std::size_t cols_max) {
  const Automaton a = build(id);
  const auto c = contract(id);
  const auto sweep = budget_sweep(a, c.language, c.rows, cols_max, up_budgets(a, {level - 1, level}));
  const auto& starved = sweep.levels[0];
  const auto& full = sweep.levels[1];
  return HierarchyRow{std::move(family),     level,
                      expected_class(id),    classify(a).to_string(),
                      c.language,            c.rows,
                      full.pictures,         full.members,
                      full.accepted_members, starved.accepted_members,
                      sweep.mismatches.size()};
}

}  // namespace

HierarchyReport hierarchy_report(unsigned i_max, std::size_t cols_max) {
  if (i_max < 1) throw Error(ErrorKind::Parameter, "hierarchy needs i_max >= 1");
  if (cols_max < 1) throw Error(ErrorKind::Parameter, "hierarchy needs cols_max >= 1");
  HierarchyReport report;
  report.cols_max = cols_max;
  for (unsigned i = 1; i <= i_max; ++i) {
    report.rows.push_back(hierarchy_row("three-way", i, {BuilderKind::M_Mi, i}, cols_max));
  }
  for (unsigned i = 1; i <= i_max; ++i) {
    report.rows.push_back(hierarchy_row("two-way", i, {BuilderKind::S_rec, i - 1}, cols_max));
  }
  return report;
}

std::string HierarchyReport::to_table() const {
  std::vector<std::vector<std::string>> t{{"family", "i", "class", "witness", "rows", "pictures",
                                           "members", "accepted@i", "accepted@i-1",
                                           "mismatches", "starvation"}};
  for (const auto& r : rows) {
    t.push_back({r.family, std::to_string(r.level), r.classified, r.witness.to_string(),
                 std::to_string(r.rows), std::to_string(r.pictures), std::to_string(r.members),
                 std::to_string(r.accepted_members), std::to_string(r.starved_accepts),
                 std::to_string(r.mismatches),
                 r.starvation_confirmed() ? "confirmed" : "unconfirmed"});
  }
  return "budget hierarchy, cols <= " + std::to_string(cols_max) + "\n" + format_table(t);
}

std::string HierarchyReport::to_records() const {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "record=hierarchy family=" << r.family << " i=" << r.level << " class=" << r.classified
        << " expected_class=" << r.expected_class << " witness=" << r.witness.to_string()
        << " rows=" << r.rows << " cols_max=" << cols_max << " pictures=" << r.pictures
        << " members=" << r.members << " accepted_full=" << r.accepted_members
        << " accepted_starved=" << r.starved_accepts << " mismatches=" << r.mismatches
        << " starvation=" << (r.starvation_confirmed() ? "confirmed" : "unconfirmed") << "\n";
  }
  return out.str();
}

}  // namespace picwalk
