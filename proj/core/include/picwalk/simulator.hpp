#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picwalk/grid.hpp"
#include "picwalk/machine.hpp"

namespace picwalk {

/// A machine snapshot. Row and column are frame coordinates; the remaining
/// budgets are infinite for directions that are not budgeted.
struct Configuration {
  StateId state = 0;
  long row = 1;
  long col = 1;
  Bound up_left;
  Bound left_left;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

enum class RunOutcome { Accept, RejectHalt, Loop };

std::string_view to_string(RunOutcome o);

struct TraceStep {
  Configuration config;
  Direction dir;  // move taken out of `config`
};

struct Trace {
  std::vector<TraceStep> steps;
  Configuration final;
  RunOutcome outcome = RunOutcome::RejectHalt;

  /// Number of steps moving in `d`.
  std::size_t count(Direction d) const;
};

/// Per-run budget override. Each value must not exceed the machine's
/// declared budget for a budgeted direction; overriding a free direction
/// with a finite value is rejected.
struct RunOptions {
  std::optional<Bound> up;
  std::optional<Bound> left;
};

/// Checks `options` against `a` and returns the effective budgets a run
/// starts with. Throws ErrorKind::Parameter on an upward override.
Budget effective_budget(const Automaton& a, const RunOptions& options = {});

Configuration initial_configuration(const Automaton& a, const Picture& p,
                                    const RunOptions& options = {});

/// Successors in transition declaration order. Moves that would leave the
/// frame, exceed a remaining budget, or use a forbidden direction are
/// dropped; an empty result means this branch halts.
std::vector<Configuration> step(const Automaton& a, const Picture& p,
                                const Configuration& c);

/// Deterministic execution with loop detection over the finite
/// configuration space. Throws ErrorKind::Mode for nondeterministic machines.
Trace run_deterministic(const Automaton& a, const Picture& p,
                        const RunOptions& options = {});

/// Breadth-first reachability of the accepting state.
bool accepts(const Automaton& a, const Picture& p, const RunOptions& options = {});

/// Shortest accepting trace; ties broken by transition declaration order.
std::optional<Trace> accepting_trace(const Automaton& a, const Picture& p,
                                     const RunOptions& options = {});

/// True iff the deterministic run does not accept (halts or loops).
bool decide_complement(const Automaton& a, const Picture& p,
                       const RunOptions& options = {});

/// Every picture up to rows_max x cols_max that `a` accepts, in enumeration
/// order (rows, then cols, then enumerate_pictures order).
std::vector<Picture> language_sample(const Automaton& a, std::size_t rows_max,
                                     std::size_t cols_max,
                                     const RunOptions& options = {});

/// |Q| * (rows+2) * (cols+2) * (up+1) * (left+1), counting an infinite or
/// untracked budget as a single layer.
std::uint64_t configuration_space_size(const Automaton& a, const Picture& p,
                                       const RunOptions& options = {});

/// `<state> (<row>,<col>) up=<n|inf> left=<n|inf> --<D>-->` per step, then
/// the final configuration followed by ACCEPT, REJECT or LOOP.
std::string format_trace(const Automaton& a, const Trace& t);

}  // namespace picwalk
