#include "picwalk/simulator.hpp"

#include <algorithm>
#include <sstream>

#include "picwalk/error.hpp"

namespace picwalk {

std::string_view to_string(RunOutcome o) {
  switch (o) {
    case RunOutcome::Accept: return "ACCEPT";
    case RunOutcome::RejectHalt: return "REJECT";
    case RunOutcome::Loop: return "LOOP";
  }
  return "?";
}

std::size_t Trace::count(Direction d) const {
  std::size_t n = 0;
  for (const auto& s : steps) n += s.dir == d ? 1 : 0;
  return n;
}

Budget effective_budget(const Automaton& a, const RunOptions& options) {
  auto resolve = [&](Direction d, const std::optional<Bound>& override_value) {
    const Bound declared = allowance(a, d);
    if (!override_value) return declared;
    if (*override_value > declared) {
      throw Error(ErrorKind::Parameter,
                  std::string("budget override ") + to_char(d) + "=" +
                      override_value->to_string() + " exceeds the declared " +
                      declared.to_string());
    }
    if (a.policy().free.contains(d) && !override_value->is_infinite()) {
      throw Error(ErrorKind::Parameter, std::string("direction ") + to_char(d) +
                                            " is free and cannot be overridden");
    }
    return *override_value;
  };
  return {resolve(Direction::U, options.up), resolve(Direction::L, options.left)};
}

namespace {

void check_alphabet(const Automaton& a, const Picture& p) {
  for (char c : p.cells()) {
    if (!a.alphabet().contains(c)) {
      throw Error(ErrorKind::Alphabet, std::string("picture symbol '") + c +
                                           "' is outside the alphabet of '" +
                                           a.name() + "'");
    }
  }
}

/// Dense numbering of the configuration space for one (machine, picture,
/// budget) triple.
class ConfigSpace {
 public:
  ConfigSpace(const Automaton& a, const Picture& p, const Budget& start)
      : height_(p.rows() + 2),
        width_(p.cols() + 2),
        track_up_(a.policy().budgeted.contains(Direction::U) && !start.up.is_infinite()),
        track_left_(a.policy().budgeted.contains(Direction::L) && !start.left.is_infinite()),
        up_layers_(track_up_ ? start.up.count() + 1ull : 1ull),
        left_layers_(track_left_ ? start.left.count() + 1ull : 1ull),
        states_(a.state_count()) {}

  std::uint64_t size() const {
    return states_ * height_ * width_ * up_layers_ * left_layers_;
  }

  std::uint64_t encode(const Configuration& c) const {
    const std::uint64_t up = track_up_ ? c.up_left.count() : 0;
    const std::uint64_t left = track_left_ ? c.left_left.count() : 0;
    return (((c.state * height_ + static_cast<std::uint64_t>(c.row)) * width_ +
             static_cast<std::uint64_t>(c.col)) *
                up_layers_ +
            up) *
               left_layers_ +
           left;
  }

 private:
  std::uint64_t height_;
  std::uint64_t width_;
  bool track_up_;
  bool track_left_;
  std::uint64_t up_layers_;
  std::uint64_t left_layers_;
  std::uint64_t states_;
};

std::optional<Configuration> apply(const Automaton& a, const Picture& p,
                                   const Configuration& c, const Edge& e) {
  if (a.policy().forbids(e.dir)) return std::nullopt;
  Configuration next = c;
  next.state = e.to;
  const bool budgeted = a.policy().budgeted.contains(e.dir);
  switch (e.dir) {
    case Direction::U:
      if (c.row == 0) return std::nullopt;
      if (budgeted && !c.up_left.is_infinite()) {
        if (c.up_left.count() == 0) return std::nullopt;
        next.up_left = Bound(c.up_left.count() - 1);
      }
      --next.row;
      break;
    case Direction::L:
      if (c.col == 0) return std::nullopt;
      if (budgeted && !c.left_left.is_infinite()) {
        if (c.left_left.count() == 0) return std::nullopt;
        next.left_left = Bound(c.left_left.count() - 1);
      }
      --next.col;
      break;
    case Direction::D:
      if (c.row == static_cast<long>(p.rows()) + 1) return std::nullopt;
      ++next.row;
      break;
    case Direction::R:
      if (c.col == static_cast<long>(p.cols()) + 1) return std::nullopt;
      ++next.col;
      break;
  }
  return next;
}

Configuration start_configuration(const Automaton& a, const Picture& p,
                                  const RunOptions& options) {
  check_alphabet(a, p);
  const auto budget = effective_budget(a, options);
  return Configuration{a.initial(), 1, 1, budget.up, budget.left};
}

}  // namespace

Configuration initial_configuration(const Automaton& a, const Picture& p,
                                    const RunOptions& options) {
  return start_configuration(a, p, options);
}

std::vector<Configuration> step(const Automaton& a, const Picture& p,
                                const Configuration& c) {
  std::vector<Configuration> out;
  if (c.state == a.accepting()) return out;
  const char symbol = cell_at(p, c.row, c.col);
  for (const auto& e : a.edges(c.state, symbol)) {
    if (auto next = apply(a, p, c, e)) out.push_back(*next);
  }
  return out;
}

std::uint64_t configuration_space_size(const Automaton& a, const Picture& p,
                                       const RunOptions& options) {
  return ConfigSpace(a, p, effective_budget(a, options)).size();
}

Trace run_deterministic(const Automaton& a, const Picture& p, const RunOptions& options) {
  if (!a.deterministic()) {
    throw Error(ErrorKind::Mode, "run_deterministic needs a deterministic machine; '" +
                                     a.name() + "' is nondeterministic");
  }
  Trace trace;
  Configuration c = start_configuration(a, p, options);
  const ConfigSpace space(a, p, {c.up_left, c.left_left});
  std::vector<bool> visited(space.size(), false);
  while (true) {
    if (c.state == a.accepting()) {
      trace.outcome = RunOutcome::Accept;
      break;
    }
    const auto key = space.encode(c);
    if (visited[key]) {
      trace.outcome = RunOutcome::Loop;
      break;
    }
    visited[key] = true;
    const auto edges = a.edges(c.state, cell_at(p, c.row, c.col));
    std::optional<Configuration> next;
    Direction dir = Direction::U;
    for (const auto& e : edges) {
      auto candidate = apply(a, p, c, e);
      if (!candidate) continue;
      if (next) {
        throw Error(ErrorKind::Mode, "deterministic machine '" + a.name() +
                                         "' has more than one enabled move");
      }
      next = candidate;
      dir = e.dir;
    }
    if (!next) {
      trace.outcome = RunOutcome::RejectHalt;
      break;
    }
    trace.steps.push_back({c, dir});
    c = *next;
  }
  trace.final = c;
  return trace;
}

namespace {

struct SearchResult {
  bool accepted = false;
  std::optional<Trace> trace;
};

SearchResult search(const Automaton& a, const Picture& p, const RunOptions& options,
                    bool want_trace) {
  SearchResult result;
  const Configuration start = start_configuration(a, p, options);
  if (start.state == a.accepting()) {
    result.accepted = true;
    if (want_trace) result.trace = Trace{{}, start, RunOutcome::Accept};
    return result;
  }
  const ConfigSpace space(a, p, {start.up_left, start.left_left});
  std::vector<bool> seen(space.size(), false);

  // Discovered nodes in BFS order; parent and move are kept only for traces.
  struct Node {
    Configuration config;
    std::size_t parent;
    Direction via;
  };
  std::vector<Node> nodes{{start, 0, Direction::U}};
  seen[space.encode(start)] = true;

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Configuration c = nodes[head].config;
    const char symbol = cell_at(p, c.row, c.col);
    for (const auto& e : a.edges(c.state, symbol)) {
      auto next = apply(a, p, c, e);
      if (!next) continue;
      const auto key = space.encode(*next);
      if (seen[key]) continue;
      seen[key] = true;
      if (next->state == a.accepting()) {
        result.accepted = true;
        if (want_trace) {
          Trace t;
          t.final = *next;
          t.outcome = RunOutcome::Accept;
          t.steps.push_back({c, e.dir});
          for (std::size_t cur = head; cur != 0; cur = nodes[cur].parent) {
            t.steps.push_back({nodes[nodes[cur].parent].config, nodes[cur].via});
          }
          std::reverse(t.steps.begin(), t.steps.end());
          result.trace = std::move(t);
        }
        return result;
      }
      nodes.push_back({*next, head, e.dir});
    }
  }
  return result;
}

}  // namespace

bool accepts(const Automaton& a, const Picture& p, const RunOptions& options) {
  return search(a, p, options, false).accepted;
}

std::optional<Trace> accepting_trace(const Automaton& a, const Picture& p,
                                     const RunOptions& options) {
  return search(a, p, options, true).trace;
}

bool decide_complement(const Automaton& a, const Picture& p, const RunOptions& options) {
  return run_deterministic(a, p, options).outcome != RunOutcome::Accept;
}

std::vector<Picture> language_sample(const Automaton& a, std::size_t rows_max,
                                     std::size_t cols_max, const RunOptions& options) {
  std::vector<Picture> out;
  for (std::size_t r = 1; r <= rows_max; ++r) {
    for (std::size_t c = 1; c <= cols_max; ++c) {
      for_each_picture(a.alphabet(), r, c, [&](const Picture& p) {
        if (accepts(a, p, options)) out.push_back(p);
      });
    }
  }
  return out;
}

std::string format_trace(const Automaton& a, const Trace& t) {
  std::ostringstream out;
  auto config = [&](const Configuration& c) {
    out << a.state_name(c.state) << " (" << c.row << "," << c.col
        << ") up=" << c.up_left.to_string() << " left=" << c.left_left.to_string();
  };
  for (const auto& s : t.steps) {
    config(s.config);
    out << " --" << to_char(s.dir) << "-->\n";
  }
  config(t.final);
  out << ' ' << to_string(t.outcome) << "\n";
  return out.str();
}

}  // namespace picwalk
