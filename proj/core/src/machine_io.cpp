#include <map>
#include <sstream>
#include <vector>

#include "picwalk/error.hpp"
#include "picwalk/machine.hpp"

namespace picwalk {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + what);
}

DirectionSet parse_dirs(const std::vector<std::string>& tokens, std::size_t lineno) {
  DirectionSet out;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    for (char c : tokens[i]) {
      auto d = direction_from_char(c);
      if (!d) fail(lineno, std::string("unknown direction '") + c + "'");
      out.insert(*d);
    }
  }
  return out;
}

struct PendingTransition {
  std::size_t line;
  Transition t;
};

}  // namespace

Automaton parse_machine(std::string_view text) {
  std::optional<std::string> name;
  std::optional<Alphabet> alphabet;
  std::vector<std::string> states;
  std::map<std::string, StateId, std::less<>> state_ids;
  std::optional<StateId> initial;
  std::optional<StateId> accepting;
  std::optional<Mode> mode;
  std::optional<DirectionSet> free;
  DirectionSet budgeted;
  std::optional<Bound> up;
  std::optional<Bound> left;
  std::vector<PendingTransition> transitions;

  auto lookup = [&](const std::string& s, std::size_t lineno) {
    auto it = state_ids.find(s);
    if (it == state_ids.end()) fail(lineno, "undeclared state '" + s + "'");
    return it->second;
  };
  auto arity = [&](const std::vector<std::string>& tokens, std::size_t n,
                   std::size_t lineno) {
    if (tokens.size() != n + 1) {
      fail(lineno, "'" + tokens[0] + "' expects " + std::to_string(n) + " argument(s)");
    }
  };

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto& key = tokens[0];
    if (key == "machine") {
      arity(tokens, 1, lineno);
      name = tokens[1];
    } else if (key == "alphabet") {
      std::string symbols;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i].size() != 1) fail(lineno, "alphabet symbols are single characters");
        symbols += tokens[i];
      }
      try {
        alphabet = Alphabet(symbols);
      } catch (const Error& e) {
        fail(lineno, e.what());
      }
    } else if (key == "states") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (state_ids.count(tokens[i])) fail(lineno, "state '" + tokens[i] + "' declared twice");
        state_ids.emplace(tokens[i], static_cast<StateId>(states.size()));
        states.push_back(tokens[i]);
      }
    } else if (key == "initial") {
      arity(tokens, 1, lineno);
      initial = lookup(tokens[1], lineno);
    } else if (key == "accept") {
      if (tokens.size() > 2) fail(lineno, "exactly one accepting state is allowed");
      arity(tokens, 1, lineno);
      if (accepting) fail(lineno, "exactly one accepting state is allowed");
      accepting = lookup(tokens[1], lineno);
    } else if (key == "mode") {
      arity(tokens, 1, lineno);
      if (tokens[1] == "det") {
        mode = Mode::Deterministic;
      } else if (tokens[1] == "nondet") {
        mode = Mode::Nondeterministic;
      } else {
        fail(lineno, "mode must be det or nondet");
      }
    } else if (key == "free") {
      free = parse_dirs(tokens, lineno);
    } else if (key == "budgeted") {
      budgeted = parse_dirs(tokens, lineno);
    } else if (key == "budget") {
      arity(tokens, 2, lineno);
      auto value = Bound::parse(tokens[2]);
      if (!value) fail(lineno, "budget must be a count or inf");
      if (tokens[1] == "up") {
        up = value;
      } else if (tokens[1] == "left") {
        left = value;
      } else {
        fail(lineno, "budget applies to up or left");
      }
    } else if (key == "trans") {
      if (tokens.size() != 6 || tokens[3] != "->") {
        fail(lineno, "expected: trans <state> <symbol> -> <state> <U|D|L|R>");
      }
      if (!alphabet) fail(lineno, "trans before alphabet");
      if (tokens[2].size() != 1) fail(lineno, "symbols are single characters");
      const char symbol = tokens[2][0];
      if (symbol != kBoundary && !alphabet->contains(symbol)) {
        fail(lineno, "undeclared symbol '" + tokens[2] + "'");
      }
      auto dir = tokens[5].size() == 1 ? direction_from_char(tokens[5][0]) : std::nullopt;
      if (!dir) fail(lineno, "unknown direction '" + tokens[5] + "'");
      transitions.push_back(
          {lineno, Transition{lookup(tokens[1], lineno), symbol, lookup(tokens[4], lineno), *dir}});
    } else {
      fail(lineno, "unknown directive '" + key + "'");
    }
    if (end == text.size()) break;
  }

  auto missing = [&](const char* what) {
    throw Error(ErrorKind::Parse, std::string("missing '") + what + "' directive");
  };
  if (!name) missing("machine");
  if (!alphabet) missing("alphabet");
  if (states.empty()) missing("states");
  if (!initial) missing("initial");
  if (!accepting) missing("accept");
  if (!mode) missing("mode");
  if (!free) missing("free");

  if (*mode == Mode::Deterministic) {
    std::map<std::pair<StateId, char>, std::size_t> first;
    for (const auto& p : transitions) {
      auto [it, fresh] = first.emplace(std::make_pair(p.t.from, p.t.symbol), p.line);
      if (!fresh) {
        fail(p.line, "duplicate transition on (" + states[p.t.from] + ", " + p.t.symbol +
                         ") in a deterministic machine (first on line " +
                         std::to_string(it->second) + ")");
      }
    }
  }

  AutomatonBuilder b(*name, *alphabet);
  for (const auto& s : states) b.state(s);
  b.initial(*initial).accepting(*accepting).mode(*mode).policy({*free, budgeted});
  auto default_bound = [&](Direction d) {
    return free->contains(d) ? Bound::infinite() : Bound(0);
  };
  b.budget({up.value_or(default_bound(Direction::U)),
            left.value_or(default_bound(Direction::L))});
  for (const auto& p : transitions) b.transition(p.t.from, p.t.symbol, p.t.to, p.t.dir);
  return b.build();
}

std::string serialize_machine(const Automaton& a) {
  std::ostringstream out;
  out << "machine " << a.name() << "\n";
  out << "alphabet";
  for (char c : a.alphabet().symbols()) out << ' ' << c;
  out << "\nstates";
  for (const auto& s : a.states()) out << ' ' << s;
  out << "\ninitial " << a.state_name(a.initial()) << "\n";
  out << "accept " << a.state_name(a.accepting()) << "\n";
  out << "mode " << (a.deterministic() ? "det" : "nondet") << "\n";
  auto dirs = [](DirectionSet s) { return s.empty() ? std::string() : " " + s.to_string(); };
  out << "free" << dirs(a.policy().free) << "\n";
  out << "budgeted" << dirs(a.policy().budgeted) << "\n";
  out << "budget up " << a.budget().up.to_string() << "\n";
  out << "budget left " << a.budget().left.to_string() << "\n";
  for (const auto& t : a.transitions()) {
    out << "trans " << a.state_name(t.from) << ' ' << t.symbol << " -> "
        << a.state_name(t.to) << ' ' << to_char(t.dir) << "\n";
  }
  return out.str();
}

}  // namespace picwalk
