#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "picwalk/picwalk.hpp"

namespace picwalk {

inline void PrintTo(const Automaton& a, std::ostream* os) { *os << "\n" << serialize_machine(a); }
inline void PrintTo(const Picture& p, std::ostream* os) { *os << p.to_inline(); }
inline void PrintTo(RunOutcome o, std::ostream* os) { *os << to_string(o); }
inline void PrintTo(const Bound& b, std::ostream* os) { *os << b.to_string(); }

}  // namespace picwalk

namespace picwalk::testing {

inline Picture pic(std::initializer_list<std::string> rows) {
  return Picture::from_rows(std::vector<std::string>(rows));
}

/// Kind of the picwalk::Error thrown by `fn`; fails the test when nothing
/// or something else is thrown.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  } catch (const std::exception& e) {
    ADD_FAILURE() << "unexpected exception: " << e.what();
    return std::nullopt;
  }
  ADD_FAILURE() << "no exception thrown";
  return std::nullopt;
}

inline Picture random_picture(std::mt19937& rng, const Alphabet& alphabet, std::size_t rows,
                              std::size_t cols) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string cells;
  for (std::size_t n = 0; n < rows * cols; ++n) cells += alphabet.symbols()[pick(rng)];
  return Picture(rows, cols, std::move(cells));
}

/// A random valid machine over {0,1} obeying `policy`. Transitions out of
/// every non-accepting state on every symbol and the boundary are drawn
/// with probability `density`; in deterministic mode at most one per key.
inline Automaton random_machine(std::mt19937& rng, DirectionPolicy policy, Budget budget,
                                Mode mode, std::size_t states, double density = 0.6) {
  AutomatonBuilder b("random", binary_alphabet());
  b.mode(mode).policy(policy).budget(budget);
  std::vector<StateId> ids;
  for (std::size_t s = 0; s < states; ++s) ids.push_back(b.state("s" + std::to_string(s)));
  const StateId accept = b.state("acc");
  b.initial(ids[0]).accepting(accept);

  std::vector<Direction> dirs;
  for (auto d : kAllDirections) {
    if (policy.allows(d)) dirs.push_back(d);
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> target(0, states);  // states == accept
  std::uniform_int_distribution<std::size_t> dir(0, dirs.size() - 1);
  const std::string symbols = "01#";
  for (auto from : ids) {
    for (char sym : symbols) {
      const int fan = mode == Mode::Deterministic ? 1 : 2;
      for (int k = 0; k < fan; ++k) {
        if (coin(rng) > density) continue;
        const std::size_t t = target(rng);
        b.transition(from, sym, t == states ? accept : ids[t], dirs[dir(rng)]);
      }
    }
  }
  return b.build();
}

}  // namespace picwalk::testing
