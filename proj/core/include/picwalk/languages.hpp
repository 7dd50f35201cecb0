#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "picwalk/grid.hpp"

namespace picwalk {

/// Witness languages over {0, 1}. A "stacked 1" is a column whose cells in
/// a designated row pair are both 1.
struct LanguageId {
  enum class Kind { L, M, N, K, S };

  Kind kind;
  unsigned index;  // >= 1; N only takes 1 or 2

  /// Accepts "L1", "M2", "N1", "N2", "K2", "S4", ...
  static std::optional<LanguageId> parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const LanguageId&, const LanguageId&) = default;
};

/// Columns j with p[top_row, j] = p[top_row + 1, j] = 1.
std::size_t stacked_count(const Picture& p, std::size_t top_row);

/// Exactly 2i rows; every disjoint row pair has at least two stacked 1s.
bool in_L(unsigned i, const Picture& p);
/// Exactly 2i rows; in every disjoint row pair both rows hold exactly two 1s
/// and those 1s are stacked.
bool in_M(unsigned i, const Picture& p);
/// Two rows with at least one stacked 1.
bool in_N1(const Picture& p);
/// Four rows; both row pairs have at least one stacked 1.
bool in_N2(const Picture& p);
/// Two rows with at least 2i stacked 1s. K_1 = L_1.
bool in_K(unsigned i, const Picture& p);
/// Exactly the 2 x i all-ones picture.
bool in_S(unsigned i, const Picture& p);

bool in_language(const LanguageId& id, const Picture& p);

/// Single-row word of length z with 1s exactly at columns i and j.
Picture make_u(std::size_t i, std::size_t j, std::size_t z);
/// Alias of make_u.
Picture make_x(std::size_t i, std::size_t j, std::size_t z);
/// Both rows are make_u(i, j, z).
Picture make_w(std::size_t i, std::size_t j, std::size_t z);
/// (2i + 2) x z picture whose columns j and k are all 1s, zeros elsewhere.
Picture make_v(std::size_t j, std::size_t k, std::size_t z, std::size_t i);

/// Rows 1..boundary_row-1 of `top_source` over rows boundary_row.. of
/// `bottom_source`.
Picture splice_words(const Picture& top_source, const Picture& bottom_source,
                     std::size_t boundary_row);

}  // namespace picwalk
