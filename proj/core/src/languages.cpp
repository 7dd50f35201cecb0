#include "picwalk/languages.hpp"

#include <algorithm>

#include "picwalk/error.hpp"

namespace picwalk {

std::optional<LanguageId> LanguageId::parse(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  Kind kind;
  switch (text.front()) {
    case 'L': kind = Kind::L; break;
    case 'M': kind = Kind::M; break;
    case 'N': kind = Kind::N; break;
    case 'K': kind = Kind::K; break;
    case 'S': kind = Kind::S; break;
    default: return std::nullopt;
  }
  unsigned index = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9' || index > 100000) return std::nullopt;
    index = index * 10 + static_cast<unsigned>(c - '0');
  }
  if (index == 0 || text[1] == '0') return std::nullopt;
  if (kind == Kind::N && index > 2) return std::nullopt;
  return LanguageId{kind, index};
}

std::string LanguageId::to_string() const {
  static constexpr char kLetters[] = {'L', 'M', 'N', 'K', 'S'};
  return kLetters[static_cast<int>(kind)] + std::to_string(index);
}

std::size_t stacked_count(const Picture& p, std::size_t top_row) {
  if (top_row < 1 || top_row + 1 > p.rows()) {
    throw Error(ErrorKind::Precondition,
                "stacked_count needs rows " + std::to_string(top_row) + " and " +
                    std::to_string(top_row + 1) + " in a picture with " +
                    std::to_string(p.rows()) + " rows");
  }
  std::size_t n = 0;
  for (std::size_t j = 1; j <= p.cols(); ++j) {
    if (p.at(top_row, j) == '1' && p.at(top_row + 1, j) == '1') ++n;
  }
  return n;
}

namespace {

std::size_t ones_in_row(const Picture& p, std::size_t row) {
  std::size_t n = 0;
  for (std::size_t j = 1; j <= p.cols(); ++j) n += p.at(row, j) == '1' ? 1 : 0;
  return n;
}

}  // namespace

bool in_L(unsigned i, const Picture& p) {
  if (i == 0 || p.rows() != 2 * static_cast<std::size_t>(i)) return false;
  for (std::size_t r = 1; r < p.rows(); r += 2) {
    if (stacked_count(p, r) < 2) return false;
  }
  return true;
}

bool in_M(unsigned i, const Picture& p) {
  if (i == 0 || p.rows() != 2 * static_cast<std::size_t>(i)) return false;
  for (std::size_t r = 1; r < p.rows(); r += 2) {
    if (stacked_count(p, r) != 2 || ones_in_row(p, r) != 2 || ones_in_row(p, r + 1) != 2) {
      return false;
    }
  }
  return true;
}

bool in_N1(const Picture& p) { return p.rows() == 2 && stacked_count(p, 1) >= 1; }

bool in_N2(const Picture& p) {
  return p.rows() == 4 && stacked_count(p, 1) >= 1 && stacked_count(p, 3) >= 1;
}

bool in_K(unsigned i, const Picture& p) {
  return i >= 1 && p.rows() == 2 && stacked_count(p, 1) >= 2 * static_cast<std::size_t>(i);
}

bool in_S(unsigned i, const Picture& p) {
  return i >= 1 && p.rows() == 2 && p.cols() == i &&
         std::all_of(p.cells().begin(), p.cells().end(), [](char c) { return c == '1'; });
}

bool in_language(const LanguageId& id, const Picture& p) {
  switch (id.kind) {
    case LanguageId::Kind::L: return in_L(id.index, p);
    case LanguageId::Kind::M: return in_M(id.index, p);
    case LanguageId::Kind::N: return id.index == 1 ? in_N1(p) : in_N2(p);
    case LanguageId::Kind::K: return in_K(id.index, p);
    case LanguageId::Kind::S: return in_S(id.index, p);
  }
  return false;
}

namespace {

void require_pair(std::size_t i, std::size_t j, std::size_t z) {
  if (!(1 <= i && i < j && j <= z)) {
    throw Error(ErrorKind::Precondition, "positions need 1 <= i < j <= z, got i=" +
                                             std::to_string(i) + " j=" + std::to_string(j) +
                                             " z=" + std::to_string(z));
  }
}

}  // namespace

Picture make_u(std::size_t i, std::size_t j, std::size_t z) {
  require_pair(i, j, z);
  std::string row(z, '0');
  row[i - 1] = '1';
  row[j - 1] = '1';
  return Picture(1, z, std::move(row));
}

Picture make_x(std::size_t i, std::size_t j, std::size_t z) { return make_u(i, j, z); }

Picture make_w(std::size_t i, std::size_t j, std::size_t z) {
  const auto row = make_u(i, j, z);
  return row_concat(row, row);
}

Picture make_v(std::size_t j, std::size_t k, std::size_t z, std::size_t i) {
  const auto row = make_u(j, k, z);
  std::string cells;
  for (std::size_t r = 0; r < 2 * i + 2; ++r) cells += row.cells();
  return Picture(2 * i + 2, z, std::move(cells));
}

Picture splice_words(const Picture& top_source, const Picture& bottom_source,
                     std::size_t boundary_row) {
  if (top_source.rows() != bottom_source.rows() || top_source.cols() != bottom_source.cols()) {
    throw Error(ErrorKind::Shape, "splice needs pictures of identical shape");
  }
  if (boundary_row < 1 || boundary_row > top_source.rows() + 1) {
    throw Error(ErrorKind::Precondition,
                "splice boundary row must lie in 1.." + std::to_string(top_source.rows() + 1));
  }
  const auto cut = (boundary_row - 1) * top_source.cols();
  return Picture(top_source.rows(), top_source.cols(),
                 top_source.cells().substr(0, cut) + bottom_source.cells().substr(cut));
}

}  // namespace picwalk
