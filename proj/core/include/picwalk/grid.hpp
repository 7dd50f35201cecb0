#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace picwalk {

/// The reserved boundary symbol framing every picture.
inline constexpr char kBoundary = '#';

/// An ordered set of cell symbols. Declaration order is significant: it fixes
/// the enumeration order of pictures and the column order of dense tables.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view symbols);

  bool contains(char symbol) const;
  /// Position of `symbol` in declaration order, or size() for the boundary.
  std::size_t index_of(char symbol) const;
  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// The binary alphabet {0, 1} every witness language is defined over.
const Alphabet& binary_alphabet();

/// A rectangular two-dimensional word. Interior cells use 1-based
/// coordinates; row 0, row rows()+1, column 0 and column cols()+1 form the
/// boundary frame.
class Picture {
 public:
  /// `cells` is row-major and must hold rows*cols non-boundary symbols.
  Picture(std::size_t rows, std::size_t cols, std::string cells);

  static Picture from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::string& cells() const { return cells_; }

  /// Interior access, 1-based, unchecked.
  char at(std::size_t row, std::size_t col) const {
    return cells_[(row - 1) * cols_ + (col - 1)];
  }

  std::string row_text(std::size_t row) const;

  /// One line per row, newline terminated.
  std::string to_text() const;
  /// Rows joined by '/', for single-line reports.
  std::string to_inline() const;

  friend bool operator==(const Picture&, const Picture&) = default;
  friend auto operator<=>(const Picture&, const Picture&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::string cells_;
};

Picture parse_picture(std::string_view text, const Alphabet& alphabet);

/// Pictures separated by lines containing only "--".
std::vector<Picture> parse_picture_stream(std::string_view text,
                                          const Alphabet& alphabet);

std::string serialize_picture_stream(const std::vector<Picture>& pictures);

/// Frame-aware lookup: returns kBoundary on the frame ring, throws
/// ErrorKind::OutOfFrame beyond it.
char cell_at(const Picture& p, long row, long col);

Picture row_concat(const Picture& top, const Picture& bottom);
Picture transpose(const Picture& p);
Picture rotate90_cw(const Picture& p);

/// Number of pictures enumerate_pictures yields; saturates at SIZE_MAX.
std::size_t picture_count(const Alphabet& alphabet, std::size_t rows,
                          std::size_t cols);

/// Visits every rows x cols picture once. Order is lexicographic over the
/// row-major cell string with symbols ranked by declaration order, so the
/// last cell varies fastest.
void for_each_picture(const Alphabet& alphabet, std::size_t rows,
                      std::size_t cols,
                      const std::function<void(const Picture&)>& visit);

std::vector<Picture> enumerate_pictures(const Alphabet& alphabet,
                                        std::size_t rows, std::size_t cols);

}  // namespace picwalk
