#include "picwalk/grid.hpp"

#include <limits>

#include "picwalk/error.hpp"

namespace picwalk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Format: return "format error";
    case ErrorKind::Alphabet: return "alphabet error";
    case ErrorKind::Degenerate: return "degenerate picture";
    case ErrorKind::OutOfFrame: return "out of frame";
    case ErrorKind::Shape: return "shape error";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Composition: return "composition error";
    case ErrorKind::UnsupportedRotation: return "unsupported rotation";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Mode: return "mode error";
    case ErrorKind::Parameter: return "parameter error";
    case ErrorKind::Argument: return "argument error";
  }
  return "error";
}

namespace {

bool is_symbol_char(char c) {
  return c > ' ' && c < 0x7f && c != kBoundary;
}

}  // namespace

Alphabet::Alphabet(std::string_view symbols) {
  for (char c : symbols) {
    if (!is_symbol_char(c)) {
      throw Error(ErrorKind::Alphabet,
                  std::string("illegal alphabet symbol '") + c + "'");
    }
    if (symbols_.find(c) != std::string::npos) {
      throw Error(ErrorKind::Alphabet,
                  std::string("duplicate alphabet symbol '") + c + "'");
    }
    symbols_.push_back(c);
  }
}

bool Alphabet::contains(char symbol) const {
  return symbols_.find(symbol) != std::string::npos;
}

std::size_t Alphabet::index_of(char symbol) const {
  if (symbol == kBoundary) return symbols_.size();
  auto pos = symbols_.find(symbol);
  if (pos == std::string::npos) {
    throw Error(ErrorKind::Alphabet,
                std::string("symbol '") + symbol + "' not in alphabet");
  }
  return pos;
}

const Alphabet& binary_alphabet() {
  static const Alphabet kBinary("01");
  return kBinary;
}

Picture::Picture(std::size_t rows, std::size_t cols, std::string cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::Degenerate, "pictures need at least one row and one column");
  }
  if (cells_.size() != rows_ * cols_) {
    throw Error(ErrorKind::Shape, "cell count does not match dimensions");
  }
  for (char c : cells_) {
    if (!is_symbol_char(c)) {
      throw Error(ErrorKind::Alphabet,
                  std::string("illegal cell symbol '") + c + "'");
    }
  }
}

Picture Picture::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) {
    throw Error(ErrorKind::Degenerate, "picture has no rows");
  }
  std::string cells;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) {
      throw Error(ErrorKind::Format, "ragged picture rows");
    }
    cells += r;
  }
  return Picture(rows.size(), rows.front().size(), std::move(cells));
}

std::string Picture::row_text(std::size_t row) const {
  return cells_.substr((row - 1) * cols_, cols_);
}

std::string Picture::to_text() const {
  std::string out;
  for (std::size_t r = 1; r <= rows_; ++r) {
    out += row_text(r);
    out += '\n';
  }
  return out;
}

std::string Picture::to_inline() const {
  std::string out;
  for (std::size_t r = 1; r <= rows_; ++r) {
    if (r > 1) out += '/';
    out += row_text(r);
  }
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

Picture picture_from_lines(const std::vector<std::string_view>& lines,
                           const Alphabet& alphabet, std::size_t first_line) {
  if (lines.empty()) {
    throw Error(ErrorKind::Degenerate, "empty picture");
  }
  std::string cells;
  const auto width = lines.front().size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    const auto lineno = std::to_string(first_line + i);
    if (line.empty() || line.size() != width) {
      throw Error(ErrorKind::Format, "line " + lineno + ": ragged picture row");
    }
    for (char c : line) {
      if (c == kBoundary) {
        throw Error(ErrorKind::Alphabet,
                    "line " + lineno + ": reserved boundary symbol '#' in picture");
      }
      if (!alphabet.contains(c)) {
        throw Error(ErrorKind::Alphabet, "line " + lineno + ": symbol '" +
                                             std::string(1, c) +
                                             "' not in alphabet");
      }
    }
    cells.append(line);
  }
  return Picture(lines.size(), width, std::move(cells));
}

}  // namespace

Picture parse_picture(std::string_view text, const Alphabet& alphabet) {
  return picture_from_lines(split_lines(text), alphabet, 1);
}

std::vector<Picture> parse_picture_stream(std::string_view text,
                                          const Alphabet& alphabet) {
  std::vector<Picture> out;
  std::vector<std::string_view> block;
  std::size_t block_start = 1;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i] == "--") {
      out.push_back(picture_from_lines(block, alphabet, block_start));
      block.clear();
      block_start = i + 2;
      continue;
    }
    block.push_back(lines[i]);
  }
  out.push_back(picture_from_lines(block, alphabet, block_start));
  return out;
}

std::string serialize_picture_stream(const std::vector<Picture>& pictures) {
  std::string out;
  for (std::size_t i = 0; i < pictures.size(); ++i) {
    if (i > 0) out += "--\n";
    out += pictures[i].to_text();
  }
  return out;
}

char cell_at(const Picture& p, long row, long col) {
  const long rows = static_cast<long>(p.rows());
  const long cols = static_cast<long>(p.cols());
  if (row < 0 || col < 0 || row > rows + 1 || col > cols + 1) {
    throw Error(ErrorKind::OutOfFrame, "(" + std::to_string(row) + "," +
                                           std::to_string(col) +
                                           ") lies outside the frame");
  }
  if (row == 0 || col == 0 || row == rows + 1 || col == cols + 1) {
    return kBoundary;
  }
  return p.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
}

Picture row_concat(const Picture& top, const Picture& bottom) {
  if (top.cols() != bottom.cols()) {
    throw Error(ErrorKind::Shape, "row_concat needs equal column counts (" +
                                      std::to_string(top.cols()) + " vs " +
                                      std::to_string(bottom.cols()) + ")");
  }
  return Picture(top.rows() + bottom.rows(), top.cols(),
                 top.cells() + bottom.cells());
}

Picture transpose(const Picture& p) {
  std::string cells(p.cells().size(), '0');
  for (std::size_t r = 1; r <= p.cols(); ++r) {
    for (std::size_t c = 1; c <= p.rows(); ++c) {
      cells[(r - 1) * p.rows() + (c - 1)] = p.at(c, r);
    }
  }
  return Picture(p.cols(), p.rows(), std::move(cells));
}

Picture rotate90_cw(const Picture& p) {
  const auto rows = p.cols();
  const auto cols = p.rows();
  std::string cells(p.cells().size(), '0');
  for (std::size_t r = 1; r <= rows; ++r) {
    for (std::size_t c = 1; c <= cols; ++c) {
      cells[(r - 1) * cols + (c - 1)] = p.at(p.rows() + 1 - c, r);
    }
  }
  return Picture(rows, cols, std::move(cells));
}

std::size_t picture_count(const Alphabet& alphabet, std::size_t rows,
                          std::size_t cols) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t count = 1;
  for (std::size_t i = 0; i < rows * cols; ++i) {
    if (alphabet.size() != 0 && count > kMax / alphabet.size()) return kMax;
    count *= alphabet.size();
  }
  return count;
}

void for_each_picture(const Alphabet& alphabet, std::size_t rows,
                      std::size_t cols,
                      const std::function<void(const Picture&)>& visit) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::Degenerate, "enumeration needs rows, cols >= 1");
  }
  if (alphabet.size() == 0) return;
  const auto& symbols = alphabet.symbols();
  const auto n = rows * cols;
  std::vector<std::size_t> digits(n, 0);
  std::string cells(n, symbols.front());
  while (true) {
    visit(Picture(rows, cols, cells));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < symbols.size()) {
        cells[pos] = symbols[digits[pos]];
        break;
      }
      digits[pos] = 0;
      cells[pos] = symbols.front();
      if (pos == 0) return;
    }
  }
}

std::vector<Picture> enumerate_pictures(const Alphabet& alphabet,
                                        std::size_t rows, std::size_t cols) {
  std::vector<Picture> out;
  for_each_picture(alphabet, rows, cols,
                   [&](const Picture& p) { out.push_back(p); });
  return out;
}

}  // namespace picwalk
