#include "pcm/matrix_file.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "pcm/error.hpp"

namespace pcm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_decimal(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string where(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

bool is_fraction_text(const std::string& s) { return s.find('/') != std::string::npos; }

}  // namespace

double parse_number(std::string_view cell) {
  cell = trim(cell);
  const auto slash = cell.find('/');
  double value = 0.0;
  if (slash == std::string_view::npos) {
    if (!parse_decimal(cell, value)) {
      throw Error(ErrorCode::Parse, "'" + std::string(cell) + "' is not a number");
    }
  } else {
    double p = 0.0;
    double q = 0.0;
    if (!parse_decimal(trim(cell.substr(0, slash)), p) || !parse_decimal(trim(cell.substr(slash + 1)), q)) {
      throw Error(ErrorCode::Parse, "'" + std::string(cell) + "' is not a fraction p/q");
    }
    if (q == 0.0) throw Error(ErrorCode::Parse, "'" + std::string(cell) + "' has a zero denominator");
    value = p / q;
  }
  if (!(std::isfinite(value) && value > 0.0)) {
    throw Error(ErrorCode::Parse, "'" + std::string(cell) + "' is not a positive finite number");
  }
  return value;
}

MatrixFile parse_matrix_text(std::string_view text) {
  MatrixFile file;
  std::vector<std::size_t> line_of_row;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::optional<double>> row;
    std::vector<std::string> row_text;
    std::string_view rest = line;
    std::size_t column = 0;
    while (true) {
      ++column;
      const auto comma = rest.find(',');
      const std::string_view cell = trim(rest.substr(0, comma));
      if (cell.empty()) throw Error(ErrorCode::Parse, where(line_no, column) + ": empty cell");
      if (cell == "?") {
        row.emplace_back(std::nullopt);
      } else {
        try {
          row.emplace_back(parse_number(cell));
        } catch (const Error& e) {
          throw Error(ErrorCode::Parse, where(line_no, column) + ": " + e.what());
        }
      }
      row_text.emplace_back(cell);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    file.cells.push_back(std::move(row));
    file.text.push_back(std::move(row_text));
    line_of_row.push_back(line_no);
  }

  const std::size_t n = file.cells.size();
  if (n == 0) throw Error(ErrorCode::Parse, "no matrix rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (file.cells[i].size() != n) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_of_row[i]) + ": expected " + std::to_string(n) +
                                        " cells, found " + std::to_string(file.cells[i].size()));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!file.cells[i][j].has_value() && file.cells[j][i].has_value()) {
        throw Error(ErrorCode::Parse, where(line_of_row[i], j + 1) + ": '?' without a matching '?' at row " +
                                          std::to_string(j + 1) + ", column " + std::to_string(i + 1));
      }
    }
  }
  return file;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_text(buffer.str());
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", value);
  return buf.data();
}

std::string format_exact(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string write_matrix_text(const PartialMatrix& m, const MatrixFile* source) {
  const std::size_t n = m.size();
  const bool hints = source != nullptr && source->text.size() == n;
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out += ", ";
      const auto value = m.get(i, j);
      if (!value) {
        out += "?";
        continue;
      }
      if (i == j) {
        out += "1";
        continue;
      }
      if (hints && source->text[i].size() == n && is_fraction_text(source->text[i][j])) {
        const std::string& hint = source->text[i][j];
        const double parsed = parse_number(hint);
        // Upper cells carry the stored value; lower cells are recomputed as
        // reciprocals on validation, so a near-equal fraction is enough there.
        const bool keep = i < j ? parsed == *value
                                : std::abs(parsed - *value) <= 4 * std::numeric_limits<double>::epsilon() * *value;
        if (keep) {
          out += hint;
          continue;
        }
      }
      out += format_exact(*value);
    }
    out += '\n';
  }
  return out;
}

}  // namespace pcm
