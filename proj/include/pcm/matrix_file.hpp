#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/matrix.hpp"

namespace pcm {

/// Text table of comparisons: one row per line, comma-separated cells. A cell
/// is a positive decimal, a fraction "p/q", or "?" for an unspecified entry.
/// Lines starting with '#' and blank lines are skipped.
struct MatrixFile {
  RawMatrix cells;
  /// Cell text as written, trimmed; used to echo fractions back on output.
  std::vector<std::vector<std::string>> text;
};

/// Throws Error(Parse) with line and column context. "?" must appear in
/// symmetric pairs.
MatrixFile parse_matrix_text(std::string_view text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

/// Parses one cell: decimal or "p/q".
double parse_number(std::string_view cell);

/// 12 significant digits, for report values.
std::string format_number(double value);

/// Shortest decimal that parses back to exactly `value`.
std::string format_exact(double value);

/// Renders a matrix in the file format. Where `source` held a fraction for a
/// cell and it still denotes the stored value, the fraction is kept;
/// otherwise values are written exactly, so parsing the output and
/// validating reproduces `m` bit for bit.
std::string write_matrix_text(const PartialMatrix& m, const MatrixFile* source = nullptr);

}  // namespace pcm
