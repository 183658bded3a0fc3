#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "gsqr/matrix.hpp"

namespace gsqr {

enum class MatrixFormat { MatrixMarket, Csv };

MatrixFormat matrix_format_from_string(std::string_view name);

/// Matrix Market array format:
///   %%MatrixMarket matrix array real general
///   % optional comment lines
///   m n
///   one entry per line, column-major
Matrix read_matrix_market(std::istream& in);
void write_matrix_market(std::ostream& out, const Matrix& a);

/// Headerless CSV, one matrix row per line.
Matrix read_csv(std::istream& in);
void write_csv(std::ostream& out, const Matrix& a);

/// Throws IoError if the file cannot be opened and ParseError on bad content.
Matrix read_matrix(const std::filesystem::path& path, MatrixFormat format);
void write_matrix(const std::filesystem::path& path, const Matrix& a, MatrixFormat format);

/// Shortest text that parses back to exactly x (17 significant digits max).
std::string format_real(double x);

}  // namespace gsqr
