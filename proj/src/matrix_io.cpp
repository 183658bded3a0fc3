#include "gsqr/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gsqr/errors.hpp"

namespace gsqr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view token, std::size_t line) {
  token = trim(token);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line) + ": not a real number: '" +
                     std::string(token) + "'");
  }
  return x;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || v == 0) {
    throw ParseError("line " + std::to_string(line) + ": bad dimension '" +
                     std::string(token) + "'");
  }
  return v;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

MatrixFormat matrix_format_from_string(std::string_view name) {
  const auto n = lower(name);
  if (n == "matrixmarket" || n == "mm" || n == "mtx") return MatrixFormat::MatrixMarket;
  if (n == "csv") return MatrixFormat::Csv;
  throw std::invalid_argument("unknown matrix format: " + std::string(name));
}

std::string format_real(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

Matrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market input");
  {
    std::istringstream hs(line);
    std::string banner, object, fmt, field, symmetry;
    hs >> banner >> object >> fmt >> field >> symmetry;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix" || lower(fmt) != "array" ||
        lower(field) != "real" || lower(symmetry) != "general") {
      throw ParseError("line 1: expected '%%MatrixMarket matrix array real general'");
    }
  }

  std::size_t rows = 0;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '%') continue;
    std::istringstream ds{std::string(t)};
    std::string r, c, extra;
    ds >> r >> c;
    if (ds >> extra) throw ParseError("line " + std::to_string(lineno) + ": size line must be 'm n'");
    rows = parse_count(r, lineno);
    cols = parse_count(c, lineno);
    break;
  }
  if (rows == 0) throw ParseError("missing size line");

  Matrix a(rows, cols);
  std::size_t idx = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '%') continue;
    if (idx == rows * cols) throw ParseError("line " + std::to_string(lineno) + ": too many entries");
    a(idx % rows, idx / rows) = parse_real(t, lineno);
    ++idx;
  }
  if (idx != rows * cols) {
    throw ParseError("expected " + std::to_string(rows * cols) + " entries, found " +
                     std::to_string(idx));
  }
  return a;
}

void write_matrix_market(std::ostream& out, const Matrix& a) {
  out << "%%MatrixMarket matrix array real general\n" << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (double x : a.col(j)) out << format_real(x) << '\n';
}

Matrix read_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(parse_real(rest.substr(0, comma), lineno));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(rows.front().size()) + " fields, found " +
                       std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty CSV input");
  return Matrix::from_rows(rows);
}

void write_csv(std::ostream& out, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ',';
      out << format_real(a(i, j));
    }
    out << '\n';
  }
}

Matrix read_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return format == MatrixFormat::Csv ? read_csv(in) : read_matrix_market(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_matrix(const std::filesystem::path& path, const Matrix& a, MatrixFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  if (format == MatrixFormat::Csv) {
    write_csv(out, a);
  } else {
    write_matrix_market(out, a);
  }
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace gsqr
