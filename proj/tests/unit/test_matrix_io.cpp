#include <charconv>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "gsqr/errors.hpp"
#include "gsqr/matrix_gen.hpp"
#include "gsqr/matrix_io.hpp"

using namespace gsqr;
namespace fs = std::filesystem;

namespace {

Matrix parse_mm(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_market(in);
}

Matrix parse_csv(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gsqr_io_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(matrix_format_from_string("mm") == MatrixFormat::MatrixMarket);
  CHECK(matrix_format_from_string("mtx") == MatrixFormat::MatrixMarket);
  CHECK(matrix_format_from_string("matrixmarket") == MatrixFormat::MatrixMarket);
  CHECK(matrix_format_from_string("csv") == MatrixFormat::Csv);
  CHECK_THROWS_AS(matrix_format_from_string("xlsx"), std::invalid_argument);
}

TEST_CASE("Matrix Market reading") {
  const Matrix a = parse_mm(
      "%%MatrixMarket matrix array real general\n"
      "% a comment\n"
      "\n"
      "2 3\n1\n2\n3\n4\n5\n6.5e-1\n");
  CHECK(a == Matrix::from_rows({{1, 3, 5}, {2, 4, 0.65}}));

  CHECK_THROWS_AS(parse_mm(""), ParseError);
  CHECK_THROWS_AS(parse_mm("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_mm("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_mm("%%MatrixMarket matrix array real general\n1 1\n1\n2\n"), ParseError);
  CHECK_THROWS_AS(parse_mm("%%MatrixMarket matrix array real general\n1 1\nabc\n"), ParseError);
  CHECK_THROWS_AS(parse_mm("%%MatrixMarket matrix array real general\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_mm("%%MatrixMarket matrix array real general\n1 1 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_mm("%%MatrixMarket matrix array real general\n"), ParseError);
}

TEST_CASE("CSV reading") {
  CHECK(parse_csv("1,2\n3, 4\n\n5 ,6e0\n") == Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}}));
  CHECK_THROWS_AS(parse_csv(""), ParseError);
  CHECK_THROWS_AS(parse_csv("1,2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("1,x\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("1,,2\n"), ParseError);
  try {
    parse_csv("1,2\n3,4\n5\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("writers round-trip bit for bit") {
  Rng rng(8);
  Matrix a = gaussian_matrix(rng, 7, 4);
  a(0, 0) = 1e-300;
  a(1, 0) = -0.0;
  a(2, 0) = 1.0 / 3.0;
  a(3, 0) = 6.02214076e23;
  for (auto fmt : {MatrixFormat::MatrixMarket, MatrixFormat::Csv}) {
    std::ostringstream out;
    if (fmt == MatrixFormat::Csv) {
      write_csv(out, a);
      CHECK(oracle::bitwise_equal(parse_csv(out.str()), a));
    } else {
      write_matrix_market(out, a);
      CHECK(out.str().rfind("%%MatrixMarket matrix array real general\n7 4\n", 0) == 0);
      CHECK(oracle::bitwise_equal(parse_mm(out.str()), a));
    }
    const fs::path p = scratch(fmt == MatrixFormat::Csv ? "a.csv" : "a.mtx");
    write_matrix(p, a, fmt);
    CHECK(oracle::bitwise_equal(read_matrix(p, fmt), a));
  }
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(read_matrix(scratch("does_not_exist.mtx"), MatrixFormat::MatrixMarket), IoError);
  CHECK_THROWS_AS(write_matrix(scratch("no_dir") / "x" / "y.csv", Matrix(1, 1), MatrixFormat::Csv),
                  IoError);
  const fs::path bad = scratch("bad.csv");
  std::ofstream(bad) << "1,2\nfoo,3\n";
  try {
    read_matrix(bad, MatrixFormat::Csv);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
}

TEST_CASE("format_real is shortest round-trip") {
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(-2.5) == "-2.5");
  CHECK(format_real(1e-300) == "1e-300");

  std::mt19937_64 gen(99);
  for (int i = 0; i < 20000; ++i) {
    std::uint64_t bits = gen();
    double x;
    std::memcpy(&x, &bits, sizeof x);
    if (!std::isfinite(x)) continue;
    const std::string s = format_real(x);
    double y = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), y);
    REQUIRE(std::memcmp(&x, &y, sizeof x) == 0);
    REQUIRE(s.size() <= 24);
  }
}
