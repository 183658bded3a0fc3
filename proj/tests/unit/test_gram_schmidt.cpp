#include <cmath>
#include <cstring>

#include "doctest.h"
#include "oracles.hpp"

#include "gsqr/bounds.hpp"
#include "gsqr/errors.hpp"
#include "gsqr/gram_schmidt.hpp"
#include "gsqr/linalg.hpp"
#include "gsqr/matrix_gen.hpp"

using namespace gsqr;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool traces_equal(const std::vector<StepTrace>& a, const std::vector<StepTrace>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].k != b[i].k || !same_bits(a[i].psi, b[i].psi) || !same_bits(a[i].phi, b[i].phi) ||
        !same_bits(a[i].v_norm, b[i].v_norm) || !same_bits(a[i].r_kk, b[i].r_kk)) {
      return false;
    }
  }
  return true;
}

bool bitwise_equal(const QrFactorization& a, const QrFactorization& b) {
  return oracle::bitwise_equal(a.q, b.q) && oracle::bitwise_equal(a.r, b.r) &&
         traces_equal(a.traces, b.traces) && a.algorithm == b.algorithm;
}

Matrix random_tall(Rng& rng) {
  const std::size_t m = 2 + rng.next_u64() % 30;
  const std::size_t n = 1 + rng.next_u64() % m;
  return gaussian_matrix(rng, m, n);
}

}  // namespace

TEST_CASE("cgs_s examples") {
  auto f = cgs_s(Matrix::identity(3));
  CHECK(f.q == Matrix::identity(3));
  CHECK(f.r == Matrix::identity(3));
  CHECK(f.algorithm == Algorithm::CgsS);

  f = cgs_s(Matrix::from_rows({{1, 1}, {0, 1}}));
  CHECK(f.q == Matrix::identity(2));
  CHECK(f.r == Matrix::from_rows({{1, 1}, {0, 1}}));
}

TEST_CASE("cgs_p examples") {
  auto f = cgs_p(Matrix::identity(3));
  CHECK(f.q == Matrix::identity(3));
  CHECK(f.r == Matrix::identity(3));
  CHECK(f.algorithm == Algorithm::CgsP);

  f = cgs_p(Matrix::from_rows({{1, 1}, {0, 1}}));
  CHECK(f.traces[1].psi == std::sqrt(2.0));
  CHECK(f.traces[1].phi == 1.0);
  // sqrt(sqrt2 - 1) * sqrt(sqrt2 + 1) is 1 in exact arithmetic.
  CHECK(std::abs(f.r(1, 1) - 1.0) <= 0x1p-52);
  CHECK(f.r(0, 0) == 1.0);
  CHECK(f.r(0, 1) == 1.0);
  CHECK(f.r(1, 0) == 0.0);
}

TEST_CASE("cgs_p diagonal uses the frozen evaluation order") {
  Rng rng(21);
  const Matrix a = gaussian_matrix(rng, 9, 5);
  const auto f = cgs_p(a);
  for (std::size_t k = 1; k < 5; ++k) {
    const auto& t = f.traces[k];
    const double expected = std::sqrt(t.psi - t.phi) * std::sqrt(t.psi + t.phi);
    CHECK(same_bits(f.r(k, k), expected));
    CHECK(same_bits(t.r_kk, expected));
    CHECK(t.psi > t.phi);
  }
  CHECK(f.traces[0].phi == 0.0);
  CHECK(f.traces[0].psi == f.r(0, 0));
}

TEST_CASE("traces of cgs_s record psi, phi and v_norm") {
  Rng rng(4);
  const Matrix a = gaussian_matrix(rng, 7, 4);
  const auto f = cgs_s(a);
  REQUIRE(f.traces.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& t = f.traces[k];
    CHECK(t.k == k + 1);
    CHECK(same_bits(t.psi, vec_norm2(a.col(k))));
    CHECK(same_bits(t.v_norm, f.r(k, k)));
    CHECK(same_bits(t.r_kk, f.r(k, k)));
    if (k > 0) CHECK(same_bits(t.phi, vec_norm2(f.r.col(k).first(k))));
  }
}

TEST_CASE("counterexample orders of magnitude") {
  const Matrix a = example1_matrix();
  const double a2 = spectral_norm(a) * spectral_norm(a);

  const auto s = cgs_s(a);
  const double ortho_s = spectral_norm(Matrix::identity(5) - gram(s.q));
  CHECK(ortho_s > 3.9874e-7);
  CHECK(ortho_s < 3.9874e-5);

  const auto p = cgs_p(a);
  const double normal_p = spectral_norm(gram(p.r) - gram(a)) / a2;
  CHECK(normal_p > 3.3760e-18);
  CHECK(normal_p < 3.3760e-16);
}

TEST_CASE("breakdown on a duplicated column") {
  // Entries chosen so q_1 and s_2 are exact: the dependence is exact too.
  const Matrix a = Matrix::from_rows({{1, 1, 0}, {1, 1, 1}, {1, 1, 2}, {1, 1, 3}});

  try {
    cgs_p(a);
    FAIL("expected Breakdown");
  } catch (const Breakdown& e) {
    CHECK(e.column() == 2);
    CHECK(e.psi() <= e.phi());
    CHECK(std::string(e.what()).find("column 2") != std::string::npos);
  }
  try {
    cgs_s(a);
    FAIL("expected Breakdown");
  } catch (const Breakdown& e) {
    CHECK(e.column() == 2);
  }

  CHECK_THROWS_AS(cgs_s(Matrix(3, 2)), Breakdown);
  CHECK_THROWS_AS(cgs_p(Matrix(3, 2)), Breakdown);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(cgs_s(Matrix(2, 3, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(cgs_p(Matrix(2, 3, 1.0)), std::invalid_argument);
}

TEST_CASE("prefix") {
  Rng rng(8);
  const Matrix a = gaussian_matrix(rng, 10, 6);
  const auto f = cgs_p(a);

  CHECK(bitwise_equal(prefix(f, 6), f));

  const auto p1 = prefix(f, 1);
  CHECK(p1.r.rows() == 1);
  CHECK(same_bits(p1.r(0, 0), vec_norm2(a.col(0))));
  for (std::size_t i = 0; i < 10; ++i) CHECK(same_bits(p1.q(i, 0), a(i, 0) / p1.r(0, 0)));

  CHECK(bitwise_equal(prefix(f, 4), cgs_p(a.leading_cols(4))));
  CHECK_THROWS_AS(prefix(f, 0), std::out_of_range);
  CHECK_THROWS_AS(prefix(f, 7), std::out_of_range);
}

TEST_CASE("column-prefix consistency for both variants") {
  Rng rng(2024);
  for (int t = 0; t < 25; ++t) {
    const Matrix a = random_tall(rng);
    const auto s = cgs_s(a);
    const auto p = cgs_p(a);
    for (std::size_t k = 1; k <= a.cols(); ++k) {
      CHECK(bitwise_equal(prefix(s, k), cgs_s(a.leading_cols(k))));
      CHECK(bitwise_equal(prefix(p, k), cgs_p(a.leading_cols(k))));
    }
  }
}

TEST_CASE("R has exact zeros below the diagonal and a positive diagonal") {
  Rng rng(13);
  for (int t = 0; t < 25; ++t) {
    const Matrix a = random_tall(rng);
    for (const auto& f : {cgs_s(a), cgs_p(a)}) {
      for (std::size_t j = 0; j < f.cols(); ++j) {
        CHECK(f.r(j, j) > 0.0);
        for (std::size_t i = j + 1; i < f.cols(); ++i) CHECK(same_bits(f.r(i, j), 0.0));
      }
    }
  }
}

TEST_CASE("variants agree bitwise up to the first differing diagonal") {
  Rng rng(31);
  std::size_t compared = 0;
  for (int t = 0; t < 40; ++t) {
    const Matrix a = random_tall(rng);
    const auto s = cgs_s(a);
    const auto p = cgs_p(a);
    std::size_t first_diff = a.cols();
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!same_bits(s.r(k, k), p.r(k, k))) {
        first_diff = k;
        break;
      }
    }
    for (std::size_t k = 0; k < first_diff; ++k) {
      ++compared;
      for (std::size_t i = 0; i < a.rows(); ++i) CHECK(same_bits(s.q(i, k), p.q(i, k)));
      for (std::size_t i = 0; i <= k; ++i) CHECK(same_bits(s.r(i, k), p.r(i, k)));
    }
    if (first_diff < a.cols()) {
      // s_k and ||v_k|| only depend on the earlier, identical columns.
      for (std::size_t i = 0; i < first_diff; ++i) {
        CHECK(same_bits(s.r(i, first_diff), p.r(i, first_diff)));
      }
      CHECK(same_bits(s.traces[first_diff].v_norm, p.traces[first_diff].v_norm));
    }
  }
  CHECK(compared > 0);
}

TEST_CASE("well-conditioned backward error within ten times c1 ||A|| eps") {
  Rng rng(55);
  for (int t = 0; t < 30; ++t) {
    const std::size_t m = 2 + rng.next_u64() % 99;
    const std::size_t n = 1 + rng.next_u64() % std::min<std::size_t>(m, 40);
    const double kappa = std::pow(10.0, 3.0 * rng.uniform());
    const Matrix a = conditioned_matrix(rng, m, n, kappa);
    const double bound = 10.0 * bound_constants(m, n).c1 * spectral_norm(a) * kMachineEpsilon;
    for (const auto& f : {cgs_s(a), cgs_p(a)}) {
      CHECK(spectral_norm(f.q * f.r - a) <= bound);
    }
  }
}

TEST_CASE("factorize dispatches on the tag") {
  const Matrix a = example1_matrix();
  CHECK(factorize(a, Algorithm::CgsS).algorithm == Algorithm::CgsS);
  CHECK(factorize(a, Algorithm::CgsP).algorithm == Algorithm::CgsP);
  CHECK(factorize(a, Algorithm::Householder).algorithm == Algorithm::Householder);
}
