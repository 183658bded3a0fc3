#include <cmath>
#include <numbers>

#include "doctest.h"

#include "gsqr/bounds.hpp"
#include "gsqr/errors.hpp"

using namespace gsqr;

TEST_CASE("bound_constants at k = 1 follow the separate branch") {
  const auto b = bound_constants(6, 1);
  CHECK(b.c1 == 1.0);
  CHECK(b.c2 == 8.0);
  CHECK(b.c3 == 4.0);
  CHECK(b.c4 == 10.0);
  for (std::size_t m : {1u, 7u, 200u, 500u}) {
    CHECK(bound_constants(m, 1).c2 == static_cast<double>(m) + 2.0);
    // Not the k >= 2 polynomial evaluated at k = 1 (which gives 2m + 16).
    CHECK(bound_constants(m, 1).c2 != 3.5 * m - 1.5 * m + 16.0);
  }
}

TEST_CASE("bound_constants direct evaluation") {
  auto b = bound_constants(6, 5);
  CHECK(b.c2 == 560.0);
  CHECK(b.c3 == 280.0);
  // 2*sqrt(2)*30 + 2*sqrt(5)
  CHECK(b.c1 == doctest::Approx(60.0 * std::numbers::sqrt2 + 2.0 * std::sqrt(5.0)).epsilon(1e-15));
  CHECK(b.c1 == doctest::Approx(89.3250).epsilon(1e-5));
  CHECK(b.c4 == doctest::Approx(738.65).epsilon(1e-5));

  b = bound_constants(200, 200);
  CHECK(b.c2 == 27943200.0);
  CHECK(b.c4 == doctest::Approx(2.8169e7).epsilon(1e-4));
  CHECK(b.m == 200);
  CHECK(b.k == 200);

  CHECK_THROWS_AS(bound_constants(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(bound_constants(1, 0), std::invalid_argument);
}

TEST_CASE("bound_constants identities and monotonicity on the grid") {
  for (std::size_t m = 1; m <= 500; ++m) {
    BoundConstants prev_k{};
    for (std::size_t k = 1; k <= 500; ++k) {
      const auto b = bound_constants(m, k);
      REQUIRE(b.c3 == 0.5 * b.c2);
      REQUIRE(b.c4 == b.c2 + 2.0 * b.c1);
      REQUIRE(b.c1 > 0.0);
      REQUIRE(b.c2 > 0.0);
      REQUIRE(b.c1 >= prev_k.c1);
      REQUIRE(b.c2 >= prev_k.c2);
      REQUIRE(b.c4 >= prev_k.c4);
      if (m > 1) {
        const auto below = bound_constants(m - 1, k);
        REQUIRE(b.c1 >= below.c1);
        REQUIRE(b.c2 >= below.c2);
        REQUIRE(b.c4 >= below.c4);
      }
      prev_k = b;
    }
  }
}

TEST_CASE("check_assumption") {
  auto r = check_assumption(6, 5, 1.0, 2.22e-16);
  CHECK(r.lhs == doctest::Approx(1.64e-13).epsilon(1e-2));
  CHECK(r.satisfied);

  // Counterexample matrix: outside the hypothesis.
  r = check_assumption(6, 5, 3.9874e6, 2.2204e-16);
  CHECK(r.lhs == doctest::Approx(2.6).epsilon(1e-2));
  CHECK_FALSE(r.satisfied);

  r = check_assumption(200, 200, 506.92, 2.2204e-16);
  CHECK(r.lhs == doctest::Approx(1.6e-3).epsilon(1e-2));
  CHECK(r.satisfied);
  CHECK(r.kappa_r == 506.92);
  CHECK(r.epsilon == 2.2204e-16);

  CHECK(check_assumption(6, 5, 1.0).epsilon == 0x1p-52);
  CHECK_THROWS_AS(check_assumption(6, 5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(check_assumption(6, 5, 2.0, 0.0), std::invalid_argument);
}

TEST_CASE("check_assumption is monotone in kappa") {
  bool was_satisfied = true;
  for (double kappa = 1.0; kappa < 1e9; kappa *= 1.37) {
    const auto r = check_assumption(30, 10, kappa);
    CHECK(r.satisfied == (r.lhs < 1.0));
    if (!was_satisfied) CHECK_FALSE(r.satisfied);
    was_satisfied = r.satisfied;
  }
  CHECK_FALSE(was_satisfied);
}

TEST_CASE("relate_kappa") {
  const double eps = 0x1p-52;
  const double f1 = relate_kappa(1.0, 6, 5, eps);
  CHECK(f1 >= 1.0);
  CHECK(f1 - 1.0 <= 300.0 * eps + 0x1p-52 + 560.0 * eps);

  const double f = relate_kappa(506.92, 200, 200, 2.2204e-16);
  const double zeta = 2.2204e-16 * 27943200.0 * 506.92 * 506.92;
  CHECK(zeta == doctest::Approx(1.6e-3).epsilon(1e-2));
  CHECK(f == doctest::Approx((1.0 + 13971600.0 * 2.2204e-16) / std::sqrt(1.0 - zeta)).epsilon(1e-15));
  CHECK(f == doctest::Approx(1.0008).epsilon(1e-4));

  try {
    relate_kappa(1e8, 6, 5, eps);
    FAIL("expected VacuousBound");
  } catch (const VacuousBound& e) {
    CHECK(e.zeta() >= 1.0);
  }
}
