#include "gsqr/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gsqr/errors.hpp"

namespace gsqr {

BoundConstants bound_constants(std::size_t m, std::size_t k) {
  if (m == 0 || k == 0) throw std::invalid_argument("bound_constants: m, k must be >= 1");
  const double md = static_cast<double>(m);
  const double kd = static_cast<double>(k);
  BoundConstants b;
  b.m = m;
  b.k = k;
  if (k == 1) {
    b.c1 = 1.0;
    b.c2 = md + 2.0;
  } else {
    b.c1 = 2.0 * std::numbers::sqrt2 * md * kd + 2.0 * std::sqrt(kd);
    b.c2 = 3.5 * md * kd * kd - 1.5 * md * kd + 16.0 * kd;
  }
  b.c3 = 0.5 * b.c2;
  b.c4 = b.c2 + 2.0 * b.c1;
  return b;
}

AssumptionReport check_assumption(std::size_t m, std::size_t k, double kappa_r,
                                  double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("check_assumption: epsilon must be > 0");
  if (!(kappa_r >= 1.0)) throw std::invalid_argument("check_assumption: kappa must be >= 1");
  AssumptionReport rep;
  rep.kappa_r = kappa_r;
  rep.epsilon = epsilon;
  rep.lhs = bound_constants(m, k).c4 * epsilon * kappa_r * kappa_r;
  rep.satisfied = rep.lhs < 1.0;
  return rep;
}

double relate_kappa(double kappa_r, std::size_t m, std::size_t k, double epsilon) {
  const auto b = bound_constants(m, k);
  const double zeta = epsilon * b.c2 * kappa_r * kappa_r;
  if (!(zeta < 1.0)) throw VacuousBound(zeta);
  return (1.0 + b.c3 * epsilon) / std::sqrt(1.0 - zeta);
}

}  // namespace gsqr
