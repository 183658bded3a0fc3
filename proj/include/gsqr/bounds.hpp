#pragma once

#include <cstddef>

namespace gsqr {

/// binary64 unit roundoff, 2^-52.
inline constexpr double kMachineEpsilon = 0x1p-52;

/// Error-bound constants for a prefix with m rows and k columns.
///
///   c1 = 1                        (k = 1)
///        2*sqrt(2)*m*k + 2*sqrt(k) (k >= 2)
///   c2 = m + 2                    (k = 1)
///        3.5*m*k^2 - 1.5*m*k + 16*k (k >= 2)
///   c3 = 0.5 * c2
///   c4 = c2 + 2 * c1
struct BoundConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  std::size_t m = 0;
  std::size_t k = 0;
};

BoundConstants bound_constants(std::size_t m, std::size_t k);

/// Evaluation of c4(m,k) * eps * kappa^2 < 1.
struct AssumptionReport {
  double kappa_r = 0.0;
  double epsilon = 0.0;
  double lhs = 0.0;
  bool satisfied = false;

  friend bool operator==(const AssumptionReport&, const AssumptionReport&) = default;
};

/// Advisory: a false result does not stop any computation.
AssumptionReport check_assumption(std::size_t m, std::size_t k, double kappa_r,
                                  double epsilon = kMachineEpsilon);

/// Factor (1 + c3*eps) * (1 - zeta)^(-1/2) with zeta = eps * c2 * kappa_r^2,
/// first order in eps. It bounds kappa(R_k) / kappa(A_k).
/// Throws VacuousBound when zeta >= 1.
double relate_kappa(double kappa_r, std::size_t m, std::size_t k,
                    double epsilon = kMachineEpsilon);

}  // namespace gsqr
