#include "gsqr/errors.hpp"

#include <sstream>

namespace gsqr {

namespace {

std::string describe_breakdown(std::size_t column, double psi, double phi,
                               const std::string& why) {
  std::ostringstream os;
  os.precision(17);
  os << "breakdown at column " << column << ": " << why << " (psi=" << psi
     << ", phi=" << phi << ")";
  return os.str();
}

}  // namespace

NonConvergence::NonConvergence(int sweeps)
    : Error("Jacobi SVD did not converge after " + std::to_string(sweeps) +
            " sweeps"),
      sweeps_(sweeps) {}

SingularInput::SingularInput()
    : Error("matrix is singular: smallest singular value is zero") {}

RankDeficient::RankDeficient(std::size_t column, double diagonal,
                             double threshold)
    : Error("rank deficient at column " + std::to_string(column) +
            ": |r_kk| = " + std::to_string(diagonal) + " below " +
            std::to_string(threshold)),
      column_(column) {}

Breakdown::Breakdown(std::size_t column, double psi, double phi,
                     const std::string& why)
    : Error(describe_breakdown(column, psi, phi, why)),
      column_(column),
      psi_(psi),
      phi_(phi) {}

VacuousBound::VacuousBound(double zeta)
    : Error("condition-number relation is vacuous: zeta = " +
            std::to_string(zeta) + " >= 1"),
      zeta_(zeta) {}

}  // namespace gsqr
