#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "gsqr/matrix.hpp"

namespace gsqr {

enum class Algorithm { CgsS, CgsP, Householder };

std::string_view to_string(Algorithm algo);
/// Human-facing label: "CGS-S", "CGS-P", "Householder".
std::string_view display_name(Algorithm algo);
/// Accepts "CGS_S"/"cgs-s", "CGS_P"/"cgs-p", "HOUSEHOLDER"/"householder".
Algorithm algorithm_from_string(std::string_view name);

/// Per-column record of the quantities that decide r_kk.
struct StepTrace {
  std::size_t k = 0;     ///< 1-based column index
  double psi = 0.0;      ///< fl(||a_k||)
  double phi = 0.0;      ///< fl(||s_k||), zero for k = 1
  double v_norm = 0.0;   ///< fl(||v_k||)
  double r_kk = 0.0;     ///< diagonal entry as stored

  friend bool operator==(const StepTrace&, const StepTrace&) = default;
};

/// Q (m x n) and upper triangular R (n x n) with one trace per column.
struct QrFactorization {
  Matrix q;
  Matrix r;
  std::vector<StepTrace> traces;
  Algorithm algorithm;

  std::size_t rows() const noexcept { return q.rows(); }
  std::size_t cols() const noexcept { return q.cols(); }

  friend bool operator==(const QrFactorization&, const QrFactorization&) = default;
};

/// Q_k, R_k and the first k traces of an incremental factorization.
///
/// Both Gram-Schmidt variants build column k from Q_{k-1} and a_k only, so
/// the prefix equals the factorization of the first k columns bit for bit.
QrFactorization prefix(const QrFactorization& f, std::size_t k);

}  // namespace gsqr
