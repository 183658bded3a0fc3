#pragma once

#include "gsqr/factorization.hpp"
#include "gsqr/matrix.hpp"

namespace gsqr {

/// Classical Gram-Schmidt with r_kk = ||v_k||.
///
/// For k >= 2: s_k = Q_{k-1}^T a_k as k-1 column dot products,
/// v_k = a_k - Q_{k-1} s_k, r_kk = ||v_k||, q_k = v_k / r_kk.
/// Throws Breakdown when r_kk is zero. Requires m >= n.
QrFactorization cgs_s(const Matrix& a);

/// Classical Gram-Schmidt with the Pythagorean diagonal
/// r_kk = sqrt(psi_k - phi_k) * sqrt(psi_k + phi_k),
/// psi_k = ||a_k||, phi_k = ||s_k||. Everything else matches cgs_s.
/// Throws Breakdown when psi_k <= phi_k.
QrFactorization cgs_p(const Matrix& a);

/// Dispatch on algorithm tag (Householder included).
QrFactorization factorize(const Matrix& a, Algorithm algo);

}  // namespace gsqr
