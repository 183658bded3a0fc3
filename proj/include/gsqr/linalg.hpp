#pragma once

#include <span>
#include <vector>

#include "gsqr/factorization.hpp"
#include "gsqr/matrix.hpp"

namespace gsqr {

/// A^T A. The upper triangle is computed and mirrored, so the result is
/// exactly symmetric.
Matrix gram(const Matrix& a);

/// Euclidean norm with plain accumulation. Falls back to scaled two-pass
/// evaluation only when the largest magnitude is above 1e150 or below 1e-150.
double vec_norm2(std::span<const double> x);

struct SingularSpectrum {
  std::vector<double> values;  ///< descending, nonnegative, length min(m, n)
  int sweeps = 0;
};

struct JacobiOptions {
  double tolerance = 1e-15;
  int max_sweeps = 100;
};

/// One-sided Jacobi SVD on the columns of A (of A^T when A is wide).
///
/// Tall inputs are first reduced to their Householder R factor, which has the
/// same singular values; the rotations then act on an n x n matrix. A pair of
/// columns is left alone once |c_i^T c_j| <= tol * ||c_i|| ||c_j||.
/// Throws NonConvergence if a full sweep still rotates after max_sweeps.
SingularSpectrum singular_values(const Matrix& a, const JacobiOptions& opts = {});

double spectral_norm(const Matrix& a);

/// sigma_max / sigma_min. Throws SingularInput when sigma_min == 0.
double cond2(const Matrix& a);

/// Householder QR with explicitly formed thin Q. Diagonal of R is made
/// nonnegative by flipping signs of matching rows of R and columns of Q.
QrFactorization householder_qr(const Matrix& a);

/// Orthonormal basis for range(A) from householder_qr. Throws RankDeficient
/// if some |r_kk| < 1e-13 ||A||_2.
Matrix orth(const Matrix& a);

}  // namespace gsqr
