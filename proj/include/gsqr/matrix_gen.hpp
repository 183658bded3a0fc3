#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "gsqr/matrix.hpp"

namespace gsqr {

/// Seeded random stream.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard, so a seed reproduces the same bits on every conforming platform.
/// Doubles are built from the raw 64-bit output (never from the
/// implementation-defined std distributions): uniform draws use the top 53
/// bits, normal draws use Box-Muller on two uniforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }
  /// [0, 1)
  double uniform();
  /// Standard normal.
  double normal();

  /// Independent child stream; the child's seed is a SplitMix64 mix of this
  /// stream's seed and `stream`.
  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// H(i, j) = 1 / (i + j + 1), 0-based.
Matrix hilbert(std::size_t n);

/// Symmetric Pascal matrix, P(i, j) = binom(i + j, i).
Matrix pascal(std::size_t n);

/// 6 x 5 counterexample: [ones(6,3) + 1e-2 * hilb(6)(:,1:3), pascal(6)(:,1:2)].
Matrix example1_matrix();

/// i.i.d. standard normal entries, filled column-major.
Matrix gaussian_matrix(Rng& rng, std::size_t m, std::size_t n);

/// i.i.d. uniform [0,1) entries, filled column-major.
Matrix uniform_matrix(Rng& rng, std::size_t m, std::size_t n);

/// Grid 0, top/(count-1), 2*top/(count-1), ..., top. count >= 2.
Vector exponent_grid(double top, std::size_t count);

struct GluedParams {
  double cond_a_glob = 1.0;  ///< log10 of the global scaling range
  double cond_a = 2.0;       ///< log10 of the per-block scaling range
  std::size_t m = 200;
  std::size_t nglued = 5;    ///< columns per block
  std::size_t nbglued = 40;  ///< number of blocks
  std::uint64_t seed = 0;

  std::size_t n() const noexcept { return nglued * nbglued; }
};

/// Glued test matrix:
///   A <- orth(uniform m x n)
///   A <- A * diag(10^grid(cond_a_glob, n)) * orth(gaussian n x n)
///   each block B of nglued columns:
///     B <- B * diag(10^grid(cond_a, nglued)) * orth(gaussian nglued x nglued)
Matrix glued_matrix(const GluedParams& p);

/// U * diag(sigma) * V^T with U = orth(gaussian m x n), V = orth(gaussian n x n)
/// and sigma log-spaced from kappa down to 1, so cond2 is kappa and sigma_min = 1.
Matrix conditioned_matrix(Rng& rng, std::size_t m, std::size_t n, double kappa);

}  // namespace gsqr
