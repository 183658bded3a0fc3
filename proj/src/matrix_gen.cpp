#include "gsqr/matrix_gen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gsqr/linalg.hpp"

namespace gsqr {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Rng Rng::split(std::uint64_t stream) const {
  std::uint64_t state = seed_ ^ (stream * 0xd1b54a32d192ed03ULL);
  splitmix64(state);
  return Rng(splitmix64(state));
}

Matrix hilbert(std::size_t n) {
  Matrix h(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) h(i, j) = 1.0 / static_cast<double>(i + j + 1);
  return h;
}

Matrix pascal(std::size_t n) {
  Matrix p(n, n, 1.0);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 1; i < n; ++i) p(i, j) = p(i - 1, j) + p(i, j - 1);
  return p;
}

Matrix example1_matrix() {
  const Matrix h = hilbert(6);
  const Matrix p = pascal(6);
  Matrix a(6, 5);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 6; ++i) a(i, j) = 1.0 + h(i, j) * 1e-2;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 6; ++i) a(i, j + 3) = p(i, j);
  return a;
}

Matrix gaussian_matrix(Rng& rng, std::size_t m, std::size_t n) {
  Matrix a(m, n);
  for (std::size_t j = 0; j < n; ++j)
    for (auto& x : a.col(j)) x = rng.normal();
  return a;
}

Matrix uniform_matrix(Rng& rng, std::size_t m, std::size_t n) {
  Matrix a(m, n);
  for (std::size_t j = 0; j < n; ++j)
    for (auto& x : a.col(j)) x = rng.uniform();
  return a;
}

Vector exponent_grid(double top, std::size_t count) {
  if (count < 2) throw std::invalid_argument("exponent_grid: count must be >= 2");
  const double step = top / static_cast<double>(count - 1);
  Vector g(count);
  for (std::size_t i = 0; i + 1 < count; ++i) g[i] = static_cast<double>(i) * step;
  g.back() = top;
  return g;
}

namespace {

// Scales column j of `a` by 10^exponents[j].
void scale_columns_pow10(Matrix& a, const Vector& exponents) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double s = std::pow(10.0, exponents[j]);
    for (auto& x : a.col(j)) x *= s;
  }
}

}  // namespace

Matrix glued_matrix(const GluedParams& p) {
  if (p.nglued < 2) throw std::invalid_argument("glued_matrix: nglued must be >= 2");
  if (p.nbglued < 1) throw std::invalid_argument("glued_matrix: nbglued must be >= 1");
  const std::size_t n = p.n();
  if (p.m < n) throw std::invalid_argument("glued_matrix: m must be >= nglued * nbglued");

  Rng rng(p.seed);
  Matrix a = orth(uniform_matrix(rng, p.m, n));
  scale_columns_pow10(a, exponent_grid(p.cond_a_glob, n));
  a = a * orth(gaussian_matrix(rng, n, n));

  const Vector block_exponents = exponent_grid(p.cond_a, p.nglued);
  for (std::size_t b = 0; b < p.nbglued; ++b) {
    const std::size_t first = b * p.nglued;
    Matrix block = a.col_block(first, p.nglued);
    scale_columns_pow10(block, block_exponents);
    block = block * orth(gaussian_matrix(rng, p.nglued, p.nglued));
    a.set_col_block(first, block);
  }
  return a;
}

Matrix conditioned_matrix(Rng& rng, std::size_t m, std::size_t n, double kappa) {
  if (m < n) throw std::invalid_argument("conditioned_matrix: m must be >= n");
  if (!(kappa >= 1.0)) throw std::invalid_argument("conditioned_matrix: kappa must be >= 1");
  Matrix u = orth(gaussian_matrix(rng, m, n));
  const Matrix v = orth(gaussian_matrix(rng, n, n));
  const double top = std::log10(kappa);
  for (std::size_t j = 0; j < n; ++j) {
    const double e = n == 1 ? 0.0
                            : top * static_cast<double>(n - 1 - j) / static_cast<double>(n - 1);
    const double s = std::pow(10.0, e);
    for (auto& x : u.col(j)) x *= s;
  }
  return u * v.transposed();
}

}  // namespace gsqr
