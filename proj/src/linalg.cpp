#include "gsqr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsqr/errors.hpp"

namespace gsqr {

namespace {

constexpr double kScaleHigh = 1e150;
constexpr double kScaleLow = 1e-150;

// Householder reduction in place. On return the upper triangle of `w` holds R
// (with the sign convention of the reflectors, not yet corrected) and
// `reflectors[k]` holds v_k, scaled so that H_k = I - 2 v v^T / (v^T v).
void householder_reduce(Matrix& w, std::vector<Vector>& reflectors) {
  const std::size_t m = w.rows();
  const std::size_t n = w.cols();
  reflectors.assign(n, Vector{});
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t len = m - k;
    Vector v(w.col(k).begin() + static_cast<std::ptrdiff_t>(k), w.col(k).end());
    const double xnorm = vec_norm2(v);
    if (xnorm == 0.0) {
      reflectors[k] = Vector(len, 0.0);
      continue;
    }
    const double alpha = v[0] >= 0.0 ? -xnorm : xnorm;
    v[0] -= alpha;
    const double vtv = dot(v, v);
    if (vtv == 0.0) {
      reflectors[k] = Vector(len, 0.0);
      continue;
    }
    const double tau = 2.0 / vtv;
    for (std::size_t j = k; j < n; ++j) {
      auto c = w.col(j).subspan(k);
      const double s = tau * dot(v, c);
      for (std::size_t i = 0; i < len; ++i) c[i] -= s * v[i];
    }
    // The reflected column is exactly alpha * e_1.
    auto c = w.col(k).subspan(k);
    c[0] = alpha;
    std::fill(c.begin() + 1, c.end(), 0.0);
    reflectors[k] = std::move(v);
  }
}

Matrix upper_triangle(const Matrix& w) {
  const std::size_t n = w.cols();
  Matrix r(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i) r(i, j) = w(i, j);
  return r;
}

void apply_reflector(const Vector& v, std::size_t offset, std::span<double> x) {
  const double vtv = dot(v, v);
  if (vtv == 0.0) return;
  auto tail = x.subspan(offset);
  const double s = 2.0 * dot(v, tail) / vtv;
  for (std::size_t i = 0; i < v.size(); ++i) tail[i] -= s * v[i];
}

}  // namespace

Matrix gram(const Matrix& a) {
  const std::size_t n = a.cols();
  Matrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const double s = dot(a.col(i), a.col(j));
      g(i, j) = s;
      g(j, i) = s;
    }
  }
  return g;
}

double vec_norm2(std::span<const double> x) {
  double big = 0.0;
  for (double v : x) big = std::max(big, std::abs(v));
  if (big == 0.0) return 0.0;
  if (big > kScaleHigh || big < kScaleLow) {
    double s = 0.0;
    for (double v : x) {
      const double t = v / big;
      s += t * t;
    }
    return big * std::sqrt(s);
  }
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

SingularSpectrum singular_values(const Matrix& a, const JacobiOptions& opts) {
  // Jacobi on the transposed triangular factor of A: same singular values,
  // and the row grading of R makes the rotations converge in fewer sweeps.
  Matrix work = a.rows() < a.cols() ? a.transposed() : a;
  const std::size_t n = work.cols();
  SingularSpectrum out;

  const double big = max_abs(work);
  if (big == 0.0) {
    out.values.assign(n, 0.0);
    return out;
  }
  // Power-of-two rescaling to max |entry| in [0.5, 1) is exact.
  int exponent = 0;
  std::frexp(big, &exponent);
  for (std::size_t j = 0; j < n; ++j)
    for (auto& x : work.col(j)) x = std::ldexp(x, -exponent);

  if (n > 1) {
    std::vector<Vector> reflectors;
    householder_reduce(work, reflectors);
    work = upper_triangle(work).transposed();
  }

  // Columns below this norm (relative to the largest entry) are treated as
  // converged; their squares would underflow and break the pair test.
  constexpr double kNegligibleSq = kScaleLow * kScaleLow;

  bool converged = n == 1;
  while (!converged) {
    if (out.sweeps == opts.max_sweeps) throw NonConvergence(out.sweeps);
    ++out.sweeps;
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto ci = work.col(i);
        auto cj = work.col(j);
        const double alpha = dot(ci, ci);
        const double beta = dot(cj, cj);
        if (alpha < kNegligibleSq || beta < kNegligibleSq) continue;
        const double gamma = dot(ci, cj);
        if (std::abs(gamma) <= opts.tolerance * std::sqrt(alpha) * std::sqrt(beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t p = 0; p < ci.size(); ++p) {
          const double xi = ci[p];
          const double xj = cj[p];
          ci[p] = c * xi - s * xj;
          cj[p] = s * xi + c * xj;
        }
      }
    }
    converged = !rotated;
  }

  out.values.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values.push_back(std::ldexp(vec_norm2(work.col(j)), exponent));
  }
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double spectral_norm(const Matrix& a) { return singular_values(a).values.front(); }

double cond2(const Matrix& a) {
  const auto sv = singular_values(a);
  const double smin = sv.values.back();
  if (smin == 0.0) throw SingularInput();
  return sv.values.front() / smin;
}

QrFactorization householder_qr(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw std::invalid_argument("householder_qr requires m >= n");

  Matrix w = a;
  std::vector<Vector> reflectors;
  householder_reduce(w, reflectors);
  Matrix r = upper_triangle(w);

  // Q = H_0 H_1 ... H_{n-1} [I_n; 0], applied right to left.
  Matrix q(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto c = q.col(j);
    c[j] = 1.0;
    for (std::size_t k = std::min(j + 1, n); k-- > 0;) apply_reflector(reflectors[k], k, c);
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (r(k, k) < 0.0) {
      for (std::size_t j = k; j < n; ++j) r(k, j) = -r(k, j);
      for (auto& x : q.col(k)) x = -x;
    }
  }

  std::vector<StepTrace> traces;
  traces.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    StepTrace t;
    t.k = k + 1;
    t.psi = vec_norm2(a.col(k));
    t.phi = k == 0 ? 0.0 : vec_norm2(r.col(k).first(k));
    t.v_norm = r(k, k);
    t.r_kk = r(k, k);
    traces.push_back(t);
  }
  return QrFactorization{std::move(q), std::move(r), std::move(traces), Algorithm::Householder};
}

Matrix orth(const Matrix& a) {
  auto f = householder_qr(a);
  const double threshold = 1e-13 * spectral_norm(a);
  for (std::size_t k = 0; k < f.cols(); ++k) {
    if (std::abs(f.r(k, k)) < threshold || f.r(k, k) == 0.0) {
      throw RankDeficient(k + 1, f.r(k, k), threshold);
    }
  }
  return std::move(f.q);
}

}  // namespace gsqr
