#include "gsqr/gram_schmidt.hpp"

#include <cmath>
#include <stdexcept>

#include "gsqr/errors.hpp"
#include "gsqr/linalg.hpp"

namespace gsqr {

namespace {

enum class Diagonal { VNorm, Pythagorean };

QrFactorization classical_gram_schmidt(const Matrix& a, Diagonal diag) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw std::invalid_argument("Gram-Schmidt requires m >= n");

  Matrix q(m, n);
  Matrix r(n, n);
  std::vector<StepTrace> traces;
  traces.reserve(n);

  {
    const auto a1 = a.col(0);
    const double r11 = vec_norm2(a1);
    if (!(r11 > 0.0)) throw Breakdown(1, r11, 0.0, "first column has zero norm");
    r(0, 0) = r11;
    auto q1 = q.col(0);
    for (std::size_t i = 0; i < m; ++i) q1[i] = a1[i] / r11;
    traces.push_back({1, r11, 0.0, r11, r11});
  }

  Vector s;
  Vector v(m);
  for (std::size_t k = 1; k < n; ++k) {
    const auto ak = a.col(k);

    s.assign(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) s[j] = dot(q.col(j), ak);

    // fl(a_k - Q_{k-1} s_k): one matrix-vector product, then one subtraction.
    for (std::size_t i = 0; i < m; ++i) {
      double qs = 0.0;
      for (std::size_t j = 0; j < k; ++j) qs += q(i, j) * s[j];
      v[i] = ak[i] - qs;
    }

    StepTrace t;
    t.k = k + 1;
    t.psi = vec_norm2(ak);
    t.phi = vec_norm2(s);
    t.v_norm = vec_norm2(v);

    double rkk = 0.0;
    if (diag == Diagonal::VNorm) {
      rkk = t.v_norm;
      if (!(rkk > 0.0)) throw Breakdown(k + 1, t.psi, t.phi, "||v_k|| = 0");
    } else {
      if (!(t.psi > t.phi)) throw Breakdown(k + 1, t.psi, t.phi, "psi_k <= phi_k");
      const double diff = t.psi - t.phi;
      const double sum = t.psi + t.phi;
      const double root_diff = std::sqrt(diff);
      const double root_sum = std::sqrt(sum);
      rkk = root_diff * root_sum;
    }
    t.r_kk = rkk;

    for (std::size_t j = 0; j < k; ++j) r(j, k) = s[j];
    r(k, k) = rkk;
    auto qk = q.col(k);
    for (std::size_t i = 0; i < m; ++i) qk[i] = v[i] / rkk;
    traces.push_back(t);
  }

  return QrFactorization{std::move(q), std::move(r), std::move(traces),
                         diag == Diagonal::VNorm ? Algorithm::CgsS : Algorithm::CgsP};
}

}  // namespace

QrFactorization cgs_s(const Matrix& a) {
  return classical_gram_schmidt(a, Diagonal::VNorm);
}

QrFactorization cgs_p(const Matrix& a) {
  return classical_gram_schmidt(a, Diagonal::Pythagorean);
}

QrFactorization factorize(const Matrix& a, Algorithm algo) {
  switch (algo) {
    case Algorithm::CgsS: return cgs_s(a);
    case Algorithm::CgsP: return cgs_p(a);
    case Algorithm::Householder: return householder_qr(a);
  }
  throw std::invalid_argument("factorize: unknown algorithm");
}

}  // namespace gsqr
