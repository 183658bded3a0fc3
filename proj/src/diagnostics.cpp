#include "gsqr/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gsqr/linalg.hpp"

namespace gsqr {

namespace {

// Full-size products whose leading blocks are exactly the prefix products:
// R is upper triangular with exact zeros below the diagonal, so the terms a
// prefix would omit contribute +0 and leave every partial sum unchanged.
struct Products {
  Matrix qr;   // Q R
  Matrix ata;  // A^T A
  Matrix rtr;  // R^T R
  Matrix qtq;  // Q^T Q
};

Products form_products(const Matrix& a, const QrFactorization& f) {
  if (a.rows() != f.rows() || a.cols() != f.cols()) {
    throw std::invalid_argument("diagnose: factorization does not match the matrix shape");
  }
  return Products{f.q * f.r, gram(a), gram(f.r), gram(f.q)};
}

PrefixAudit audit_with(const Matrix& a, const QrFactorization& f, const Products& p,
                       std::size_t k, double epsilon) {
  const std::size_t m = a.rows();
  const auto c = bound_constants(m, k);
  const Matrix ak = a.leading_cols(k);
  const Matrix qk = f.q.leading_cols(k);
  const Matrix rk = f.r.leading_block(k);

  const Matrix delta_a = p.qr.leading_cols(k) - ak;
  const Matrix e = p.rtr.leading_block(k) - p.ata.leading_block(k);
  const Matrix ortho = Matrix::identity(k) - p.qtq.leading_block(k);

  PrefixAudit row;
  row.k = k;
  row.a_norm = spectral_norm(ak);
  const auto r_spectrum = singular_values(rk);
  row.r_norm = r_spectrum.values.front();
  row.kappa_r = r_spectrum.values.front() / r_spectrum.values.back();

  row.backward_error = spectral_norm(delta_a);
  row.backward_bound = c.c1 * row.a_norm * epsilon;
  row.backward_pass = row.backward_error <= row.backward_bound;

  row.normal_residual = spectral_norm(e);
  row.normal_bound = c.c2 * row.a_norm * row.a_norm * epsilon;
  row.normal_pass = row.normal_residual <= row.normal_bound;

  row.mu = row.r_norm / row.a_norm - 1.0;
  row.mu_bound = c.c3 * epsilon;
  row.mu_pass = std::abs(row.mu) <= row.mu_bound;

  row.ortho_loss = spectral_norm(ortho);
  row.ortho_bound = c.c4 * row.kappa_r * row.kappa_r * epsilon;
  row.ortho_pass = row.ortho_loss <= row.ortho_bound;

  row.q_norm = spectral_norm(qk);
  row.q_norm_bound = std::numbers::sqrt2;
  row.q_norm_pass = row.q_norm <= row.q_norm_bound;

  row.backward_error_fro = frobenius_norm(delta_a);
  row.normal_residual_fro = frobenius_norm(e);
  row.ortho_loss_fro = frobenius_norm(ortho);
  return row;
}

}  // namespace

PrefixAudit audit_prefix(const Matrix& a, const QrFactorization& f, std::size_t k,
                         double epsilon) {
  if (k == 0 || k > f.cols()) throw std::out_of_range("audit_prefix: k must lie in [1, n]");
  return audit_with(a, f, form_products(a, f), k, epsilon);
}

DiagnosticsReport diagnose(const Matrix& a, const QrFactorization& f, double epsilon) {
  const Products p = form_products(a, f);
  DiagnosticsReport rep;
  rep.algorithm = f.algorithm;
  rep.m = a.rows();
  rep.n = a.cols();
  rep.epsilon = epsilon;
  rep.rows.reserve(rep.n);
  for (std::size_t k = 1; k <= rep.n; ++k) rep.rows.push_back(audit_with(a, f, p, k, epsilon));
  rep.kappa_r_full = rep.rows.back().kappa_r;
  rep.assumption = check_assumption(rep.m, rep.n, std::max(rep.kappa_r_full, 1.0), epsilon);
  return rep;
}

FinalAudit audit_final(const Matrix& a, const QrFactorization& f, double epsilon) {
  FinalAudit out;
  out.algorithm = f.algorithm;
  out.m = a.rows();
  out.n = a.cols();
  out.epsilon = epsilon;
  out.row = audit_prefix(a, f, f.cols(), epsilon);
  out.assumption = check_assumption(out.m, out.n, std::max(out.row.kappa_r, 1.0), epsilon);
  return out;
}

FinalAudit final_audit(const DiagnosticsReport& r) {
  return FinalAudit{r.algorithm, r.m, r.n, r.epsilon, r.summary(), r.assumption};
}

std::string TableDocument::to_markdown() const {
  std::ostringstream os;
  if (!title.empty()) os << "### " << title << "\n\n";
  os << '|';
  for (const auto& h : headers) os << ' ' << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < headers.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& r : rows) {
    os << '|';
    for (const auto& cell : r) os << ' ' << cell << " |";
    os << '\n';
  }
  return os.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string TableDocument::to_csv() const {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << csv_field(cells[i]);
    }
    os << '\n';
  };
  line(headers);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string sci5(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", x);
  return buf;
}

TableDocument summary_table(const std::vector<DiagnosticsReport>& reports, std::string title) {
  std::vector<FinalAudit> audits;
  audits.reserve(reports.size());
  for (const auto& r : reports) audits.push_back(final_audit(r));
  return summary_table(audits, std::move(title));
}

TableDocument summary_table(const std::vector<FinalAudit>& audits, std::string title) {
  if (audits.empty()) throw std::invalid_argument("summary_table: no reports");
  TableDocument t;
  t.title = std::move(title);
  t.headers = {"Algorithm", "||A^T A - R^T R|| / ||A||^2", "||I - Q^T Q||"};
  for (const auto& a : audits) {
    t.rows.push_back({std::string(display_name(a.algorithm)), sci5(a.relative_normal_residual()),
                      sci5(a.row.ortho_loss)});
  }
  return t;
}

}  // namespace gsqr
