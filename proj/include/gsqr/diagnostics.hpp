#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gsqr/bounds.hpp"
#include "gsqr/factorization.hpp"
#include "gsqr/matrix.hpp"

namespace gsqr {

/// Measured errors of one column prefix (A_k, Q_k, R_k) against the
/// first-order bounds. Pass flags compare measured <= bound with no slack.
struct PrefixAudit {
  std::size_t k = 0;
  double a_norm = 0.0;  ///< ||A_k||_2
  double r_norm = 0.0;  ///< ||R_k||_2
  double kappa_r = 0.0; ///< kappa_2(R_k)

  double backward_error = 0.0;  ///< ||Q_k R_k - A_k||_2
  double backward_bound = 0.0;  ///< c1 ||A_k|| eps
  bool backward_pass = false;

  double normal_residual = 0.0;  ///< ||R_k^T R_k - A_k^T A_k||_2
  double normal_bound = 0.0;     ///< c2 ||A_k||^2 eps
  bool normal_pass = false;

  double mu = 0.0;        ///< ||R_k|| / ||A_k|| - 1 (signed)
  double mu_bound = 0.0;  ///< c3 eps, compared with |mu|
  bool mu_pass = false;

  double ortho_loss = 0.0;   ///< ||I - Q_k^T Q_k||_2
  double ortho_bound = 0.0;  ///< c4 kappa_2(R_k)^2 eps
  bool ortho_pass = false;

  double q_norm = 0.0;  ///< ||Q_k||_2, compared with sqrt(2)
  double q_norm_bound = 0.0;
  bool q_norm_pass = false;

  // Frobenius-norm counterparts, recorded as a cross-check.
  double backward_error_fro = 0.0;
  double normal_residual_fro = 0.0;
  double ortho_loss_fro = 0.0;

  bool all_pass() const noexcept {
    return backward_pass && normal_pass && mu_pass && ortho_pass && q_norm_pass;
  }

  friend bool operator==(const PrefixAudit&, const PrefixAudit&) = default;
};

struct DiagnosticsReport {
  Algorithm algorithm = Algorithm::CgsP;
  std::size_t m = 0;
  std::size_t n = 0;
  double epsilon = kMachineEpsilon;
  std::vector<PrefixAudit> rows;  ///< k = 1..n
  double kappa_r_full = 0.0;
  AssumptionReport assumption;

  const PrefixAudit& summary() const { return rows.back(); }
  /// ||R^T R - A^T A|| / ||A||^2 of the full factorization.
  double relative_normal_residual() const {
    return summary().normal_residual / (summary().a_norm * summary().a_norm);
  }

  friend bool operator==(const DiagnosticsReport&, const DiagnosticsReport&) = default;
};

/// Audits a single prefix k of f against the first k columns of a.
PrefixAudit audit_prefix(const Matrix& a, const QrFactorization& f, std::size_t k,
                         double epsilon = kMachineEpsilon);

/// Audits every prefix k = 1..n.
DiagnosticsReport diagnose(const Matrix& a, const QrFactorization& f,
                           double epsilon = kMachineEpsilon);

/// Audit of the complete factorization only (k = n), for matrices where
/// auditing every prefix is too expensive.
struct FinalAudit {
  Algorithm algorithm = Algorithm::CgsP;
  std::size_t m = 0;
  std::size_t n = 0;
  double epsilon = kMachineEpsilon;
  PrefixAudit row;
  AssumptionReport assumption;

  double relative_normal_residual() const {
    return row.a_norm == 0.0 ? 0.0 : row.normal_residual / (row.a_norm * row.a_norm);
  }

  friend bool operator==(const FinalAudit&, const FinalAudit&) = default;
};

FinalAudit audit_final(const Matrix& a, const QrFactorization& f,
                       double epsilon = kMachineEpsilon);
FinalAudit final_audit(const DiagnosticsReport& r);

/// Rows of strings with a header, rendered as markdown or CSV.
struct TableDocument {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  std::string to_markdown() const;
  std::string to_csv() const;
};

/// Scientific notation with five significant digits, e.g. 3.3760e-17.
std::string sci5(double x);

/// One row per report: algorithm, ||A^T A - R^T R||/||A||^2, ||I - Q^T Q||.
TableDocument summary_table(const std::vector<DiagnosticsReport>& reports,
                            std::string title = {});
TableDocument summary_table(const std::vector<FinalAudit>& audits, std::string title = {});

}  // namespace gsqr
