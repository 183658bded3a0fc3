#include "gsqr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gsqr/errors.hpp"
#include "gsqr/gram_schmidt.hpp"
#include "gsqr/matrix_gen.hpp"

namespace gsqr {

std::string_view to_string(Inequality which) {
  switch (which) {
    case Inequality::Backward: return "backward_error";
    case Inequality::NormalEquations: return "normal_equations";
    case Inequality::NormGrowth: return "norm_growth";
    case Inequality::Orthogonality: return "orthogonality";
    case Inequality::QNorm: return "q_norm";
  }
  return "unknown";
}

namespace {

double ratio(double measured, double bound) {
  if (bound > 0.0) return measured / bound;
  return measured == 0.0 ? 0.0 : INFINITY;
}

}  // namespace

std::array<double, kInequalityCount> audit_ratios(const PrefixAudit& row) {
  return {ratio(row.backward_error, row.backward_bound),
          ratio(row.normal_residual, row.normal_bound),
          ratio(std::abs(row.mu), row.mu_bound),
          ratio(row.ortho_loss, row.ortho_bound),
          ratio(row.q_norm, row.q_norm_bound)};
}

std::array<bool, kInequalityCount> audit_passes(const PrefixAudit& row, double slack,
                                                double q_norm_tolerance) {
  return {row.backward_error <= slack * row.backward_bound,
          row.normal_residual <= slack * row.normal_bound,
          std::abs(row.mu) <= slack * row.mu_bound,
          row.ortho_loss <= slack * row.ortho_bound,
          row.q_norm <= std::numbers::sqrt2 + q_norm_tolerance};
}

bool VerifySummary::all_pass() const noexcept {
  if (breakdowns != 0) return false;
  return std::all_of(passes.begin(), passes.end(),
                     [this](std::size_t p) { return p == prefixes; });
}

VerifySummary run_verify(const VerifyConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("verify: trials must be >= 1");
  if (!(cfg.kappa >= 1.0) || cfg.kappa > 1e5) {
    throw std::invalid_argument("verify: kappa must lie in [1, 1e5]");
  }
  if (cfg.m != 0 && cfg.n != 0 && cfg.n > cfg.m) {
    throw std::invalid_argument("verify: n must not exceed m");
  }

  VerifySummary out;
  out.config = cfg;
  const Rng root(cfg.seed);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = root.split(t);
    TrialResult tr;
    tr.index = t;
    tr.m = cfg.m != 0 ? cfg.m : 5 + rng.next_u64() % 56;
    tr.n = cfg.n != 0 ? cfg.n : 2 + rng.next_u64() % (tr.m - 1);
    if (tr.n > tr.m) throw std::invalid_argument("verify: n must not exceed m");
    const Matrix a = conditioned_matrix(rng, tr.m, tr.n, cfg.kappa);
    try {
      const auto f = factorize(a, cfg.algorithm);
      const auto rep = diagnose(a, f, cfg.epsilon);
      tr.kappa_r = rep.kappa_r_full;
      tr.assumption_satisfied = rep.assumption.satisfied;
      for (const auto& row : rep.rows) {
        ++tr.prefixes;
        const auto ok = audit_passes(row, cfg.slack);
        const auto rs = audit_ratios(row);
        for (std::size_t i = 0; i < kInequalityCount; ++i) {
          tr.passes[i] += ok[i] ? 1 : 0;
          tr.worst_ratio[i] = std::max(tr.worst_ratio[i], rs[i]);
        }
      }
    } catch (const Breakdown&) {
      tr.breakdown = true;
      ++out.breakdowns;
    }
    out.prefixes += tr.prefixes;
    for (std::size_t i = 0; i < kInequalityCount; ++i) {
      out.passes[i] += tr.passes[i];
      out.worst_ratio[i] = std::max(out.worst_ratio[i], tr.worst_ratio[i]);
    }
    out.trials.push_back(tr);
  }
  return out;
}

}  // namespace gsqr
