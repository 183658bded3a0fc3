#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gsqr/bounds.hpp"
#include "gsqr/diagnostics.hpp"
#include "gsqr/factorization.hpp"

namespace gsqr {

/// The five inequalities audited per prefix.
enum class Inequality : std::size_t { Backward, NormalEquations, NormGrowth, Orthogonality, QNorm };
inline constexpr std::size_t kInequalityCount = 5;

std::string_view to_string(Inequality which);

/// measured / bound for each inequality. For the norm-growth row the
/// measured value is |mu_k|.
std::array<double, kInequalityCount> audit_ratios(const PrefixAudit& row);

/// Pass test with slack: measured <= slack * bound for the first four,
/// ||Q_k|| <= sqrt(2) + q_norm_tolerance for the last (slack does not apply).
std::array<bool, kInequalityCount> audit_passes(const PrefixAudit& row, double slack,
                                                double q_norm_tolerance = 1e-10);

struct VerifyConfig {
  std::size_t trials = 20;
  std::size_t m = 0;  ///< 0: draw m uniformly from [5, 60]
  std::size_t n = 0;  ///< 0: draw n uniformly from [2, m]
  double kappa = 1e2;
  double slack = 10.0;
  std::uint64_t seed = 0;
  double epsilon = kMachineEpsilon;
  Algorithm algorithm = Algorithm::CgsP;
};

struct TrialResult {
  std::size_t index = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  bool breakdown = false;
  double kappa_r = 0.0;
  bool assumption_satisfied = false;
  std::size_t prefixes = 0;
  std::array<std::size_t, kInequalityCount> passes{};
  std::array<double, kInequalityCount> worst_ratio{};
};

struct VerifySummary {
  VerifyConfig config;
  std::vector<TrialResult> trials;
  std::size_t prefixes = 0;
  std::size_t breakdowns = 0;
  std::array<std::size_t, kInequalityCount> passes{};
  std::array<double, kInequalityCount> worst_ratio{};

  bool all_pass() const noexcept;
};

/// Generates `trials` matrices with conditioned_matrix (trial i draws from
/// Rng(seed).split(i)), factors each, audits every prefix.
VerifySummary run_verify(const VerifyConfig& cfg);

}  // namespace gsqr
