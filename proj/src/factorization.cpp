#include "gsqr/factorization.hpp"

#include <stdexcept>
#include <string>

namespace gsqr {

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::CgsS: return "CGS_S";
    case Algorithm::CgsP: return "CGS_P";
    case Algorithm::Householder: return "HOUSEHOLDER";
  }
  return "UNKNOWN";
}

std::string_view display_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::CgsS: return "CGS-S";
    case Algorithm::CgsP: return "CGS-P";
    case Algorithm::Householder: return "Householder";
  }
  return "unknown";
}

Algorithm algorithm_from_string(std::string_view name) {
  if (name == "CGS_S" || name == "cgs-s") return Algorithm::CgsS;
  if (name == "CGS_P" || name == "cgs-p") return Algorithm::CgsP;
  if (name == "HOUSEHOLDER" || name == "householder") return Algorithm::Householder;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

QrFactorization prefix(const QrFactorization& f, std::size_t k) {
  if (k == 0 || k > f.cols()) {
    throw std::out_of_range("prefix: k must lie in [1, n]");
  }
  return QrFactorization{f.q.leading_cols(k), f.r.leading_block(k),
                         {f.traces.begin(), f.traces.begin() + static_cast<std::ptrdiff_t>(k)},
                         f.algorithm};
}

}  // namespace gsqr
