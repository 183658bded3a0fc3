#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsqr {

/// Base of every numerical failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Jacobi SVD did not reach its orthogonality threshold.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(int sweeps);
  int sweeps() const noexcept { return sweeps_; }

 private:
  int sweeps_;
};

/// Smallest singular value is exactly zero, so the condition number is undefined.
class SingularInput : public Error {
 public:
  SingularInput();
};

/// orth() met a column it could not normalize.
class RankDeficient : public Error {
 public:
  RankDeficient(std::size_t column, double diagonal, double threshold);
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A Gram-Schmidt step could not produce a positive diagonal entry.
///
/// `column` is 1-based. `psi`/`phi` are only meaningful for the Pythagorean
/// variant; the standard variant reports psi = ||a_k|| and phi = ||s_k||
/// for information.
class Breakdown : public Error {
 public:
  Breakdown(std::size_t column, double psi, double phi, const std::string& why);
  std::size_t column() const noexcept { return column_; }
  double psi() const noexcept { return psi_; }
  double phi() const noexcept { return phi_; }

 private:
  std::size_t column_;
  double psi_;
  double phi_;
};

/// zeta_k >= 1: the condition-number relation carries no information.
class VacuousBound : public Error {
 public:
  explicit VacuousBound(double zeta);
  double zeta() const noexcept { return zeta_; }

 private:
  double zeta_;
};

/// Malformed matrix file or report document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsqr
