#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gsqr {

using Vector = std::vector<double>;

/// Dense real matrix stored column-major.
///
/// Both dimensions are at least one. Columns are contiguous, so a column can
/// be handed out as a span without copying.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  /// Row-major nested initializer, convenient in tests: {{1, 2}, {3, 4}}.
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  std::span<double> col(std::size_t j) { return {data_.data() + j * rows_, rows_}; }
  std::span<const double> col(std::size_t j) const {
    return {data_.data() + j * rows_, rows_};
  }

  std::span<const double> data() const noexcept { return data_; }

  /// First k columns.
  Matrix leading_cols(std::size_t k) const;
  /// Columns [first, first + count).
  Matrix col_block(std::size_t first, std::size_t count) const;
  void set_col_block(std::size_t first, const Matrix& block);
  /// Leading k x k block.
  Matrix leading_block(std::size_t k) const;

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

/// Dot product summed in ascending index order.
double dot(std::span<const double> x, std::span<const double> y);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);

}  // namespace gsqr
