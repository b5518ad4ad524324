#pragma once

#include <cstddef>
#include <vector>

namespace ieh {

/// Small dense row-major matrix, just enough to materialize interventions as
/// explicit operators and check their orthogonality.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;
  std::vector<double> apply(const std::vector<double>& x) const;

  /// max_ij |a_ij - b_ij|
  static double max_abs_diff(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

}  // namespace ieh
