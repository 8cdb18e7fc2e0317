#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pcakit {

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<double> column(std::size_t j) const;
  std::span<const double> data() const noexcept { return data_; }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Largest absolute element-wise difference. Shapes must match.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Square matrix whose storage keeps a(i,j) and a(j,i) identical.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order) : m_(order, order) {}

  /// Requires exact symmetry and finite entries.
  explicit SymmetricMatrix(Matrix m);

  /// Averages m with its transpose first. Use for results of floating-point
  /// products that are symmetric only up to rounding.
  static SymmetricMatrix symmetrized(const Matrix& m);
  static SymmetricMatrix identity(std::size_t n);

  std::size_t order() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, double value);

  double trace() const;
  const Matrix& matrix() const noexcept { return m_; }

  /// Principal submatrix on the given indices, in the given order.
  SymmetricMatrix submatrix(std::span<const std::size_t> indices) const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  Matrix m_;
};

}  // namespace pcakit
