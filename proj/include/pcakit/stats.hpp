#pragma once

#include <string>
#include <vector>

#include "pcakit/matrix.hpp"

namespace pcakit {

/// n observations of p named variables. Complete and finite, n >= 2, p >= 2,
/// names distinct.
class DataMatrix {
 public:
  DataMatrix(std::vector<std::string> variable_names, Matrix rows);

  std::size_t observations() const noexcept { return rows_.rows(); }
  std::size_t variables() const noexcept { return rows_.cols(); }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  const Matrix& values() const noexcept { return rows_; }
  double operator()(std::size_t i, std::size_t j) const { return rows_(i, j); }

  /// Keeps only the listed columns, in the listed order.
  DataMatrix select(const std::vector<std::size_t>& columns) const;

 private:
  std::vector<std::string> names_;
  Matrix rows_;
};

/// Pearson correlation matrix: unit diagonal, off-diagonals in [-1, 1].
class CorrelationMatrix {
 public:
  CorrelationMatrix(SymmetricMatrix base, std::vector<std::string> variable_names);

  std::size_t order() const noexcept { return base_.order(); }
  double operator()(std::size_t i, std::size_t j) const { return base_(i, j); }
  const SymmetricMatrix& base() const noexcept { return base_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }

  CorrelationMatrix select(const std::vector<std::size_t>& indices) const;

 private:
  SymmetricMatrix base_;
  std::vector<std::string> names_;
};

/// Column z-scores using the sample (n-1) standard deviation.
/// Throws ErrorKind::constant_variable naming the first constant column.
DataMatrix standardize(const DataMatrix& d);

CorrelationMatrix correlation_matrix(const DataMatrix& d);

/// Upper tail P(X >= stat) for X ~ chi-square(df), via the regularized
/// incomplete gamma function Q(df/2, stat/2).
double chi_square_sf(double stat, int df);

}  // namespace pcakit
