#pragma once

#include <span>
#include <string>
#include <vector>

#include "pcakit/linalg.hpp"
#include "pcakit/matrix.hpp"

namespace pcakit {

struct VarianceRow {
  int component = 0;  // 1-based
  double eigenvalue = 0.0;
  double percent_of_variance = 0.0;
  double cumulative_percent = 0.0;
};

using VarianceTable = std::vector<VarianceRow>;

struct ScreePoint {
  int component = 0;  // 1-based
  double eigenvalue = 0.0;
};

/// p x m correlation-scale loadings. Every |loading| and every row
/// communality is at most 1 + 1e-8.
class LoadingMatrix {
 public:
  LoadingMatrix() = default;
  LoadingMatrix(std::vector<std::string> variable_names, std::vector<std::string> component_labels,
                Matrix loadings, bool rotated);

  std::size_t variables() const noexcept { return values_.rows(); }
  std::size_t components() const noexcept { return values_.cols(); }
  double operator()(std::size_t j, std::size_t k) const { return values_(j, k); }
  const Matrix& values() const noexcept { return values_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  const std::vector<std::string>& component_labels() const noexcept { return labels_; }
  bool rotated() const noexcept { return rotated_; }

  /// Row sums of squared loadings.
  std::vector<double> communalities() const;
  /// Column sums of squared loadings.
  std::vector<double> column_sums_of_squares() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::string> labels_;
  Matrix values_;
  bool rotated_ = false;
};

/// "PC1", "PC2", ...
std::vector<std::string> component_labels(std::size_t m);

/// Number of eigenvalues strictly greater than 1. Input must be non-empty and
/// descending. Throws ErrorKind::no_component_retained when none qualifies.
std::size_t kaiser_retain(std::span<const double> eigenvalues);

/// Percent of total variance (eigenvalue / p * 100) with running cumulative.
VarianceTable variance_table(std::span<const double> eigenvalues, std::size_t p);

/// (index, eigenvalue) pairs from 1. Rejects input that is not descending.
std::vector<ScreePoint> scree_data(std::span<const double> eigenvalues);

/// loading(j, k) = v(j, k) * sqrt(l_k) for the first m components.
LoadingMatrix unrotated_loadings(const EigenSolution& e, std::size_t m,
                                 const std::vector<std::string>& variable_names);

}  // namespace pcakit
