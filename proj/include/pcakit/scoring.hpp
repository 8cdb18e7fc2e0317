#pragma once

#include <span>
#include <string>
#include <vector>

#include "pcakit/extraction.hpp"
#include "pcakit/matrix.hpp"
#include "pcakit/stats.hpp"

namespace pcakit {

/// Weights applied to standardized variables to form component scores.
///
/// The coefficient for variable j on component k is the (rotated) loading
/// divided by the square root of the component's unrotated eigenvalue. This
/// is not the regression-method score; it reproduces the component equations
/// obtained that way from a varimax solution.
class ScoreCoefficients {
 public:
  ScoreCoefficients() = default;
  ScoreCoefficients(std::vector<std::string> variable_names,
                    std::vector<std::string> component_labels, Matrix coefficients);

  std::size_t variables() const noexcept { return values_.rows(); }
  std::size_t components() const noexcept { return values_.cols(); }
  double operator()(std::size_t j, std::size_t k) const { return values_(j, k); }
  const Matrix& values() const noexcept { return values_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  const std::vector<std::string>& component_labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::string> labels_;
  Matrix values_;
};

/// coefficient(j, k) = loading(j, k) / sqrt(eigenvalues[k]).
/// Throws ErrorKind::invalid_argument on a size mismatch or an eigenvalue <= 0.
ScoreCoefficients score_coefficients(const LoadingMatrix& l, std::span<const double> eigenvalues);

/// Raw product z * C without any precondition on z.
Matrix apply_coefficients(const Matrix& z, const ScoreCoefficients& c);

/// n x m scores for standardized data. Variable names must match the
/// coefficients in order (ErrorKind::alignment_error) and every column must
/// have mean 0 and sd 1 within 1e-8 (ErrorKind::not_standardized).
Matrix compute_scores(const DataMatrix& standardized, const ScoreCoefficients& c);

}  // namespace pcakit
