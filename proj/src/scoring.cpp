#include "pcakit/scoring.hpp"

#include <cmath>

#include "pcakit/error.hpp"

namespace pcakit {

ScoreCoefficients::ScoreCoefficients(std::vector<std::string> variable_names,
                                     std::vector<std::string> component_labels,
                                     Matrix coefficients)
    : names_(std::move(variable_names)),
      labels_(std::move(component_labels)),
      values_(std::move(coefficients)) {
  if (names_.size() != values_.rows() || labels_.size() != values_.cols()) {
    throw Error(ErrorKind::invalid_argument, "score coefficient labels do not match its shape");
  }
}

ScoreCoefficients score_coefficients(const LoadingMatrix& l, std::span<const double> eigenvalues) {
  if (eigenvalues.size() != l.components()) {
    throw Error(ErrorKind::invalid_argument,
                "need one eigenvalue per component (got " + std::to_string(eigenvalues.size()) +
                    " for " + std::to_string(l.components()) + ")");
  }
  Matrix c(l.variables(), l.components());
  for (std::size_t k = 0; k < l.components(); ++k) {
    if (!(eigenvalues[k] > 0.0)) {
      throw Error(ErrorKind::invalid_argument, "eigenvalue for " + l.component_labels()[k] +
                                                   " must be positive");
    }
    const double root = std::sqrt(eigenvalues[k]);
    for (std::size_t j = 0; j < l.variables(); ++j) c(j, k) = l(j, k) / root;
  }
  return ScoreCoefficients(l.variable_names(), l.component_labels(), std::move(c));
}

Matrix apply_coefficients(const Matrix& z, const ScoreCoefficients& c) {
  if (z.cols() != c.variables()) {
    throw Error(ErrorKind::alignment_error, "variable alignment error: column count mismatch");
  }
  return z * c.values();
}

Matrix compute_scores(const DataMatrix& standardized, const ScoreCoefficients& c) {
  if (standardized.variable_names() != c.variable_names()) {
    throw Error(ErrorKind::alignment_error,
                "variable alignment error: data variables do not match coefficient variables");
  }
  const Matrix& z = standardized.values();
  const double n = static_cast<double>(z.rows());
  for (std::size_t j = 0; j < z.cols(); ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < z.rows(); ++i) mean += z(i, j);
    mean /= n;
    double ss = 0.0;
    for (std::size_t i = 0; i < z.rows(); ++i) ss += (z(i, j) - mean) * (z(i, j) - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    if (std::abs(mean) > 1e-8 || std::abs(sd - 1.0) > 1e-8) {
      throw Error(ErrorKind::not_standardized,
                  "variable '" + standardized.variable_names()[j] + "' is not standardized");
    }
  }
  return apply_coefficients(z, c);
}

}  // namespace pcakit
