#include "pcakit/extraction.hpp"

#include <algorithm>
#include <cmath>

#include "pcakit/error.hpp"

namespace pcakit {
namespace {

constexpr double kLoadingSlack = 1e-8;
// Retained eigenvalues this close below zero are rounding noise of a
// singular spectrum and are treated as 0.
constexpr double kNegativeEigenTolerance = 1e-12;

void require_descending(std::span<const double> values) {
  if (values.empty()) {
    throw Error(ErrorKind::invalid_argument, "eigenvalue list is empty");
  }
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] > values[k - 1]) {
      throw Error(ErrorKind::invalid_argument, "eigenvalues must be sorted descending");
    }
  }
}

}  // namespace

LoadingMatrix::LoadingMatrix(std::vector<std::string> variable_names,
                             std::vector<std::string> component_labels, Matrix loadings,
                             bool rotated)
    : names_(std::move(variable_names)),
      labels_(std::move(component_labels)),
      values_(std::move(loadings)),
      rotated_(rotated) {
  if (names_.size() != values_.rows() || labels_.size() != values_.cols()) {
    throw Error(ErrorKind::invalid_argument, "loading matrix labels do not match its shape");
  }
  for (std::size_t j = 0; j < values_.rows(); ++j) {
    double h2 = 0.0;
    for (std::size_t k = 0; k < values_.cols(); ++k) {
      const double b = values_(j, k);
      if (!std::isfinite(b) || std::abs(b) > 1.0 + kLoadingSlack) {
        throw Error(ErrorKind::invalid_argument,
                    "loading for '" + names_[j] + "' is not on the correlation scale");
      }
      h2 += b * b;
    }
    if (h2 > 1.0 + kLoadingSlack) {
      throw Error(ErrorKind::invalid_argument,
                  "communality of '" + names_[j] + "' exceeds 1");
    }
  }
}

std::vector<double> LoadingMatrix::communalities() const {
  std::vector<double> out(variables(), 0.0);
  for (std::size_t j = 0; j < variables(); ++j)
    for (std::size_t k = 0; k < components(); ++k) out[j] += values_(j, k) * values_(j, k);
  return out;
}

std::vector<double> LoadingMatrix::column_sums_of_squares() const {
  std::vector<double> out(components(), 0.0);
  for (std::size_t j = 0; j < variables(); ++j)
    for (std::size_t k = 0; k < components(); ++k) out[k] += values_(j, k) * values_(j, k);
  return out;
}

std::vector<std::string> component_labels(std::size_t m) {
  std::vector<std::string> out;
  out.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) out.push_back("PC" + std::to_string(k));
  return out;
}

std::size_t kaiser_retain(std::span<const double> eigenvalues) {
  require_descending(eigenvalues);
  std::size_t m = 0;
  for (double l : eigenvalues) {
    if (l > 1.0) ++m;
  }
  if (m == 0) {
    throw Error(ErrorKind::no_component_retained, "no component retained under Kaiser rule");
  }
  return m;
}

VarianceTable variance_table(std::span<const double> eigenvalues, std::size_t p) {
  if (p == 0) throw Error(ErrorKind::invalid_argument, "variable count must be positive");
  if (eigenvalues.size() > p) {
    throw Error(ErrorKind::invalid_argument, "more eigenvalues than variables");
  }
  VarianceTable table;
  table.reserve(eigenvalues.size());
  double cumulative = 0.0;
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    const double pct = eigenvalues[k] / static_cast<double>(p) * 100.0;
    cumulative += pct;
    table.push_back({static_cast<int>(k + 1), eigenvalues[k], pct, cumulative});
  }
  return table;
}

std::vector<ScreePoint> scree_data(std::span<const double> eigenvalues) {
  require_descending(eigenvalues);
  std::vector<ScreePoint> out;
  out.reserve(eigenvalues.size());
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    out.push_back({static_cast<int>(k + 1), eigenvalues[k]});
  }
  return out;
}

LoadingMatrix unrotated_loadings(const EigenSolution& e, std::size_t m,
                                 const std::vector<std::string>& variable_names) {
  const std::size_t p = e.eigenvalues.size();
  if (m == 0 || m > p) {
    throw Error(ErrorKind::invalid_argument, "retained component count out of range");
  }
  if (e.eigenvectors.rows() != p || e.eigenvectors.cols() != p) {
    throw Error(ErrorKind::invalid_argument, "eigenvector matrix shape mismatch");
  }
  Matrix b(p, m);
  for (std::size_t k = 0; k < m; ++k) {
    double l = e.eigenvalues[k];
    if (l < -kNegativeEigenTolerance) {
      throw Error(ErrorKind::not_a_correlation_spectrum,
                  "not a correlation-matrix spectrum: retained eigenvalue is negative");
    }
    const double scale = std::sqrt(std::max(l, 0.0));
    for (std::size_t j = 0; j < p; ++j) b(j, k) = e.eigenvectors(j, k) * scale;
  }
  return LoadingMatrix(variable_names, component_labels(m), std::move(b), false);
}

}  // namespace pcakit
