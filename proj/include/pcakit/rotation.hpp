#pragma once

#include <string>
#include <vector>

#include "pcakit/extraction.hpp"
#include "pcakit/matrix.hpp"

namespace pcakit {

struct VarimaxOptions {
  /// A sweep whose criterion gain is below tolerance * max(|criterion|, 1e-12)
  /// ends the iteration.
  double tolerance = 1e-7;
  int max_sweeps = 100;
};

struct RotationResult {
  LoadingMatrix rotated;
  /// m x m orthogonal; rotated = unrotated * rotation.
  Matrix rotation;
  /// Criterion of the matrix being optimized (row-normalized when Kaiser
  /// normalization is on): entry 0 is the starting value, then one entry per
  /// sweep.
  std::vector<double> criterion_history;
  int sweeps = 0;
};

/// Variables with |loading| > threshold on at least two components, in
/// variable order.
std::vector<std::string> detect_complex_structure(const LoadingMatrix& l, double threshold);

/// Raw varimax value sum_k [p sum_j b_jk^4 - (sum_j b_jk^2)^2] / p^2.
double varimax_criterion(const Matrix& loadings);
double varimax_criterion(const LoadingMatrix& l);

/// Orthogonal varimax rotation by cyclic pairwise planar rotations, each at
/// the closed-form optimal angle.
///
/// With kaiser_normalize, rows are scaled to unit communality before the
/// optimization and scaled back afterwards. Columns keep their input order;
/// each column is flipped so its largest-magnitude loading is positive.
///
/// Throws ErrorKind::invalid_argument for m < 2, ErrorKind::degenerate_variable
/// for a zero-communality row under normalization and
/// ErrorKind::non_convergence past the sweep cap.
RotationResult varimax(const LoadingMatrix& l, bool kaiser_normalize = true,
                       const VarimaxOptions& options = {});

}  // namespace pcakit
