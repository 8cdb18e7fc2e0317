#pragma once

#include <vector>

#include "pcakit/matrix.hpp"

namespace pcakit {

struct EigenSolution {
  /// Sorted descending.
  std::vector<double> eigenvalues;
  /// Column k is the unit eigenvector paired with eigenvalues[k].
  Matrix eigenvectors;
};

struct JacobiOptions {
  /// Converged once the off-diagonal Frobenius norm drops below
  /// tolerance * max(1, ||A||_F).
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Cyclic Jacobi eigendecomposition.
///
/// Output is deterministic: eigenvalues descend with ties kept in the order
/// the diagonal produced them, and each eigenvector is flipped so its
/// largest-magnitude entry is positive (the first one wins a magnitude tie).
/// Throws ErrorKind::non_convergence when the sweep cap is hit.
EigenSolution eigen_symmetric(const SymmetricMatrix& m, const JacobiOptions& options = {});

/// Inverse of a symmetric positive definite matrix, formed as V diag(1/l) V^T.
/// Throws ErrorKind::singular_matrix when l_min < 1e-10 * l_max.
SymmetricMatrix invert_spd(const SymmetricMatrix& m);

/// Sum of log-eigenvalues. Throws ErrorKind::not_positive_definite if any
/// eigenvalue is <= 0.
double log_determinant(const SymmetricMatrix& m);

}  // namespace pcakit
