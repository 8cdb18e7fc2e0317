#include "pcakit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pcakit/error.hpp"

namespace pcakit {
namespace {

constexpr double kSingularityRatio = 1e-10;

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) sum += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(sum);
}

double frobenius_norm(const Matrix& a) {
  double sum = 0.0;
  for (double v : a.data()) sum += v * v;
  return std::sqrt(sum);
}

// Zeroes a(p,q) with the rotation J chosen so that J^T A J has a zero there.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenSolution eigen_symmetric(const SymmetricMatrix& m, const JacobiOptions& options) {
  const std::size_t n = m.order();
  Matrix a = m.matrix();
  Matrix v = Matrix::identity(n);

  const double threshold = options.tolerance * std::max(1.0, frobenius_norm(a));
  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged) {
    throw Error(ErrorKind::non_convergence,
                "Jacobi eigensolver did not converge within " +
                    std::to_string(options.max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  EigenSolution out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a(src, src);

    double biggest = 0.0;
    for (std::size_t i = 0; i < n; ++i) biggest = std::max(biggest, std::abs(v(i, src)));
    // Entries within rounding of the maximum count as tied; take the first.
    const double cutoff = biggest * (1.0 - 1e-12);
    double sign = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v(i, src)) >= cutoff) {
        sign = v(i, src) < 0.0 ? -1.0 : 1.0;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = sign * v(i, src);
  }
  return out;
}

SymmetricMatrix invert_spd(const SymmetricMatrix& m) {
  const EigenSolution eig = eigen_symmetric(m);
  const std::size_t n = m.order();
  if (n == 0) return SymmetricMatrix(0);
  const double lmax = eig.eigenvalues.front();
  const double lmin = eig.eigenvalues.back();
  if (!(lmax > 0.0) || lmin < kSingularityRatio * lmax) {
    throw Error(ErrorKind::singular_matrix, "singular/near-singular matrix");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += eig.eigenvectors(i, k) * eig.eigenvectors(j, k) / eig.eigenvalues[k];
      }
      inv(i, j) = sum;
      inv(j, i) = sum;
    }
  return SymmetricMatrix(std::move(inv));
}

double log_determinant(const SymmetricMatrix& m) {
  const EigenSolution eig = eigen_symmetric(m);
  double sum = 0.0;
  for (double l : eig.eigenvalues) {
    if (!(l > 0.0)) {
      throw Error(ErrorKind::not_positive_definite, "matrix is not positive definite");
    }
    sum += std::log(l);
  }
  return sum;
}

}  // namespace pcakit
