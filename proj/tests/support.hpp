#pragma once

// Test-only generators, published table fixtures and independent oracles.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "pcakit/matrix.hpp"
#include "pcakit/stats.hpp"

namespace testsupport {

using pcakit::Matrix;

// ---- published tables ------------------------------------------------------

inline const std::vector<double> kPublishedEigenvalues{3.520, 1.209, 1.112, 0.710,
                                                    0.613, 0.540, 0.216, 0.081};

inline const std::vector<std::string> kEightVariables{"x1", "x2", "x3", "x4",
                                                      "x5", "x7", "x8", "x9"};

inline Matrix published_unrotated_loadings() {
  return Matrix::from_rows({{-0.416, 0.575, 0.302},
                            {0.799, 0.267, -0.386},
                            {0.832, 0.154, 0.123},
                            {0.861, 0.016, 0.080},
                            {0.465, -0.417, 0.514},
                            {0.342, 0.514, 0.685},
                            {0.461, -0.610, 0.129},
                            {0.854, 0.255, -0.317}});
}

inline Matrix published_rotated_loadings() {
  return Matrix::from_rows({{-0.273, -0.564, 0.450},
                            {0.924, 0.028, -0.059},
                            {0.725, 0.307, 0.334},
                            {0.718, 0.419, 0.239},
                            {0.066, 0.732, 0.339},
                            {0.183, 0.053, 0.849},
                            {0.139, 0.758, -0.085},
                            {0.942, 0.087, 0.005}});
}

// Printed component-score equations; row = variable (x1..x5, x7..x9),
// column = PC1..PC3.
inline Matrix printed_score_coefficients() {
  return Matrix::from_rows({{-0.145, -0.513, 0.427},
                            {0.492, 0.025, -0.056},
                            {0.386, 0.279, 0.317},
                            {0.382, 0.381, 0.227},
                            {0.035, 0.666, 0.321},
                            {0.098, 0.048, 0.805},
                            {0.074, 0.689, -0.080},
                            {0.502, 0.079, 0.005}});
}

// ---- generators -----------------------------------------------------------

inline Matrix random_symmetric(std::mt19937_64& rng, std::size_t p, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix m(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = u(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

inline Matrix random_normal(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = g(rng);
  return m;
}

inline std::vector<std::string> names(std::size_t p, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= p; ++j) out.push_back(prefix + std::to_string(j));
  return out;
}

/// Random correlated data with a mix of shared and unique variance.
inline pcakit::DataMatrix random_correlated_data(std::mt19937_64& rng, std::size_t n,
                                                 std::size_t p) {
  const Matrix latent = random_normal(rng, n, 2);
  const Matrix noise = random_normal(rng, n, p);
  const Matrix weights = random_normal(rng, 2, p);
  Matrix x(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j)
      x(i, j) = latent(i, 0) * weights(0, j) + latent(i, 1) * weights(1, j) + noise(i, j);
  return pcakit::DataMatrix(names(p), std::move(x));
}

/// Random p x m loading matrix with every row communality in [0.05, 1).
inline Matrix random_loadings(std::mt19937_64& rng, std::size_t p, std::size_t m) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.05, 0.999);
  Matrix l(p, m);
  for (std::size_t j = 0; j < p; ++j) {
    std::vector<double> dir(m);
    double norm = 0.0;
    for (auto& d : dir) {
      d = g(rng);
      norm += d * d;
    }
    norm = std::sqrt(norm);
    const double radius = std::sqrt(u(rng));
    for (std::size_t k = 0; k < m; ++k) l(j, k) = dir[k] / norm * radius;
  }
  return l;
}

/// n observations of 3 independent latent factors, each measured by three
/// indicators x = 0.8 f + 0.6 e. Indicators 3k..3k+2 belong to factor k.
/// With add_noise, a tenth pure-noise column "noise" is appended.
inline pcakit::DataMatrix three_factor_data(std::uint64_t seed, bool add_noise,
                                            std::size_t n = 200) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  const std::size_t p = add_noise ? 10 : 9;
  Matrix x(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    const double f[3] = {g(rng), g(rng), g(rng)};
    for (std::size_t j = 0; j < 9; ++j) x(i, j) = 0.8 * f[j / 3] + 0.6 * g(rng);
    if (add_noise) x(i, 9) = g(rng);
  }
  std::vector<std::string> labels = names(9, "x");
  if (add_noise) labels.push_back("noise");
  return pcakit::DataMatrix(std::move(labels), std::move(x));
}

/// Weakly, negatively equicorrelated columns x_i = e_i - 0.5 * mean(e).
/// Correlations sit near -0.14, so the matrix is close to the identity, yet
/// every partial correlation exceeds its correlation in magnitude and the
/// population KMO is about 0.26.
inline pcakit::DataMatrix near_identity_data(std::mt19937_64& rng, std::size_t n, std::size_t p) {
  Matrix e = random_normal(rng, n, p);
  Matrix x(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    double mean = 0.0;
    for (std::size_t j = 0; j < p; ++j) mean += e(i, j);
    mean /= static_cast<double>(p);
    for (std::size_t j = 0; j < p; ++j) x(i, j) = e(i, j) - 0.5 * mean;
  }
  return pcakit::DataMatrix(names(p), std::move(x));
}

// ---- oracles --------------------------------------------------------------

/// det(M - t I) for a 3x3 matrix, by cofactor expansion.
inline double char_poly3(const Matrix& m, double t) {
  const double a = m(0, 0) - t, b = m(0, 1), c = m(0, 2);
  const double d = m(1, 0), e = m(1, 1) - t, f = m(1, 2);
  const double g = m(2, 0), h = m(2, 1), i = m(2, 2) - t;
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

/// Roots of the 3x3 characteristic polynomial, bracketed on a fine grid over
/// the Gershgorin interval and refined by bisection. Sorted descending.
inline std::vector<double> eigenvalues3_by_bisection(const Matrix& m) {
  double lo = 1e300, hi = -1e300;
  for (std::size_t i = 0; i < 3; ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) radius += std::abs(m(i, j));
    lo = std::min(lo, m(i, i) - radius);
    hi = std::max(hi, m(i, i) + radius);
  }
  lo -= 1e-6;
  hi += 1e-6;
  std::vector<double> roots;
  const int steps = 200000;
  double prev_t = lo;
  double prev_v = char_poly3(m, lo);
  for (int s = 1; s <= steps; ++s) {
    const double t = lo + (hi - lo) * s / steps;
    const double v = char_poly3(m, t);
    if (v == 0.0) {
      roots.push_back(t);
    } else if ((prev_v < 0.0) != (v < 0.0) && prev_v != 0.0) {
      double a = prev_t, b = t, fa = prev_v;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = char_poly3(m, mid);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_t = t;
    prev_v = v;
  }
  std::sort(roots.rbegin(), roots.rend());
  return roots;
}

/// 3x3 inverse by cofactors.
inline Matrix inverse3_by_cofactors(const Matrix& m) {
  Matrix adj(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  const double det = m(0, 0) * adj(0, 0) + m(0, 1) * adj(1, 0) + m(0, 2) * adj(2, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) adj(i, j) /= det;
  return adj;
}

/// Solves A x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> gauss_solve(Matrix a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
    x[i] = s / a(i, i);
  }
  return x;
}

/// Least-squares residuals of column `target` regressed (with intercept) on
/// the listed predictor columns, via the normal equations.
inline std::vector<double> regression_residuals(const Matrix& x, std::size_t target,
                                                const std::vector<std::size_t>& predictors) {
  const std::size_t n = x.rows();
  const std::size_t k = predictors.size() + 1;
  auto design = [&](std::size_t i, std::size_t c) {
    return c == 0 ? 1.0 : x(i, predictors[c - 1]);
  };
  Matrix xtx(k, k);
  std::vector<double> xty(k, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < k; ++a) {
      xty[a] += design(i, a) * x(i, target);
      for (std::size_t b = 0; b < k; ++b) xtx(a, b) += design(i, a) * design(i, b);
    }
  const std::vector<double> beta = gauss_solve(xtx, xty);
  std::vector<double> resid(n);
  for (std::size_t i = 0; i < n; ++i) {
    double fit = 0.0;
    for (std::size_t a = 0; a < k; ++a) fit += beta[a] * design(i, a);
    resid[i] = x(i, target) - fit;
  }
  return resid;
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

/// Partial correlation of columns i and j given all other columns, by
/// correlating regression residuals.
inline double partial_by_regression(const Matrix& x, std::size_t i, std::size_t j) {
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < x.cols(); ++c)
    if (c != i && c != j) rest.push_back(c);
  return pearson(regression_residuals(x, i, rest), regression_residuals(x, j, rest));
}

/// Varimax criterion as the sum over columns of the population variance of
/// the squared loadings.
inline double varimax_by_variance_of_squares(const Matrix& l) {
  double total = 0.0;
  const double p = static_cast<double>(l.rows());
  for (std::size_t k = 0; k < l.cols(); ++k) {
    double mean = 0.0;
    for (std::size_t j = 0; j < l.rows(); ++j) mean += l(j, k) * l(j, k) / p;
    double var = 0.0;
    for (std::size_t j = 0; j < l.rows(); ++j) {
      const double d = l(j, k) * l(j, k) - mean;
      var += d * d / p;
    }
    total += var;
  }
  return total;
}

/// Row-normalizes a loading matrix to unit communality.
inline Matrix row_normalized(const Matrix& l) {
  Matrix out = l;
  for (std::size_t j = 0; j < l.rows(); ++j) {
    double h2 = 0.0;
    for (std::size_t k = 0; k < l.cols(); ++k) h2 += l(j, k) * l(j, k);
    const double h = std::sqrt(h2);
    for (std::size_t k = 0; k < l.cols(); ++k) out(j, k) /= h;
  }
  return out;
}

/// Best varimax criterion over planar rotations of a p x 2 matrix, by
/// exhaustive search over theta in [0, 90) degrees at the given step.
inline double best_varimax_by_angle_grid(const Matrix& l, double step_degrees = 0.001) {
  const double pi = std::acos(-1.0);
  const int steps = static_cast<int>(std::lround(90.0 / step_degrees));
  double best = -1e300;
  Matrix r(l.rows(), 2);
  for (int s = 0; s < steps; ++s) {
    const double theta = s * step_degrees * pi / 180.0;
    const double c = std::cos(theta), sn = std::sin(theta);
    for (std::size_t j = 0; j < l.rows(); ++j) {
      r(j, 0) = c * l(j, 0) + sn * l(j, 1);
      r(j, 1) = -sn * l(j, 0) + c * l(j, 1);
    }
    best = std::max(best, varimax_by_variance_of_squares(r));
  }
  return best;
}

/// For each true factor (indicator block of 3), the component that the
/// majority of its indicators load highest on. Returns true when every
/// indicator's highest |loading| falls on its own factor's component and the
/// three factors map to three distinct components.
inline bool recovers_three_factors(const Matrix& loadings) {
  if (loadings.cols() != 3) return false;
  std::vector<int> assigned(9);
  for (std::size_t j = 0; j < 9; ++j) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < 3; ++k)
      if (std::abs(loadings(j, k)) > std::abs(loadings(j, best))) best = k;
    assigned[j] = static_cast<int>(best);
  }
  std::vector<int> factor_to_component(3, -1);
  for (std::size_t f = 0; f < 3; ++f) {
    const int c = assigned[3 * f];
    if (assigned[3 * f + 1] != c || assigned[3 * f + 2] != c) return false;
    factor_to_component[f] = c;
  }
  std::sort(factor_to_component.begin(), factor_to_component.end());
  return factor_to_component == std::vector<int>{0, 1, 2};
}

}  // namespace testsupport
