#include "pcakit/rotation.hpp"

#include <algorithm>
#include <cmath>

#include "pcakit/error.hpp"

namespace pcakit {
namespace {

// Rotates columns a and b of x (and of the accumulated rotation t) by the
// angle that maximizes the pairwise varimax criterion.
void rotate_pair(Matrix& x, Matrix& t, std::size_t a, std::size_t b) {
  const std::size_t p = x.rows();
  double sum_u = 0.0, sum_v = 0.0, sum_uu_vv = 0.0, sum_uv = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    const double xa = x(j, a);
    const double xb = x(j, b);
    const double u = xa * xa - xb * xb;
    const double v = 2.0 * xa * xb;
    sum_u += u;
    sum_v += v;
    sum_uu_vv += u * u - v * v;
    sum_uv += u * v;
  }
  const double n = static_cast<double>(p);
  const double num = 2.0 * sum_uv - 2.0 * sum_u * sum_v / n;
  const double den = sum_uu_vv - (sum_u * sum_u - sum_v * sum_v) / n;
  const double phi = 0.25 * std::atan2(num, den);
  if (phi == 0.0) return;

  const double c = std::cos(phi);
  const double s = std::sin(phi);
  auto apply = [&](Matrix& m) {
    for (std::size_t j = 0; j < m.rows(); ++j) {
      const double ma = m(j, a);
      const double mb = m(j, b);
      m(j, a) = c * ma + s * mb;
      m(j, b) = -s * ma + c * mb;
    }
  };
  apply(x);
  apply(t);
}

}  // namespace

std::vector<std::string> detect_complex_structure(const LoadingMatrix& l, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorKind::invalid_argument, "loading threshold must lie in (0, 1)");
  }
  std::vector<std::string> out;
  for (std::size_t j = 0; j < l.variables(); ++j) {
    int heavy = 0;
    for (std::size_t k = 0; k < l.components(); ++k) {
      if (std::abs(l(j, k)) > threshold) ++heavy;
    }
    if (heavy >= 2) out.push_back(l.variable_names()[j]);
  }
  return out;
}

double varimax_criterion(const Matrix& loadings) {
  const std::size_t p = loadings.rows();
  if (p == 0) return 0.0;
  const double n = static_cast<double>(p);
  double total = 0.0;
  for (std::size_t k = 0; k < loadings.cols(); ++k) {
    double s2 = 0.0;
    double s4 = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      const double b2 = loadings(j, k) * loadings(j, k);
      s2 += b2;
      s4 += b2 * b2;
    }
    total += (n * s4 - s2 * s2) / (n * n);
  }
  return total;
}

double varimax_criterion(const LoadingMatrix& l) { return varimax_criterion(l.values()); }

RotationResult varimax(const LoadingMatrix& l, bool kaiser_normalize,
                       const VarimaxOptions& options) {
  const std::size_t p = l.variables();
  const std::size_t m = l.components();
  if (m < 2) {
    throw Error(ErrorKind::invalid_argument, "varimax needs at least 2 components");
  }

  Matrix x = l.values();
  if (kaiser_normalize) {
    const std::vector<double> h2 = l.communalities();
    for (std::size_t j = 0; j < p; ++j) {
      if (!(h2[j] > 0.0)) {
        throw Error(ErrorKind::degenerate_variable,
                    "degenerate variable '" + l.variable_names()[j] + "' has zero communality");
      }
      const double h = std::sqrt(h2[j]);
      for (std::size_t k = 0; k < m; ++k) x(j, k) /= h;
    }
  }

  Matrix t = Matrix::identity(m);
  std::vector<double> history{varimax_criterion(x)};
  int sweeps = 0;
  bool converged = false;
  while (sweeps < options.max_sweeps) {
    for (std::size_t a = 0; a + 1 < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) rotate_pair(x, t, a, b);
    ++sweeps;
    history.push_back(varimax_criterion(x));
    const double gain = history.back() - history[history.size() - 2];
    if (gain < options.tolerance * std::max(std::abs(history.back()), 1e-12)) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorKind::non_convergence, "varimax did not converge within " +
                                                std::to_string(options.max_sweeps) + " sweeps");
  }

  Matrix rotated = l.values() * t;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t biggest = 0;
    for (std::size_t j = 1; j < p; ++j) {
      if (std::abs(rotated(j, k)) > std::abs(rotated(biggest, k))) biggest = j;
    }
    if (rotated(biggest, k) < 0.0) {
      for (std::size_t j = 0; j < p; ++j) rotated(j, k) = -rotated(j, k);
      for (std::size_t i = 0; i < m; ++i) t(i, k) = -t(i, k);
    }
  }

  return RotationResult{
      .rotated = LoadingMatrix(l.variable_names(), l.component_labels(), std::move(rotated), true),
      .rotation = std::move(t),
      .criterion_history = std::move(history),
      .sweeps = sweeps};
}

}  // namespace pcakit
