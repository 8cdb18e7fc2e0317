#include "pcakit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "pcakit/error.hpp"

namespace pcakit {
namespace {

struct ColumnMoments {
  double mean;
  double sum_sq;  // centered sum of squares
};

ColumnMoments moments(const Matrix& x, std::size_t j) {
  const std::size_t n = x.rows();
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += x(i, j);
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x(i, j) - mean;
    ss += d * d;
  }
  return {mean, ss};
}

void require_nonconstant(const DataMatrix& d) {
  for (std::size_t j = 0; j < d.variables(); ++j) {
    const double first = d(0, j);
    bool constant = true;
    for (std::size_t i = 1; i < d.observations() && constant; ++i) constant = d(i, j) == first;
    if (constant) {
      throw Error(ErrorKind::constant_variable,
                  "constant variable '" + d.variable_names()[j] + "'");
    }
  }
}

// Lower regularized gamma P(a, x) by its power series; good for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma Q(a, x) by Lentz's continued fraction; x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

DataMatrix::DataMatrix(std::vector<std::string> variable_names, Matrix rows)
    : names_(std::move(variable_names)), rows_(std::move(rows)) {
  if (rows_.rows() < 2) {
    throw Error(ErrorKind::insufficient_observations, "need at least 2 observations");
  }
  if (rows_.cols() < 2) {
    throw Error(ErrorKind::invalid_argument, "need at least 2 variables");
  }
  if (names_.size() != rows_.cols()) {
    throw Error(ErrorKind::invalid_argument, "variable name count does not match columns");
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) {
      throw Error(ErrorKind::invalid_argument, "duplicate variable name '" + name + "'");
    }
  }
  for (std::size_t i = 0; i < rows_.rows(); ++i)
    for (std::size_t j = 0; j < rows_.cols(); ++j)
      if (!std::isfinite(rows_(i, j))) {
        throw Error(ErrorKind::invalid_argument,
                    "non-finite value in variable '" + names_[j] + "'");
      }
}

DataMatrix DataMatrix::select(const std::vector<std::size_t>& columns) const {
  Matrix out(rows_.rows(), columns.size());
  std::vector<std::string> names;
  names.reserve(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] >= variables()) {
      throw Error(ErrorKind::invalid_argument, "column index out of range");
    }
    names.push_back(names_[columns[c]]);
    for (std::size_t i = 0; i < rows_.rows(); ++i) out(i, c) = rows_(i, columns[c]);
  }
  return DataMatrix(std::move(names), std::move(out));
}

CorrelationMatrix::CorrelationMatrix(SymmetricMatrix base, std::vector<std::string> variable_names)
    : base_(std::move(base)), names_(std::move(variable_names)) {
  if (names_.size() != base_.order()) {
    throw Error(ErrorKind::invalid_argument, "variable name count does not match matrix order");
  }
  for (std::size_t i = 0; i < base_.order(); ++i) {
    if (base_(i, i) != 1.0) {
      throw Error(ErrorKind::invalid_argument, "correlation diagonal must be exactly 1");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (base_(i, j) < -1.0 || base_(i, j) > 1.0) {
        throw Error(ErrorKind::invalid_argument, "correlation outside [-1, 1]");
      }
  }
}

CorrelationMatrix CorrelationMatrix::select(const std::vector<std::size_t>& indices) const {
  std::vector<std::string> names;
  for (std::size_t k : indices) names.push_back(names_.at(k));
  return CorrelationMatrix(base_.submatrix(indices), std::move(names));
}

DataMatrix standardize(const DataMatrix& d) {
  require_nonconstant(d);
  const Matrix& x = d.values();
  const double dof = static_cast<double>(d.observations() - 1);
  Matrix z(x.rows(), x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    const ColumnMoments mj = moments(x, j);
    const double sd = std::sqrt(mj.sum_sq / dof);
    for (std::size_t i = 0; i < x.rows(); ++i) z(i, j) = (x(i, j) - mj.mean) / sd;
  }
  return DataMatrix(d.variable_names(), std::move(z));
}

CorrelationMatrix correlation_matrix(const DataMatrix& d) {
  require_nonconstant(d);
  const Matrix& x = d.values();
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();

  Matrix centered(n, p);
  std::vector<double> ss(p);
  for (std::size_t j = 0; j < p; ++j) {
    const ColumnMoments mj = moments(x, j);
    ss[j] = mj.sum_sq;
    for (std::size_t i = 0; i < n; ++i) centered(i, j) = x(i, j) - mj.mean;
  }

  SymmetricMatrix r(p);
  for (std::size_t a = 0; a < p; ++a) {
    r.set(a, a, 1.0);
    for (std::size_t b = 0; b < a; ++b) {
      double sxy = 0.0;
      for (std::size_t i = 0; i < n; ++i) sxy += centered(i, a) * centered(i, b);
      const double value = sxy / std::sqrt(ss[a] * ss[b]);
      r.set(a, b, std::clamp(value, -1.0, 1.0));
    }
  }
  return CorrelationMatrix(std::move(r), d.variable_names());
}

double chi_square_sf(double stat, int df) {
  if (df <= 0) {
    throw Error(ErrorKind::invalid_argument, "degrees of freedom must be positive");
  }
  if (!(stat >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, "chi-square statistic must be nonnegative");
  }
  if (stat == 0.0) return 1.0;
  if (std::isinf(stat)) return 0.0;
  const double a = 0.5 * df;
  const double x = 0.5 * stat;
  const double q = x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_continued_fraction(a, x);
  return std::clamp(q, 0.0, 1.0);
}

}  // namespace pcakit
