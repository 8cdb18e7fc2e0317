#include "pcakit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pcakit/error.hpp"

namespace pcakit {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw Error(ErrorKind::invalid_argument, "ragged matrix rows");
    }
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * c);
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::invalid_argument, "matrix product shape mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::invalid_argument, "matrix shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

SymmetricMatrix::SymmetricMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw Error(ErrorKind::invalid_argument, "symmetric matrix must be square");
  }
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (!std::isfinite(m_(i, j)) || !std::isfinite(m_(j, i))) {
        throw Error(ErrorKind::invalid_argument, "matrix has non-finite entries");
      }
      if (m_(i, j) != m_(j, i)) {
        throw Error(ErrorKind::invalid_argument,
                    "matrix is not symmetric at (" + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
      }
    }
}

SymmetricMatrix SymmetricMatrix::symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::invalid_argument, "symmetric matrix must be square");
  }
  Matrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = i == j ? m(i, i) : 0.5 * (m(i, j) + m(j, i));
      s(i, j) = v;
      s(j, i) = v;
    }
  return SymmetricMatrix(std::move(s));
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  return SymmetricMatrix(Matrix::identity(n));
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::invalid_argument, "matrix entries must be finite");
  }
  m_(i, j) = value;
  m_(j, i) = value;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order(); ++i) t += m_(i, i);
  return t;
}

SymmetricMatrix SymmetricMatrix::submatrix(std::span<const std::size_t> indices) const {
  SymmetricMatrix out(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      if (indices[a] >= order() || indices[b] >= order()) {
        throw Error(ErrorKind::invalid_argument, "submatrix index out of range");
      }
      out.set(a, b, m_(indices[a], indices[b]));
    }
  return out;
}

}  // namespace pcakit
