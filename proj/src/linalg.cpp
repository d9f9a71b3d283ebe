#include "hpss/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "hpss/error.hpp"

namespace hpss {

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_zero()) out[i] += b[i];
  }
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_zero()) out[i] -= b[i];
  }
  return out;
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector out(v.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[i] = v[i] * s;
  }
  return out;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  assert(v.size() == rows_);
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector Matrix::apply(const Vector& x) const {
  assert(x.size() == cols_);
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r].add_mul(a, x[c]);
    }
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols_ == b.rows_);
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) out(r, c).add_mul(x, y);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

std::vector<std::size_t> rref(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t lead_row = 0;
  const std::size_t limit = std::min(pivot_cols, m.cols());
  for (std::size_t c = 0; c < limit && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    }
    Scalar inv = Scalar(1) / m(lead_row, c);
    support.clear();
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (m(lead_row, k).is_zero()) continue;
      m(lead_row, k) *= inv;
      support.push_back(k);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Scalar factor = m(r, c);
      for (std::size_t k : support) m(r, k).sub_mul(factor, m(lead_row, k));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (!r(i, f).is_zero()) x[pivots[i]] = -r(i, f);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  assert(rhs.size() == m.rows());
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  assert(rhs.rows() == m.rows());
  Matrix aug(m.rows(), m.cols() + rhs.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) aug(r, m.cols() + c) = rhs(r, c);
  }
  std::vector<std::size_t> pivots = rref(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    for (std::size_t c = m.cols(); c < aug.cols(); ++c)
      if (!aug(r, c).is_zero()) return std::nullopt;
  Matrix x(m.cols(), rhs.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(pivots[i], c) = aug(i, m.cols() + c);
  return x;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  Scalar det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = Scalar(1) / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar factor = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k).sub_mul(factor, m(c, k));
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vector>& spanning) : ambient_(ambient) {
  for (const Vector& v : spanning) insert(v);
}

Vector Subspace::reduce(Vector v) const {
  assert(v.size() == ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& coeff = v[pivots_[i]];
    if (coeff.is_zero()) continue;
    Scalar factor = coeff;
    const Vector& row = rows_[i];
    for (std::size_t k = pivots_[i]; k < ambient_; ++k) {
      if (!row[k].is_zero()) v[k].sub_mul(factor, row[k]);
    }
  }
  return v;
}

bool Subspace::insert(const Vector& v) {
  Vector residual = reduce(v);
  auto lead = std::find_if(residual.begin(), residual.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == residual.end()) return false;
  std::size_t pivot = static_cast<std::size_t>(lead - residual.begin());
  Scalar inv = Scalar(1) / residual[pivot];
  for (std::size_t k = pivot; k < ambient_; ++k) {
    if (!residual[k].is_zero()) residual[k] *= inv;
  }
  for (Vector& row : rows_) {
    if (row[pivot].is_zero()) continue;
    Scalar factor = row[pivot];
    for (std::size_t k = pivot; k < ambient_; ++k) {
      if (!residual[k].is_zero()) row[k].sub_mul(factor, residual[k]);
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(residual));
  return true;
}

void Subspace::insert_all(const Subspace& other) {
  for (const Vector& v : other.basis()) insert(v);
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis().begin(), other.basis().end(),
                     [this](const Vector& v) { return contains(v); });
}

}  // namespace hpss
