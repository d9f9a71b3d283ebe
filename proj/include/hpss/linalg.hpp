#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hpss/gaussian_rational.hpp"

namespace hpss {

using Vector = std::vector<Scalar>;

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& s);

/// Dense row-major matrix over Q(i). Columns are source coordinates, rows target.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  Vector apply(const Vector& x) const;
  Matrix transposed() const;

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns pivot columns in increasing order.
/// Pivots are only taken among the first `pivot_cols` columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t pivot_cols = static_cast<std::size_t>(-1));
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}, one vector per free column (free entry set to 1).
std::vector<Vector> kernel(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
/// Solves m X = rhs column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);
Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of Q(i)^n held as a reduced row echelon basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  Subspace(std::size_t ambient, const std::vector<Vector>& spanning);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(const Vector& v);
  void insert_all(const Subspace& other);
  /// Residual of v after elimination against the echelon basis; zero iff v is in the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  bool contains(const Subspace& other) const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hpss
