#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flatdef/scalar.hpp"

namespace flatdef {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& c, std::span<const Scalar> v);
/// y += c * x
void axpy(Vector& y, const Scalar& c, std::span<const Scalar> x);

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Scalar trace() const;
  Vector apply(std::span<const Scalar> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A linear subspace of Q(i)^n stored as its canonical rref basis.
///
/// Two subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  /// True iff every basis vector of `other` lies in this subspace.
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  friend class EchelonBasis;
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing both; throws DimensionError on mismatch.
Subspace span_join(const Subspace& a, const Subspace& b);
Subspace kernel(const Matrix& m);

/// Incrementally maintained fully reduced echelon basis.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  explicit EchelonBasis(const Subspace& s);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }

  /// Residual of v after eliminating every pivot coordinate.
  Vector reduce(std::span<const Scalar> v) const;
  /// Adds v to the span. Returns the new normalized basis row, or an empty
  /// vector when v was already contained.
  Vector insert(std::span<const Scalar> v);
  bool contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

  Subspace to_subspace() const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace flatdef

namespace flatdef {

/// Inverse of a square matrix; throws InvalidInput when singular.
Matrix inverse(const Matrix& m);

}  // namespace flatdef
