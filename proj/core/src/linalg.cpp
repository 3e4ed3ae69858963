#include "flatdef/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "flatdef/error.hpp"

namespace flatdef {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n);
  v.at(index) = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector scale(const Scalar& c, std::span<const Scalar> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= c;
  return out;
}

void axpy(Vector& y, const Scalar& c, std::span<const Scalar> x) {
  if (y.size() != x.size()) throw DimensionError("vector length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DimensionError("trace of non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a(row, c).is_zero()) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  EchelonBasis b(ambient_dim);
  for (const auto& v : vectors) b.insert(v);
  return b.to_subspace();
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  s.pivots_.resize(ambient_dim);
  std::iota(s.pivots_.begin(), s.pivots_.end(), std::size_t{0});
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.emplace_back(basis_.row(r).begin(), basis_.row(r).end());
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match subspace ambient dimension");
  Vector residual(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar c = residual[pivots_[r]];
    if (!c.is_zero()) axpy(residual, -c, basis_.row(r));
  }
  return is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace span_join(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch in span_join");
  EchelonBasis e(a);
  for (std::size_t r = 0; r < b.dim(); ++r) e.insert(b.basis().row(r));
  return e.to_subspace();
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t row = 0; row < r.rank; ++row) v[r.pivots[row]] = -r.reduced(row, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

EchelonBasis::EchelonBasis(const Subspace& s) : ambient_(s.ambient_dim()) {
  rows_ = s.basis_vectors();
  pivots_ = s.pivots();
}

Vector EchelonBasis::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  Vector residual(v.begin(), v.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = residual[pivots_[r]];
    if (!c.is_zero()) axpy(residual, -c, rows_[r]);
  }
  return residual;
}

Vector EchelonBasis::insert(std::span<const Scalar> v) {
  Vector residual = reduce(v);
  auto lead = std::find_if(residual.begin(), residual.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == residual.end()) return {};
  std::size_t pivot = static_cast<std::size_t>(lead - residual.begin());
  Scalar inv = lead->inverse();
  for (auto& x : residual)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    Scalar c = row[pivot];
    if (!c.is_zero()) axpy(row, -c, residual);
  }
  rows_.push_back(residual);
  pivots_.push_back(pivot);
  return residual;
}

Subspace EchelonBasis::to_subspace() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Subspace s(ambient_);
  s.basis_ = Matrix(rows_.size(), ambient_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::copy(rows_[order[i]].begin(), rows_[order[i]].end(), s.basis_.row(i).begin());
    s.pivots_.push_back(pivots_[order[i]]);
  }
  return s;
}

}  // namespace flatdef

namespace flatdef {

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionError("inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw InvalidInput("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

}  // namespace flatdef
