#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flatdef/linalg.hpp"

namespace flatdef {

/// Coordinates of an algebra element in the algebra's basis.
using Element = Vector;

/// Finite-dimensional algebra given by structure constants:
/// d_i * d_j = sum_l table(i, j)[l] d_l, with an explicit unit vector.
///
/// Construction checks shapes only; use validate() for the algebra axioms.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  /// `table` has dim*dim entries, entry i*dim + j holding d_i * d_j.
  StructureAlgebra(std::vector<std::string> labels, std::vector<Vector> table, Vector unit);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Vector& unit() const noexcept { return unit_; }
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const std::vector<Vector>& table() const noexcept { return table_; }
  Element basis_element(std::size_t i) const { return unit_vector(dim(), i); }

  /// Bilinear extension of the table; throws DimensionError on bad lengths.
  Element multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
  /// Matrix of y -> a*y (column j holds a*d_j).
  Matrix left_regular(std::span<const Scalar> a) const;
  /// Matrix of y -> y*a.
  Matrix right_regular(std::span<const Scalar> a) const;

  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_ && a.unit_ == b.unit_;
  }

 private:
  struct Entry {
    std::size_t index;
    Scalar value;
  };
  void check(std::span<const Scalar> v) const;

  std::vector<std::string> labels_;
  std::vector<Vector> table_;
  std::vector<std::vector<Entry>> sparse_;
  Vector unit_;
};

struct ValidationReport {
  std::vector<std::array<std::size_t, 3>> associativity_failures;
  std::vector<std::size_t> unit_failures;

  bool ok() const { return associativity_failures.empty() && unit_failures.empty(); }
  std::vector<std::string> lines() const;
};

/// Exhaustive check of associativity on basis triples and the unit law.
ValidationReport validate(const StructureAlgebra& alg);

/// Smallest two-sided ideal containing `seed`.
Subspace ideal_closure(const StructureAlgebra& alg, const Subspace& seed);

/// Smallest unital subalgebra containing `generators`.
Subspace subalgebra_closure(const StructureAlgebra& alg, const std::vector<Element>& generators);

struct Quotient {
  StructureAlgebra algebra;
  /// (dim - dim ideal) x dim matrix sending old coordinates to quotient ones.
  Matrix projection;
};

/// A / ideal on the complement basis given by the non-pivot coordinates of
/// the ideal's rref basis. Throws InvalidInput if `ideal` is not a two-sided
/// ideal or contains the unit.
Quotient quotient(const StructureAlgebra& alg, const Subspace& ideal);

/// Re-express `alg` in the basis formed by the columns of `basis` (old
/// coordinates). Throws InvalidInput when `basis` is singular.
StructureAlgebra change_basis(const StructureAlgebra& alg, const Matrix& basis);

/// Full matrix algebra M_k on matrix units e_ij (row-major).
StructureAlgebra matrix_algebra(std::size_t k);
/// Upper-triangular k x k matrices on e_ij, i <= j.
StructureAlgebra upper_triangular(std::size_t k);
/// Block-diagonal direct sum; labels are suffixed with "@<summand>".
StructureAlgebra direct_sum(const std::vector<StructureAlgebra>& parts);

}  // namespace flatdef
