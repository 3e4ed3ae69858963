#pragma once

// Brute-force reference computations used to cross-check the library. They
// favour obviousness over speed and only use the table and basic linear
// algebra.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "flatdef/algebra.hpp"
#include "flatdef/linalg.hpp"
#include "flatdef/structure.hpp"

namespace flatdef::oracle {

inline Element product_of(const StructureAlgebra& alg, const std::vector<std::size_t>& idx) {
  Element acc = alg.unit();
  for (auto i : idx) acc = alg.multiply(acc, alg.basis_element(i));
  return acc;
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

/// Span of s_{2m} over every ordered tuple of basis elements, expanded over
/// all (2m)! permutations.
inline Subspace naive_identity_span(const StructureAlgebra& alg, std::size_t m) {
  const std::size_t n = alg.dim();
  const std::size_t k = 2 * m;
  std::vector<Vector> values;
  std::vector<std::size_t> tuple(k, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == k) {
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      Vector total = zero_vector(n);
      do {
        std::vector<std::size_t> word(k);
        for (std::size_t r = 0; r < k; ++r) word[r] = tuple[perm[r]];
        axpy(total, Scalar(permutation_sign(perm)), product_of(alg, word));
      } while (std::next_permutation(perm.begin(), perm.end()));
      values.push_back(total);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      tuple[pos] = i;
      rec(pos + 1);
    }
  };
  if (k > 0) rec(0);
  return Subspace::span(n, values);
}

/// A s A as the span of d_i * s * d_j; correct because A is unital.
inline Subspace naive_ideal(const StructureAlgebra& alg, const Subspace& seed) {
  std::vector<Vector> values;
  for (const auto& s : seed.basis_vectors())
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j)
        values.push_back(alg.multiply(alg.multiply(alg.basis_element(i), s), alg.basis_element(j)));
  return Subspace::span(alg.dim(), values);
}

/// Span of all products of `power` elements of the subspace.
inline Subspace naive_power(const StructureAlgebra& alg, const Subspace& s, std::size_t power) {
  Subspace acc = s;
  for (std::size_t p = 1; p < power; ++p) {
    std::vector<Vector> values;
    for (const auto& a : acc.basis_vectors())
      for (const auto& b : s.basis_vectors()) values.push_back(alg.multiply(a, b));
    acc = Subspace::span(alg.dim(), values);
  }
  return acc;
}

/// Non-increasing block lists with sum of squares equal to n, generated by
/// plain recursion on the largest block.
inline void square_partitions(std::size_t n, std::size_t max_block, std::vector<std::size_t>& prefix,
                              std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t j = std::min(max_block, n); j >= 1; --j) {
    if (j * j > n) continue;
    prefix.push_back(j);
    square_partitions(n - j * j, j, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> square_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  square_partitions(n, n, prefix, out);
  return out;
}

/// Commutative truncated polynomial ring Q[x]/(x^k) on 1, x, ..., x^{k-1}.
inline StructureAlgebra truncated_polynomial(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<Vector> table;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table.push_back(i + j < k ? unit_vector(k, i + j) : zero_vector(k));
  return StructureAlgebra(labels, table, unit_vector(k, 0));
}

/// Exterior algebra on two generators: 1, x, y, xy.
inline StructureAlgebra exterior2() {
  auto v = [](std::size_t i, long c) { return scale(Scalar(c), unit_vector(4, i)); };
  const Vector z = zero_vector(4);
  std::vector<Vector> table = {v(0, 1), v(1, 1), v(2, 1), v(3, 1),  //
                               v(1, 1), z,       v(3, 1), z,        //
                               v(2, 1), v(3, -1), z,      z,        //
                               v(3, 1), z,       z,       z};
  return StructureAlgebra({"1", "x", "y", "xy"}, table, unit_vector(4, 0));
}

/// Invertible n x n matrix with small integer entries (Gaussian integers when
/// `complex` is set).
inline Matrix random_invertible(std::size_t n, std::mt19937_64& rng, bool complex = false) {
  std::uniform_int_distribution<int> dist(-2, 2);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = complex ? Scalar(mpq_class(dist(rng)), mpq_class(dist(rng))) : Scalar(dist(rng));
    if (rank(m) == n) return m;
  }
}

/// Small valid algebras with rational tables.
inline std::vector<std::pair<std::string, StructureAlgebra>> small_corpus() {
  return {
      {"Q", matrix_algebra(1)},
      {"dual numbers", truncated_polynomial(2)},
      {"Q[x]/x^3", truncated_polynomial(3)},
      {"Q+Q", direct_sum({matrix_algebra(1), matrix_algebra(1)})},
      {"UT2", upper_triangular(2)},
      {"M2", matrix_algebra(2)},
      {"exterior", exterior2()},
      {"UT2+Q", direct_sum({upper_triangular(2), matrix_algebra(1)})},
      {"M2+Q", direct_sum({matrix_algebra(2), matrix_algebra(1)})},
      {"Q+dual+Q", direct_sum({matrix_algebra(1), truncated_polynomial(2), matrix_algebra(1)})},
  };
}

/// Random direct sum of known pieces of total dimension <= max_dim, written
/// in a random integer basis.
inline StructureAlgebra random_known_sum(std::mt19937_64& rng, std::size_t max_dim) {
  const std::vector<StructureAlgebra> pieces = {matrix_algebra(1), truncated_polynomial(2), upper_triangular(2),
                                                truncated_polynomial(3), matrix_algebra(2), exterior2()};
  std::vector<StructureAlgebra> chosen;
  std::size_t total = 0;
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  for (int attempts = 0; attempts < 8; ++attempts) {
    const auto& p = pieces[pick(rng)];
    if (total + p.dim() > max_dim) continue;
    chosen.push_back(p);
    total += p.dim();
    if (rng() % 3 == 0) break;
  }
  if (chosen.empty()) chosen.push_back(matrix_algebra(1));
  StructureAlgebra sum = direct_sum(chosen);
  return change_basis(sum, random_invertible(sum.dim(), rng));
}

}  // namespace flatdef::oracle
