#include "flatdef/algebra.hpp"

#include <deque>

#include "flatdef/error.hpp"

namespace flatdef {

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels, std::vector<Vector> table, Vector unit)
    : labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidInput("algebra must have positive dimension");
  if (table_.size() != n * n) throw DimensionError("structure table must have dim*dim entries");
  if (unit_.size() != n) throw DimensionError("unit vector length must equal dim");
  sparse_.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    if (table_[k].size() != n) throw DimensionError("structure table entry length must equal dim");
    for (std::size_t l = 0; l < n; ++l)
      if (!table_[k][l].is_zero()) sparse_[k].push_back({l, table_[k][l]});
  }
}

void StructureAlgebra::check(std::span<const Scalar> v) const {
  if (v.size() != dim()) throw DimensionError("element length does not match algebra dimension");
}

Element StructureAlgebra::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  check(a);
  check(b);
  const std::size_t n = dim();
  Element out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const auto& entries = sparse_[i * n + j];
      if (entries.empty()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& e : entries) out[e.index] += c * e.value;
    }
  }
  return out;
}

Matrix StructureAlgebra::left_regular(std::span<const Scalar> a) const {
  check(a);
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Element col = multiply(a, basis_element(j));
    for (std::size_t r = 0; r < n; ++r) m(r, j) = std::move(col[r]);
  }
  return m;
}

Matrix StructureAlgebra::right_regular(std::span<const Scalar> a) const {
  check(a);
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Element col = multiply(basis_element(j), a);
    for (std::size_t r = 0; r < n; ++r) m(r, j) = std::move(col[r]);
  }
  return m;
}

std::vector<std::string> ValidationReport::lines() const {
  std::vector<std::string> out;
  for (const auto& [i, j, k] : associativity_failures)
    out.push_back("associativity fails on basis triple (" + std::to_string(i) + ", " + std::to_string(j) +
                  ", " + std::to_string(k) + ")");
  for (auto j : unit_failures) out.push_back("unit law fails on basis element " + std::to_string(j));
  return out;
}

ValidationReport validate(const StructureAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& ij = alg.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Element left = alg.multiply(ij, alg.basis_element(k));
        Element right = alg.multiply(alg.basis_element(i), alg.product(j, k));
        if (left != right) report.associativity_failures.push_back({i, j, k});
      }
    }
  for (std::size_t j = 0; j < n; ++j) {
    Element d = alg.basis_element(j);
    if (alg.multiply(alg.unit(), d) != d || alg.multiply(d, alg.unit()) != d) report.unit_failures.push_back(j);
  }
  return report;
}

Subspace ideal_closure(const StructureAlgebra& alg, const Subspace& seed) {
  if (seed.ambient_dim() != alg.dim()) throw DimensionError("seed ambient dimension does not match algebra");
  EchelonBasis basis(alg.dim());
  std::deque<Vector> pending;
  for (auto& v : seed.basis_vectors())
    if (auto row = basis.insert(v); !row.empty()) pending.push_back(std::move(row));
  while (!pending.empty()) {
    Vector v = std::move(pending.front());
    pending.pop_front();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      Element d = alg.basis_element(i);
      for (auto&& p : {alg.multiply(d, v), alg.multiply(v, d)})
        if (auto row = basis.insert(p); !row.empty()) pending.push_back(std::move(row));
    }
  }
  return basis.to_subspace();
}

Subspace subalgebra_closure(const StructureAlgebra& alg, const std::vector<Element>& generators) {
  EchelonBasis basis(alg.dim());
  std::deque<Vector> pending;
  if (auto row = basis.insert(alg.unit()); !row.empty()) pending.push_back(std::move(row));
  for (const auto& g : generators)
    if (auto row = basis.insert(g); !row.empty()) pending.push_back(std::move(row));
  // Every word in the generators is reached by right-multiplying by one
  // generator at a time, starting from the unit.
  while (!pending.empty()) {
    Vector v = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : generators)
      if (auto row = basis.insert(alg.multiply(v, g)); !row.empty()) pending.push_back(std::move(row));
  }
  return basis.to_subspace();
}

Quotient quotient(const StructureAlgebra& alg, const Subspace& ideal) {
  const std::size_t n = alg.dim();
  if (ideal.ambient_dim() != n) throw DimensionError("ideal ambient dimension does not match algebra");
  if (!(ideal_closure(alg, ideal) == ideal)) throw InvalidInput("subspace is not a two-sided ideal");
  if (ideal.contains(alg.unit())) throw InvalidInput("ideal contains the unit; quotient would be the zero ring");

  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) keep.push_back(c);

  // Reduce v modulo the ideal (clearing pivot coordinates), then read off
  // the complement coordinates.
  Matrix proj(keep.size(), n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector v = unit_vector(n, c);
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      Scalar f = v[ideal.pivots()[r]];
      if (!f.is_zero()) axpy(v, -f, ideal.basis().row(r));
    }
    for (std::size_t k = 0; k < keep.size(); ++k) proj(k, c) = v[keep[k]];
  }

  const std::size_t m = keep.size();
  std::vector<std::string> labels;
  for (auto c : keep) labels.push_back(alg.labels()[c]);
  std::vector<Vector> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = proj.apply(alg.product(keep[a], keep[b]));
  return {StructureAlgebra(std::move(labels), std::move(table), proj.apply(alg.unit())), std::move(proj)};
}

StructureAlgebra change_basis(const StructureAlgebra& alg, const Matrix& basis) {
  const std::size_t n = alg.dim();
  if (basis.rows() != n || basis.cols() != n) throw DimensionError("basis matrix must be dim x dim");
  Matrix inv = inverse(basis);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(basis.column(i));
  std::vector<Vector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = inv.apply(alg.multiply(cols[i], cols[j]));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  return StructureAlgebra(std::move(labels), std::move(table), inv.apply(alg.unit()));
}

namespace {

std::string unit_label(std::size_t k, std::size_t i, std::size_t j) {
  if (k < 10) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
  return "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

StructureAlgebra matrix_algebra(std::size_t k) {
  if (k == 0) throw InvalidInput("matrix algebra size must be positive");
  const std::size_t n = k * k;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) labels.push_back(unit_label(k, i, j));
  std::vector<Vector> table(n * n, Vector(n));
  // e_ij * e_jl = e_il
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) table[(i * k + j) * n + (j * k + l)][i * k + l] = 1;
  Vector unit(n);
  for (std::size_t i = 0; i < k; ++i) unit[i * k + i] = 1;
  return StructureAlgebra(std::move(labels), std::move(table), std::move(unit));
}

StructureAlgebra upper_triangular(std::size_t k) {
  if (k == 0) throw InvalidInput("matrix size must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) units.emplace_back(i, j);
  const std::size_t n = units.size();
  auto index_of = [&](std::size_t i, std::size_t j) {
    for (std::size_t a = 0; a < n; ++a)
      if (units[a] == std::pair{i, j}) return a;
    return n;
  };
  std::vector<std::string> labels;
  for (auto [i, j] : units) labels.push_back(unit_label(k, i, j));
  std::vector<Vector> table(n * n, Vector(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (units[a].second == units[b].first) table[a * n + b][index_of(units[a].first, units[b].second)] = 1;
  Vector unit(n);
  for (std::size_t i = 0; i < k; ++i) unit[index_of(i, i)] = 1;
  return StructureAlgebra(std::move(labels), std::move(table), std::move(unit));
}

StructureAlgebra direct_sum(const std::vector<StructureAlgebra>& parts) {
  if (parts.empty()) throw InvalidInput("direct sum of no algebras");
  std::size_t n = 0;
  for (const auto& p : parts) n += p.dim();
  std::vector<std::string> labels;
  std::vector<Vector> table(n * n, Vector(n));
  Vector unit(n);
  std::size_t offset = 0;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const auto& p = parts[s];
    for (const auto& l : p.labels()) labels.push_back(parts.size() == 1 ? l : l + "@" + std::to_string(s));
    for (std::size_t i = 0; i < p.dim(); ++i) {
      unit[offset + i] = p.unit()[i];
      for (std::size_t j = 0; j < p.dim(); ++j)
        for (std::size_t l = 0; l < p.dim(); ++l) table[(offset + i) * n + offset + j][offset + l] = p.product(i, j)[l];
    }
    offset += p.dim();
  }
  return StructureAlgebra(std::move(labels), std::move(table), std::move(unit));
}

}  // namespace flatdef
