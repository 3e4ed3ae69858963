#include "flatdef/structure.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace flatdef {

BlockProfile::BlockProfile(std::map<std::size_t, std::size_t> counts) {
  for (auto [j, c] : counts) {
    if (j == 0) throw InvalidInput("block size must be positive");
    if (c != 0) counts_[j] = c;
  }
}

BlockProfile BlockProfile::from_blocks(const std::vector<std::size_t>& sizes) {
  std::map<std::size_t, std::size_t> counts;
  for (auto s : sizes) ++counts[s];
  return BlockProfile(std::move(counts));
}

BlockProfile BlockProfile::parse(std::string_view text) {
  std::map<std::size_t, std::size_t> counts;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> std::size_t {
    std::size_t start = pos, value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
    if (start == pos) throw ParseError("expected block size", pos);
    return value;
  };
  skip();
  while (pos < text.size()) {
    std::size_t j = number();
    std::size_t c = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      c = number();
    }
    if (j == 0) throw ParseError("block size must be positive", pos);
    counts[j] += c;
    skip();
  }
  return BlockProfile(std::move(counts));
}

std::size_t BlockProfile::count(std::size_t j) const {
  auto it = counts_.find(j);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t BlockProfile::dimension() const {
  std::size_t d = 0;
  for (auto [j, c] : counts_) d += c * j * j;
  return d;
}

std::size_t BlockProfile::max_block() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

std::vector<std::size_t> BlockProfile::blocks() const {
  std::vector<std::size_t> out;
  for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) out.insert(out.end(), it->second, it->first);
  return out;
}

std::string BlockProfile::to_string() const {
  std::string out;
  for (auto [j, c] : counts_) {
    if (!out.empty()) out += " ";
    out += std::to_string(j) + "^" + std::to_string(c);
  }
  return out;
}

std::strong_ordering operator<=>(const BlockProfile& a, const BlockProfile& b) { return a.blocks() <=> b.blocks(); }

Matrix trace_gram(const StructureAlgebra& alg) {
  const std::size_t n = alg.dim();
  // trace(L_{d_l}) = sum_k c[l][k][k]; trace(L_a L_b) = trace(L_{ab}).
  Vector tau(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) tau[l] += alg.product(l, k)[k];
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (!alg.product(i, j)[l].is_zero() && !tau[l].is_zero()) g(i, j) += alg.product(i, j)[l] * tau[l];
  return g;
}

namespace {

bool is_nilpotent(const StructureAlgebra& alg, const Subspace& ideal) {
  auto base = ideal.basis_vectors();
  Subspace power = ideal;
  while (power.dim() > 0) {
    std::vector<Vector> products;
    for (const auto& a : power.basis_vectors())
      for (const auto& b : base) products.push_back(alg.multiply(a, b));
    Subspace next = Subspace::span(alg.dim(), products);
    if (next.dim() >= power.dim()) return false;
    power = std::move(next);
  }
  return true;
}

}  // namespace

Subspace radical(const StructureAlgebra& alg) {
  Subspace j = kernel(trace_gram(alg));
  if (!(ideal_closure(alg, j) == j)) throw AnalysisError("trace-form kernel is not an ideal; invalid structure table");
  if (!is_nilpotent(alg, j)) throw AnalysisError("trace-form kernel is not nilpotent; invalid structure table");
  return j;
}

bool is_semisimple(const StructureAlgebra& alg) { return radical(alg).dim() == 0; }

Subspace identity_span(const StructureAlgebra& alg, std::size_t m) {
  const std::size_t n = alg.dim();
  if (m == 0) throw InvalidInput("identity_span requires m >= 1");
  if (2 * m > n) return Subspace(n);
  if (n > 64) throw InvalidInput("identity_span supports algebras of dimension at most 64");

  // layer[mask] = s_k(d_{i1}, ..., d_{ik}) for the increasing index set
  // encoded by mask; zero values are not stored.
  using Layer = std::unordered_map<std::uint64_t, Element>;
  Layer layer;
  for (std::size_t i = 0; i < n; ++i) layer.emplace(std::uint64_t{1} << i, alg.basis_element(i));

  for (std::size_t k = 2; k <= 2 * m; ++k) {
    Layer next;
    // Zero values are dropped from `layer`, so k-subsets are enumerated
    // directly rather than by extending stored (k-1)-subsets.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (auto i : idx) mask |= std::uint64_t{1} << i;
      Element acc(n);
      bool any = false;
      for (std::size_t p = 0; p < k; ++p) {
        auto it = layer.find(mask & ~(std::uint64_t{1} << idx[p]));
        if (it == layer.end()) continue;
        Element term = alg.multiply(alg.basis_element(idx[p]), it->second);
        if (p % 2 == 0) {
          axpy(acc, 1, term);
        } else {
          axpy(acc, -1, term);
        }
        any = true;
      }
      if (any && !is_zero(acc)) next.emplace(mask, std::move(acc));
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    layer = std::move(next);
  }

  // Deterministic assembly order.
  std::vector<std::uint64_t> masks;
  masks.reserve(layer.size());
  for (const auto& [mask, v] : layer) masks.push_back(mask);
  std::sort(masks.begin(), masks.end());
  EchelonBasis basis(n);
  for (auto mask : masks) {
    basis.insert(layer.at(mask));
    if (basis.dim() == n) break;
  }
  return basis.to_subspace();
}

Subspace identity_ideal(const StructureAlgebra& alg, std::size_t m) { return ideal_closure(alg, identity_span(alg, m)); }

ProfileResult block_profile(const StructureAlgebra& alg) {
  ProfileResult out;
  Subspace rad = radical(alg);
  out.radical_dim = rad.dim();
  StructureAlgebra semisimple = rad.dim() == 0 ? alg : quotient(alg, rad).algebra;

  const std::size_t n = semisimple.dim();
  const auto top = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)) + 1e-9);
  auto& dims = out.filtration.dims;
  dims.push_back(n);
  for (std::size_t m = 1; m <= top; ++m) {
    // I'_m contains I'_{m+1}; once it vanishes the rest of the filtration does.
    dims.push_back(dims.back() == 0 ? 0 : identity_ideal(semisimple, m).dim());
  }
  if (dims.back() != 0) throw AnalysisError("identity filtration does not vanish at floor(sqrt(dim))");

  std::map<std::size_t, std::size_t> counts;
  for (std::size_t j = 1; j <= top; ++j) {
    if (dims[j] > dims[j - 1]) throw AnalysisError("identity filtration is not decreasing");
    std::size_t layer = dims[j - 1] - dims[j];
    out.filtration.layer_dims.push_back(layer);
    if (layer % (j * j) != 0)
      throw AnalysisError("NonIntegralLayer: layer " + std::to_string(j) + " has dimension " + std::to_string(layer) +
                          ", not divisible by " + std::to_string(j * j));
    counts[j] = layer / (j * j);
  }
  out.profile = BlockProfile(std::move(counts));
  return out;
}

std::vector<BlockProfile> enumerate_semisimple_types(std::size_t n, std::optional<std::size_t> max_block) {
  std::vector<BlockProfile> out;
  if (n == 0) return out;
  std::size_t cap = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)) + 1e-9);
  if (max_block) cap = std::min(cap, *max_block);
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t largest) {
    if (remaining == 0) {
      out.push_back(BlockProfile::from_blocks(current));
      return;
    }
    for (std::size_t j = std::min(largest, cap); j >= 1; --j) {
      if (j * j > remaining) continue;
      current.push_back(j);
      rec(remaining - j * j, j);
      current.pop_back();
    }
  };
  rec(n, cap);
  std::sort(out.begin(), out.end());
  return out;
}

StructureAlgebra block_model(const BlockProfile& profile) {
  std::vector<StructureAlgebra> parts;
  for (auto j : profile.blocks()) parts.push_back(matrix_algebra(j));
  if (parts.empty()) throw InvalidInput("empty block profile");
  return direct_sum(parts);
}

}  // namespace flatdef
