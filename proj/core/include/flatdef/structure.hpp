#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatdef/algebra.hpp"
#include "flatdef/error.hpp"

namespace flatdef {

/// Raised when an internal consistency check of the structure analysis fails.
/// On valid input over Q(i) this cannot happen; it points at a broken table.
class AnalysisError : public Error {
 public:
  using Error::Error;
};

/// Artin-Wedderburn shape over the algebraic closure: block size j -> number
/// of j x j matrix blocks.
class BlockProfile {
 public:
  BlockProfile() = default;
  explicit BlockProfile(std::map<std::size_t, std::size_t> counts);
  static BlockProfile from_blocks(const std::vector<std::size_t>& sizes);
  /// Parses "1^a 2^b ..."; a bare "j" means "j^1".
  static BlockProfile parse(std::string_view text);

  const std::map<std::size_t, std::size_t>& counts() const noexcept { return counts_; }
  std::size_t count(std::size_t j) const;
  /// sum_j counts[j] * j^2
  std::size_t dimension() const;
  std::size_t max_block() const;
  /// Block sizes in non-increasing order, with multiplicity.
  std::vector<std::size_t> blocks() const;

  /// "1^a 2^b", zero counts omitted.
  std::string to_string() const;

  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
  /// Lexicographic on blocks().
  friend std::strong_ordering operator<=>(const BlockProfile& a, const BlockProfile& b);

 private:
  std::map<std::size_t, std::size_t> counts_;
};

/// Dimensions of the standard-identity ideal filtration.
struct FiltrationReport {
  /// dims[m] = dim I'_m for m = 0..floor(sqrt(n)), with I'_0 the whole algebra.
  std::vector<std::size_t> dims;
  /// layer_dims[j-1] = dims[j-1] - dims[j], the dimension of the j-blocks.
  std::vector<std::size_t> layer_dims;
};

struct ProfileResult {
  BlockProfile profile;
  FiltrationReport filtration;  // of the semisimplification
  std::size_t radical_dim = 0;
};

/// G[i][j] = trace(L_{d_i} L_{d_j}).
Matrix trace_gram(const StructureAlgebra& alg);

/// Jacobson radical as the kernel of the trace form. Throws AnalysisError if
/// the kernel is not a nilpotent two-sided ideal.
Subspace radical(const StructureAlgebra& alg);
bool is_semisimple(const StructureAlgebra& alg);

/// Span of s_{2m}(d_{i1}, ..., d_{i2m}) over strictly increasing basis
/// tuples. Zero when 2m > dim. Requires dim <= 64.
Subspace identity_span(const StructureAlgebra& alg, std::size_t m);
/// Two-sided ideal generated by identity_span(alg, m).
Subspace identity_ideal(const StructureAlgebra& alg, std::size_t m);

/// Block profile of alg / radical(alg), read off the identity filtration.
ProfileResult block_profile(const StructureAlgebra& alg);

/// All profiles of dimension n with blocks no larger than max_block, ordered
/// lexicographically by their non-increasing block lists.
std::vector<BlockProfile> enumerate_semisimple_types(std::size_t n, std::optional<std::size_t> max_block = {});

/// Direct sum of full matrix algebras with the given profile.
StructureAlgebra block_model(const BlockProfile& profile);

}  // namespace flatdef
