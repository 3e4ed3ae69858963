#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flatdef/algebra.hpp"
#include "flatdef/error.hpp"
#include "flatdef/ncpoly.hpp"

namespace flatdef {

/// Finitely presented unital algebra: generators, relations constant in t,
/// and the dimension the quotient is expected to have.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<NcPoly> relations;
  std::size_t expected_dim = 1;
  std::optional<std::size_t> max_degree;

  /// Explicit cap, or 2 * (longest relation) + 2.
  std::size_t effective_max_degree() const;
  /// Throws InvalidInput on zero relations, foreign alphabets, t-dependence
  /// or expected_dim == 0.
  void check() const;
};

class BuildError : public Error {
 public:
  enum class Kind { NoStabilization, DimensionMismatch, NotClosed };

  BuildError(Kind kind, std::string what, std::optional<std::size_t> found_dim = std::nullopt)
      : Error(std::move(what)), kind_(kind), found_dim_(found_dim) {}

  Kind kind() const noexcept { return kind_; }
  std::optional<std::size_t> found_dim() const noexcept { return found_dim_; }

 private:
  Kind kind_;
  std::optional<std::size_t> found_dim_;
};

const char* to_string(BuildError::Kind kind);

namespace detail {
struct RewriteRules;
}

/// Normal-form map for words up to the accepted truncation degree.
class WordReducer {
 public:
  WordReducer(std::shared_ptr<const detail::RewriteRules> rules, std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t dim() const;

  /// Coordinates of the class of `w`; throws InvalidInput when w is longer
  /// than the accepted degree.
  Element evaluate_word(const Word& w) const;
  /// Coordinates of a t-constant polynomial whose words fit the degree.
  Element evaluate(const NcPoly& p) const;

 private:
  std::shared_ptr<const detail::RewriteRules> rules_;
  std::size_t degree_;
};

struct BuildResult {
  StructureAlgebra algebra;
  std::vector<Word> word_basis;
  WordReducer reducer;
  std::size_t degree;  // accepted truncation degree D
};

/// Build the quotient algebra by linear algebra on the graded pieces of the
/// free algebra, truncated at increasing degree D.
///
/// The first D that is at least the longest relation length and for which
/// (a) the image of words of length < D has stopped shrinking, (b) every word
/// of length D reduces to shorter words and (c) the induced table is
/// associative, unital and reproduces the word reduction, determines the
/// algebra. Those conditions certify the dimension; it is then compared
/// against `expected_dim`.
BuildResult build(const Presentation& p);

}  // namespace flatdef
