#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatdef/algebra.hpp"
#include "flatdef/error.hpp"
#include "flatdef/ncpoly.hpp"
#include "flatdef/structure.hpp"

namespace flatdef {

/// Linear combinations of products of k slot variables.
struct WordFamily {
  std::vector<std::string> slots;
  std::vector<NcPoly> words;
  /// Set for tower families, which carry a certified bound.
  std::optional<std::size_t> tower_depth;

  std::size_t arity() const noexcept { return slots.size(); }
  /// Throws InvalidInput for an empty family, a foreign alphabet or a
  /// t-dependent word.
  void check() const;
  std::vector<std::string> printed() const;
};

/// Dimension of the span of the family evaluated at `args`.
std::size_t family_span_dim(const StructureAlgebra& alg, const WordFamily& fam, const std::vector<Element>& args);

/// {x^i : 0 <= i <= depth} followed by {y x^i : 0 <= i <= depth}.
WordFamily tower_family(std::size_t depth);

/// sum_j counts[j] * min(2j, j^2): no tower family spans more than this in
/// the semisimple algebra with the given profile, whatever the arguments.
std::size_t tower_bound(const BlockProfile& profile);

/// Best span dimension found over `trials` seeded pseudo-random argument
/// tuples in block_model(profile). Entries are integers in [-9, 9]; trial k
/// depends only on (seed, k).
std::size_t sampled_lower_bound(const BlockProfile& profile, const WordFamily& fam, std::size_t trials,
                                std::uint64_t seed);

enum class ObstructionStatus { Excluded, NotExcluded, Unknown };
const char* to_string(ObstructionStatus s);

struct TargetRow {
  BlockProfile profile;
  std::optional<std::size_t> bound;  // certified upper bound, if any
  std::size_t sampled = 0;           // non-certified lower bound
  ObstructionStatus status = ObstructionStatus::Unknown;
};

struct ObstructionReport {
  WordFamily family;
  std::vector<Element> args;
  std::size_t dim_in_N = 0;
  std::vector<TargetRow> targets;
};

class NotGenerating : public Error {
 public:
  explicit NotGenerating(std::size_t reached)
      : Error("generators span a subalgebra of dimension " + std::to_string(reached) + " only"), reached_(reached) {}
  std::size_t reached_dim() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

struct ObstructionOptions {
  std::optional<std::size_t> depth;  // tower depth, defaults to dim
  std::size_t trials = 50;
  std::uint64_t seed = 0;
};

/// Rows for every semisimple type of dimension alg.dim(). Tower families get
/// certified Excluded/NotExcluded statuses; other families are Unknown.
ObstructionReport assess_targets(const StructureAlgebra& alg, const WordFamily& fam, const std::vector<Element>& args,
                                 const ObstructionOptions& opts = {});

/// Tower-family obstruction for a generating pair. Throws NotGenerating when
/// unit, x and y do not generate alg.
ObstructionReport admissible_targets(const StructureAlgebra& alg, const Element& x, const Element& y,
                                     const ObstructionOptions& opts = {});

}  // namespace flatdef
