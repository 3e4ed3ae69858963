#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatdef/algebra.hpp"
#include "flatdef/presentation.hpp"
#include "flatdef/structure.hpp"
#include "flatdef/tpoly.hpp"

namespace flatdef {

/// Polynomial-type deformation: structure constants polynomial in t, unit
/// constant in t. Entry i*dim + j of `table` holds the coordinates of
/// d_i * d_j as n polynomials.
struct DeformationFamily {
  std::vector<std::string> labels;
  Vector unit;
  std::vector<std::vector<TPoly>> table;

  std::size_t dim() const noexcept { return labels.size(); }

  /// The family whose structure constants do not depend on t.
  static DeformationFamily constant(const StructureAlgebra& alg);
};

struct FamilyReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Checks shapes, associativity and the unit law identically in t, and, when
/// `base` is given, that t = 0 reproduces its table.
FamilyReport validate_family(const DeformationFamily& f, const StructureAlgebra* base = nullptr);

/// Structure constants evaluated at t = s. Requires a real s and a family
/// that passes validate_family; throws InvalidInput otherwise.
StructureAlgebra specialize(const DeformationFamily& f, const Scalar& s);

/// det(trace(L_{d_i} L_{d_j})) as a polynomial in t. Its nonvanishing at s is
/// equivalent to semisimplicity of the specialization at s.
TPoly gram_determinant(const DeformationFamily& f);

/// Deformation given by t-dependent relations; every sample is built from
/// its own presentation.
struct SampledFamily {
  std::vector<std::string> generators;
  std::vector<NcPoly> relations;
  std::size_t expected_dim = 1;
  std::optional<std::size_t> max_degree;

  /// The presentation with t replaced by s.
  Presentation at(const Scalar& s) const;
  /// Throws (BuildError or InvalidInput) unless the t = 0 presentation
  /// builds to expected_dim.
  void check() const;
};

struct ScanRow {
  std::size_t index = 0;
  Scalar s;
  std::size_t dim = 0;
  bool semisimple = false;
  std::size_t radical_dim = 0;
  BlockProfile profile;
  std::optional<std::string> error;  // per-sample build failure
};

enum class VerdictKind { StableSemisimpleTarget, NeverSemisimpleOnSchedule, Mixed };
const char* to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Mixed;
  std::optional<BlockProfile> profile;
  std::optional<std::size_t> from_index;  // k0 for a stable target
};

struct ScanResult {
  std::vector<Scalar> schedule;
  std::vector<ScanRow> rows;
  Verdict verdict;
};

/// s_k = base * 2^-k for k = 0..count-1.
std::vector<Scalar> geometric_schedule(const Scalar& base, std::size_t count);

/// Verdict from per-sample rows. A stable target needs a semisimple tail of
/// at least two samples sharing one profile; any failed sample or a sample
/// off `expected_dim` makes the scan Mixed.
Verdict classify(const std::vector<ScanRow>& rows, std::optional<std::size_t> expected_dim = {});

/// Scan along the geometric schedule. Throws InvalidInput on a non-positive
/// or non-real base, count < 2, or a family that fails validation.
ScanResult scan(const DeformationFamily& f, const Scalar& base, std::size_t count);
ScanResult scan(const SampledFamily& f, const Scalar& base, std::size_t count);

struct TargetComparison {
  std::vector<BlockProfile> targets;
  std::vector<bool> matches;
  std::size_t match_count = 0;
  std::string summary;
};

/// Marks which candidate profiles equal the stable profile of the scan.
TargetComparison compare_targets(const ScanResult& r, const std::vector<BlockProfile>& targets);

}  // namespace flatdef
