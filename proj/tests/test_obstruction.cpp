#include <gtest/gtest.h>

#include <random>

#include "flatdef/error.hpp"
#include "flatdef/obstruction.hpp"
#include "flatdef/presentation.hpp"
#include "oracles.hpp"

using namespace flatdef;

namespace {

BuildResult build_acon() {
  Presentation p;
  p.generators = {"x", "y"};
  for (const char* r : {"y^6 - x^3 - y^2*x", "y^4*x + x^2 + y^2", "x^4 - y^4", "y*x^2 + y^3", "x*y + y*x"})
    p.relations.push_back(parse_ncpoly(r, p.generators));
  p.expected_dim = 12;
  return build(p);
}

/// Direct evaluation of a word family: each word is expanded by multiplying
/// the arguments letter by letter from the unit.
std::size_t naive_span(const StructureAlgebra& alg, const WordFamily& fam, const std::vector<Element>& args) {
  std::vector<Vector> values;
  for (const auto& w : fam.words) {
    Vector total = zero_vector(alg.dim());
    for (const auto& [word, coeff] : w.terms()) {
      Element acc = alg.unit();
      for (auto l : word.letters()) acc = alg.multiply(acc, args[l]);
      axpy(total, coeff.constant_term(), acc);
    }
    values.push_back(total);
  }
  return Subspace::span(alg.dim(), values).dim();
}

Element random_element(std::size_t n, std::mt19937_64& rng) {
  Element e(n);
  for (auto& c : e) c = Scalar(static_cast<long>(rng() % 7) - 3);
  return e;
}

}  // namespace

TEST(WordFamily, TowerShape) {
  WordFamily t = tower_family(3);
  EXPECT_EQ(t.words.size(), 8u);
  EXPECT_EQ(t.printed().front(), "1");
  EXPECT_EQ(t.printed().back(), "y*x^3");
  EXPECT_EQ(t.tower_depth, 3u);
  WordFamily empty{{"x"}, {}, std::nullopt};
  EXPECT_THROW(empty.check(), InvalidInput);
  WordFamily dep{{"x"}, {parse_ncpoly("t*x", {"x"})}, std::nullopt};
  EXPECT_THROW(dep.check(), InvalidInput);
}

TEST(WordFamily, SpanMatchesNaiveEvaluation) {
  std::mt19937_64 rng(31);
  for (const auto& [name, alg] : oracle::small_corpus()) {
    WordFamily fam{{"x", "y"},
                   {parse_ncpoly("x*y - y*x", {"x", "y"}), parse_ncpoly("x^2 + 2*y", {"x", "y"}),
                    parse_ncpoly("y*x*y", {"x", "y"}), parse_ncpoly("1", {"x", "y"})},
                   std::nullopt};
    std::vector<Element> args = {random_element(alg.dim(), rng), random_element(alg.dim(), rng)};
    EXPECT_EQ(family_span_dim(alg, fam, args), naive_span(alg, fam, args)) << name;
    WordFamily tower = tower_family(alg.dim());
    EXPECT_EQ(family_span_dim(alg, tower, args), naive_span(alg, tower, args)) << name;
  }
}

TEST(TowerBound, CayleyHamiltonCapHoldsOnRandomArguments) {
  std::mt19937_64 rng(77);
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& p : enumerate_semisimple_types(n)) {
      StructureAlgebra m = block_model(p);
      WordFamily tower = tower_family(n);
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Element> args = {random_element(n, rng), random_element(n, rng)};
        EXPECT_LE(family_span_dim(m, tower, args), tower_bound(p)) << p.to_string();
      }
      // The cap is attained generically.
      EXPECT_EQ(sampled_lower_bound(p, tower, 10, 1), tower_bound(p)) << p.to_string();
    }
  EXPECT_EQ(tower_bound(BlockProfile::parse("1^3 3^1")), 9u);
  EXPECT_EQ(tower_bound(BlockProfile::parse("2^3")), 12u);
}

TEST(SampledLowerBound, DeterministicPerSeed) {
  BlockProfile p = BlockProfile::parse("1^1 2^1");
  WordFamily fam{{"x", "y"}, {parse_ncpoly("x*y", {"x", "y"}), parse_ncpoly("y*x", {"x", "y"})}, std::nullopt};
  EXPECT_EQ(sampled_lower_bound(p, fam, 5, 42), sampled_lower_bound(p, fam, 5, 42));
  EXPECT_THROW(sampled_lower_bound(p, fam, 0, 1), InvalidInput);
}

TEST(Obstruction, AconTargets) {
  BuildResult b = build_acon();
  Element x = b.reducer.evaluate_word(Word::letter(0));
  Element y = b.reducer.evaluate_word(Word::letter(1));
  ObstructionReport r = admissible_targets(b.algebra, x, y);
  EXPECT_EQ(r.dim_in_N, 12u);
  ASSERT_EQ(r.targets.size(), 5u);
  for (const auto& row : r.targets) {
    bool small = row.profile.max_block() <= 2;
    EXPECT_EQ(row.status, small ? ObstructionStatus::NotExcluded : ObstructionStatus::Excluded) << row.profile.to_string();
  }
}

TEST(Obstruction, ExteriorAndTrivialCases) {
  StructureAlgebra e = oracle::exterior2();
  ObstructionReport r = admissible_targets(e, e.basis_element(1), e.basis_element(2));
  EXPECT_EQ(r.dim_in_N, 4u);
  for (const auto& row : r.targets) {
    EXPECT_EQ(row.bound, 4u);
    EXPECT_EQ(row.status, ObstructionStatus::NotExcluded);
  }
  StructureAlgebra q = matrix_algebra(1);
  ObstructionReport one = admissible_targets(q, q.unit(), q.unit());
  ASSERT_EQ(one.targets.size(), 1u);
  EXPECT_EQ(one.targets[0].status, ObstructionStatus::NotExcluded);
}

TEST(Obstruction, NotGenerating) {
  StructureAlgebra e = oracle::exterior2();
  try {
    admissible_targets(e, e.basis_element(1), e.basis_element(1));
    FAIL();
  } catch (const NotGenerating& err) {
    EXPECT_EQ(err.reached_dim(), 2u);
  }
}

TEST(Obstruction, NonTowerFamilyIsUnknown) {
  StructureAlgebra m2 = matrix_algebra(2);
  WordFamily fam{{"x", "y"}, {parse_ncpoly("x*y", {"x", "y"}), parse_ncpoly("1", {"x", "y"})}, std::nullopt};
  ObstructionReport r = assess_targets(m2, fam, {m2.basis_element(1), m2.basis_element(2)}, {std::nullopt, 3, 0});
  for (const auto& row : r.targets) {
    EXPECT_EQ(row.status, ObstructionStatus::Unknown);
    EXPECT_FALSE(row.bound.has_value());
  }
}

TEST(Obstruction, ExcludedImpliesNoBlockModelReachesTheSpan) {
  // Property: if a target is Excluded, then its block model never reaches
  // dim_in_N on sampled arguments.
  BuildResult b = build_acon();
  ObstructionReport r = admissible_targets(b.algebra, b.reducer.evaluate_word(Word::letter(0)),
                                           b.reducer.evaluate_word(Word::letter(1)), {std::nullopt, 20, 9});
  for (const auto& row : r.targets)
    if (row.status == ObstructionStatus::Excluded) EXPECT_LT(row.sampled, r.dim_in_N);
}
