#include <gtest/gtest.h>

#include <random>

#include "flatdef/deformation.hpp"
#include "flatdef/error.hpp"
#include "oracles.hpp"

using namespace flatdef;

namespace {

/// Basis {1, x} with x*x = t.
DeformationFamily dual_family() {
  DeformationFamily f;
  f.labels = {"1", "x"};
  f.unit = {1, 0};
  f.table = {{TPoly(1), TPoly()}, {TPoly(), TPoly(1)}, {TPoly(), TPoly(1)}, {TPoly::t(), TPoly()}};
  return f;
}

/// Basis {1, e, f} with e*e = e, f*f = t*f and e*f = f*e = 0.
DeformationFamily idempotent_family() {
  DeformationFamily f;
  f.labels = {"1", "e", "f"};
  f.unit = {1, 0, 0};
  auto v = [](TPoly a, TPoly b, TPoly c) { return std::vector<TPoly>{a, b, c}; };
  TPoly z, one(1), t = TPoly::t();
  f.table = {v(one, z, z), v(z, one, z), v(z, z, one),  //
             v(z, one, z), v(z, one, z), v(z, z, z),    //
             v(z, z, one), v(z, z, z),   v(z, z, t)};
  return f;
}

Matrix gram_at(const StructureAlgebra& a) { return trace_gram(a); }

Scalar determinant(const Matrix& m) {
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      Scalar f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

}  // namespace

TEST(Family, ValidationInT) {
  EXPECT_TRUE(validate_family(dual_family()).ok());
  EXPECT_TRUE(validate_family(idempotent_family()).ok());
  DeformationFamily broken = dual_family();
  broken.table[1] = {TPoly(), TPoly::t()};  // 1*x = t*x
  EXPECT_FALSE(validate_family(broken).ok());
  DeformationFamily shape = dual_family();
  shape.table.pop_back();
  EXPECT_FALSE(validate_family(shape).ok());
  StructureAlgebra dual = oracle::truncated_polynomial(2);
  EXPECT_TRUE(validate_family(dual_family(), &dual).ok());
  StructureAlgebra q2 = direct_sum({matrix_algebra(1), matrix_algebra(1)});
  EXPECT_FALSE(validate_family(dual_family(), &q2).ok());
}

TEST(Family, UnitLawCheckedInT) {
  DeformationFamily f = dual_family();
  f.table[2] = {TPoly::t(), TPoly(1)};  // x*1 = x + t*1
  EXPECT_FALSE(validate_family(f).ok());
}

TEST(Family, SpecializeAndConstant) {
  StructureAlgebra a = specialize(dual_family(), Scalar::rational(1, 4));
  EXPECT_EQ(a.product(1, 1), (Vector{Scalar::rational(1, 4), 0}));
  EXPECT_THROW(specialize(dual_family(), Scalar::imaginary_unit()), InvalidInput);
  StructureAlgebra m2 = matrix_algebra(2);
  EXPECT_EQ(specialize(DeformationFamily::constant(m2), Scalar(5)), m2);
}

TEST(Family, GramDeterminantDetectsSemisimplicity) {
  for (const auto& f : {dual_family(), idempotent_family(), DeformationFamily::constant(upper_triangular(2)),
                        DeformationFamily::constant(matrix_algebra(2))}) {
    TPoly det = gram_determinant(f);
    for (long num = -4; num <= 4; ++num) {
      Scalar s = Scalar::rational(num, 3);
      StructureAlgebra a = specialize(f, s);
      EXPECT_EQ(det.eval(s), determinant(gram_at(a)));
      EXPECT_EQ(!det.eval(s).is_zero(), is_semisimple(a));
    }
  }
  EXPECT_EQ(gram_determinant(dual_family()), TPoly::monomial(4, 1));
}

TEST(Scan, DualFamilyIsStable) {
  ScanResult r = scan(dual_family(), Scalar::rational(1, 4), 10);
  ASSERT_EQ(r.rows.size(), 10u);
  EXPECT_EQ(r.schedule[1], Scalar::rational(1, 8));
  EXPECT_EQ(r.verdict.kind, VerdictKind::StableSemisimpleTarget);
  EXPECT_EQ(r.verdict.profile, BlockProfile::parse("1^2"));
  EXPECT_EQ(r.verdict.from_index, 0u);
  StructureAlgebra at_zero = specialize(dual_family(), Scalar(0));
  EXPECT_FALSE(is_semisimple(at_zero));
  EXPECT_EQ(radical(at_zero).dim(), 1u);
}

TEST(Scan, ConstantFamilies) {
  EXPECT_EQ(scan(DeformationFamily::constant(matrix_algebra(2)), Scalar::rational(1, 2), 12).verdict.kind,
            VerdictKind::StableSemisimpleTarget);
  EXPECT_EQ(scan(DeformationFamily::constant(oracle::truncated_polynomial(2)), Scalar::rational(1, 2), 12).verdict.kind,
            VerdictKind::NeverSemisimpleOnSchedule);
  EXPECT_THROW(scan(dual_family(), Scalar(0), 5), InvalidInput);
  EXPECT_THROW(scan(dual_family(), Scalar(1), 1), InvalidInput);
}

TEST(Scan, RootOnScheduleDelaysStableTail) {
  // f*f = (t - 1/4) f: non-semisimple only at the first sample.
  DeformationFamily f = idempotent_family();
  f.table[8] = {TPoly(), TPoly(), TPoly::t() - TPoly(Scalar::rational(1, 4))};
  ScanResult r = scan(f, Scalar::rational(1, 4), 6);
  EXPECT_FALSE(r.rows[0].semisimple);
  EXPECT_EQ(r.verdict.kind, VerdictKind::StableSemisimpleTarget);
  EXPECT_EQ(r.verdict.from_index, 1u);
  EXPECT_EQ(r.verdict.profile, BlockProfile::parse("1^3"));
}

TEST(Classify, Rules) {
  auto row = [](bool ss, const char* prof) {
    ScanRow r;
    r.dim = 2;
    r.semisimple = ss;
    r.profile = BlockProfile::parse(prof);
    return r;
  };
  EXPECT_EQ(classify({row(true, "1^2"), row(false, "1")}).kind, VerdictKind::Mixed);
  EXPECT_EQ(classify({row(false, "1"), row(true, "1^2")}).kind, VerdictKind::Mixed);
  EXPECT_EQ(classify({row(false, "1"), row(true, "1^2"), row(true, "1^2")}).from_index, 1u);
  EXPECT_EQ(classify({row(false, "1"), row(false, "1")}).kind, VerdictKind::NeverSemisimpleOnSchedule);
  EXPECT_EQ(classify({row(true, "1^2"), row(true, "1^2")}, 3).kind, VerdictKind::Mixed);
  ScanRow bad = row(true, "1^2");
  bad.error = "boom";
  EXPECT_EQ(classify({row(true, "1^2"), bad, row(true, "1^2")}).kind, VerdictKind::Mixed);
}

TEST(Scan, RelationFamilyMatchesTableFamily) {
  SampledFamily f;
  f.generators = {"x"};
  f.relations = {parse_ncpoly("x^2 - t", {"x"})};
  f.expected_dim = 2;
  f.check();
  ScanResult r = scan(f, Scalar::rational(1, 4), 10);
  ScanResult t = scan(dual_family(), Scalar::rational(1, 4), 10);
  EXPECT_EQ(r.verdict.kind, t.verdict.kind);
  EXPECT_EQ(r.verdict.profile, t.verdict.profile);
  for (std::size_t k = 0; k < 10; ++k) EXPECT_EQ(r.rows[k].profile, t.rows[k].profile);
}

TEST(Scan, RelationFamilyDimensionDrop) {
  // t*x = 0 kills x for every s != 0.
  SampledFamily f;
  f.generators = {"x"};
  f.relations = {parse_ncpoly("x^2", {"x"}), parse_ncpoly("t*x", {"x"})};
  f.expected_dim = 2;
  f.check();
  ScanResult r = scan(f, Scalar::rational(1, 2), 4);
  EXPECT_EQ(r.verdict.kind, VerdictKind::Mixed);
}

TEST(Compare, Targets) {
  ScanResult r = scan(dual_family(), Scalar::rational(1, 4), 6);
  TargetComparison c = compare_targets(r, {BlockProfile::parse("1^2"), BlockProfile::parse("1")});
  EXPECT_EQ(c.matches, (std::vector<bool>{true, false}));
  EXPECT_EQ(c.match_count, 1u);
  ScanResult never = scan(DeformationFamily::constant(oracle::truncated_polynomial(2)), Scalar(1), 4);
  EXPECT_EQ(compare_targets(never, {BlockProfile::parse("1^2")}).match_count, 0u);
}
