#include "flatdef/deformation.hpp"

#include <utility>

namespace flatdef {

DeformationFamily DeformationFamily::constant(const StructureAlgebra& alg) {
  DeformationFamily f;
  f.labels = alg.labels();
  f.unit = alg.unit();
  for (const auto& entry : alg.table()) {
    std::vector<TPoly> coords;
    for (const auto& c : entry) coords.emplace_back(c);
    f.table.push_back(std::move(coords));
  }
  return f;
}

namespace {

using PolyVector = std::vector<TPoly>;

bool shapes_ok(const DeformationFamily& f, FamilyReport& report) {
  const std::size_t n = f.dim();
  if (n == 0) report.problems.emplace_back("family must have positive dimension");
  if (f.unit.size() != n) report.problems.emplace_back("unit vector length must equal dim");
  if (f.table.size() != n * n) report.problems.emplace_back("table must have dim*dim entries");
  for (const auto& e : f.table)
    if (e.size() != n) {
      report.problems.emplace_back("table entry length must equal dim");
      break;
    }
  return report.ok();
}

// (sum_i a_i d_i) * d_k with polynomial coordinates
PolyVector times_basis(const DeformationFamily& f, const PolyVector& a, std::size_t k) {
  const std::size_t n = f.dim();
  PolyVector out(n);
  for (std::size_t l = 0; l < n; ++l) {
    if (a[l].is_zero()) continue;
    for (std::size_t m = 0; m < n; ++m)
      if (!f.table[l * n + k][m].is_zero()) out[m] += a[l] * f.table[l * n + k][m];
  }
  return out;
}

PolyVector basis_times(const DeformationFamily& f, std::size_t i, const PolyVector& a) {
  const std::size_t n = f.dim();
  PolyVector out(n);
  for (std::size_t l = 0; l < n; ++l) {
    if (a[l].is_zero()) continue;
    for (std::size_t m = 0; m < n; ++m)
      if (!f.table[i * n + l][m].is_zero()) out[m] += a[l] * f.table[i * n + l][m];
  }
  return out;
}

StructureAlgebra evaluate_at(const DeformationFamily& f, const Scalar& s) {
  std::vector<Vector> table;
  table.reserve(f.table.size());
  for (const auto& entry : f.table) {
    Vector v;
    v.reserve(entry.size());
    for (const auto& p : entry) v.push_back(p.eval(s));
    table.push_back(std::move(v));
  }
  return StructureAlgebra(f.labels, std::move(table), f.unit);
}

void require_real(const Scalar& s) {
  if (!s.is_real()) throw InvalidInput("specialization parameter must be real");
}

}  // namespace

FamilyReport validate_family(const DeformationFamily& f, const StructureAlgebra* base) {
  FamilyReport report;
  if (!shapes_ok(f, report)) return report;
  const std::size_t n = f.dim();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        PolyVector left = times_basis(f, f.table[i * n + j], k);
        PolyVector right = basis_times(f, i, f.table[j * n + k]);
        if (left != right)
          report.problems.push_back("associativity fails identically in t on basis triple (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ", " + std::to_string(k) + ")");
      }

  PolyVector unit;
  for (const auto& u : f.unit) unit.emplace_back(u);
  for (std::size_t j = 0; j < n; ++j) {
    PolyVector e(n);
    e[j] = TPoly(1);
    PolyVector left(n), right = times_basis(f, unit, j);
    for (std::size_t i = 0; i < n; ++i)
      if (!f.unit[i].is_zero())
        for (std::size_t m = 0; m < n; ++m) left[m] += TPoly(f.unit[i]) * f.table[j * n + i][m];
    if (left != e || right != e)
      report.problems.push_back("unit law fails identically in t on basis element " + std::to_string(j));
  }

  if (base) {
    if (base->dim() != n) {
      report.problems.emplace_back("base algebra dimension differs from family dimension");
    } else if (!(evaluate_at(f, Scalar(0)).table() == base->table())) {
      report.problems.emplace_back("family at t = 0 does not reproduce the base algebra's table");
    }
  }
  return report;
}

StructureAlgebra specialize(const DeformationFamily& f, const Scalar& s) {
  require_real(s);
  FamilyReport report = validate_family(f);
  if (!report.ok()) throw InvalidInput("family not validated: " + report.problems.front());
  return evaluate_at(f, s);
}

TPoly gram_determinant(const DeformationFamily& f) {
  FamilyReport report;
  if (!shapes_ok(f, report)) throw InvalidInput(report.problems.front());
  const std::size_t n = f.dim();
  PolyVector tau(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) tau[l] += f.table[l * n + k][k];
  std::vector<PolyVector> g(n, PolyVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) g[i][j] += f.table[i * n + j][l] * tau[l];

  // Fraction-free Bareiss elimination over Q(i)[t].
  TPoly sign(1), previous(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (g[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && g[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(g[k], g[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        g[i][j] = exact_quotient(g[k][k] * g[i][j] - g[i][k] * g[k][j], previous);
    previous = g[k][k];
  }
  return sign * g[n - 1][n - 1];
}

Presentation SampledFamily::at(const Scalar& s) const {
  Presentation p;
  p.generators = generators;
  for (const auto& r : relations) {
    NcPoly specialized = r.specialize(s);
    if (!specialized.is_zero()) p.relations.push_back(std::move(specialized));
  }
  p.expected_dim = expected_dim;
  p.max_degree = max_degree;
  return p;
}

void SampledFamily::check() const { build(at(Scalar(0))); }

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::StableSemisimpleTarget: return "StableSemisimpleTarget";
    case VerdictKind::NeverSemisimpleOnSchedule: return "NeverSemisimpleOnSchedule";
    case VerdictKind::Mixed: return "Mixed";
  }
  return "?";
}

std::vector<Scalar> geometric_schedule(const Scalar& base, std::size_t count) {
  if (!base.is_real() || sgn(base.re()) <= 0) throw InvalidInput("schedule base must be a positive rational");
  std::vector<Scalar> out;
  Scalar s = base;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(s);
    s /= Scalar(2);
  }
  return out;
}

Verdict classify(const std::vector<ScanRow>& rows, std::optional<std::size_t> expected_dim) {
  Verdict v;
  if (rows.empty()) return v;
  for (const auto& r : rows)
    if (r.error || (expected_dim && r.dim != *expected_dim)) return v;

  bool any_semisimple = false;
  for (const auto& r : rows) any_semisimple = any_semisimple || r.semisimple;
  if (!any_semisimple) {
    v.kind = VerdictKind::NeverSemisimpleOnSchedule;
    return v;
  }
  const ScanRow& last = rows.back();
  if (!last.semisimple) return v;
  std::size_t k0 = rows.size() - 1;
  while (k0 > 0 && rows[k0 - 1].semisimple && rows[k0 - 1].profile == last.profile) --k0;
  if (rows.size() - k0 < 2) return v;
  v.kind = VerdictKind::StableSemisimpleTarget;
  v.profile = last.profile;
  v.from_index = k0;
  return v;
}

namespace {

ScanRow analyze_sample(std::size_t k, const Scalar& s, const StructureAlgebra& alg) {
  ScanRow row;
  row.index = k;
  row.s = s;
  row.dim = alg.dim();
  ProfileResult pr = block_profile(alg);
  row.radical_dim = pr.radical_dim;
  row.semisimple = pr.radical_dim == 0;
  row.profile = std::move(pr.profile);
  return row;
}

void check_schedule_args(const Scalar& base, std::size_t count) {
  if (count < 2) throw InvalidInput("scan count must be at least 2");
  if (!base.is_real() || sgn(base.re()) <= 0) throw InvalidInput("schedule base must be a positive rational");
}

}  // namespace

ScanResult scan(const DeformationFamily& f, const Scalar& base, std::size_t count) {
  check_schedule_args(base, count);
  FamilyReport report = validate_family(f);
  if (!report.ok()) throw InvalidInput("family not validated: " + report.problems.front());
  ScanResult out;
  out.schedule = geometric_schedule(base, count);
  for (std::size_t k = 0; k < count; ++k) out.rows.push_back(analyze_sample(k, out.schedule[k], evaluate_at(f, out.schedule[k])));
  out.verdict = classify(out.rows);
  return out;
}

ScanResult scan(const SampledFamily& f, const Scalar& base, std::size_t count) {
  check_schedule_args(base, count);
  ScanResult out;
  out.schedule = geometric_schedule(base, count);
  for (std::size_t k = 0; k < count; ++k) {
    const Scalar& s = out.schedule[k];
    try {
      out.rows.push_back(analyze_sample(k, s, build(f.at(s)).algebra));
    } catch (const BuildError& e) {
      ScanRow row;
      row.index = k;
      row.s = s;
      row.dim = e.found_dim().value_or(0);
      row.error = std::string(to_string(e.kind())) + ": " + e.what();
      out.rows.push_back(std::move(row));
    }
  }
  out.verdict = classify(out.rows, f.expected_dim);
  return out;
}

TargetComparison compare_targets(const ScanResult& r, const std::vector<BlockProfile>& targets) {
  TargetComparison out;
  out.targets = targets;
  if (r.verdict.kind != VerdictKind::StableSemisimpleTarget || !r.verdict.profile) {
    out.matches.assign(targets.size(), false);
    out.summary = "no stable target on this schedule";
    return out;
  }
  for (const auto& t : targets) {
    bool m = t == *r.verdict.profile;
    out.matches.push_back(m);
    out.match_count += m ? 1 : 0;
  }
  const std::string stable = r.verdict.profile->to_string();
  if (out.match_count == 0) {
    out.summary = "stable profile " + stable + " matches none of the candidate targets";
  } else {
    out.summary = "stable profile " + stable + " matches " + std::to_string(out.match_count) +
                  (out.match_count == 1 ? " candidate; the semisimple target is unique up to isomorphism"
                                        : " candidates (duplicate entries of one isomorphism class)");
  }
  return out;
}

}  // namespace flatdef
