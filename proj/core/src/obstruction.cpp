#include "flatdef/obstruction.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace flatdef {

void WordFamily::check() const {
  if (words.empty()) throw InvalidInput("word family must be nonempty");
  for (const auto& w : words) {
    if (w.generators() != slots) throw InvalidInput("family word references undeclared slots");
    if (!w.is_constant_in_t()) throw InvalidInput("family words must be constant in t");
  }
}

std::vector<std::string> WordFamily::printed() const {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

namespace {

class WordEvaluator {
 public:
  WordEvaluator(const StructureAlgebra& alg, const std::vector<Element>& args) : alg_(alg), args_(args) {
    cache_.emplace(Word(), alg.unit());
  }

  const Element& word(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    Element prefix = word(w.subword(0, w.size() - 1));
    Element value = alg_.multiply(prefix, args_[w[w.size() - 1]]);
    return cache_.emplace(w, std::move(value)).first->second;
  }

  Element poly(const NcPoly& p) {
    Element out(alg_.dim());
    for (const auto& [w, c] : p.terms()) axpy(out, c.constant_term(), word(w));
    return out;
  }

 private:
  const StructureAlgebra& alg_;
  const std::vector<Element>& args_;
  std::map<Word, Element> cache_;
};

std::vector<Element> random_args(std::size_t count, std::size_t dim, std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(std::uint64_t{trial} >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<Element> out(count, Element(dim));
  for (auto& e : out)
    for (auto& c : e) c = Scalar(static_cast<long>(rng() % 19) - 9);
  return out;
}

}  // namespace

std::size_t family_span_dim(const StructureAlgebra& alg, const WordFamily& fam, const std::vector<Element>& args) {
  fam.check();
  if (args.size() != fam.arity())
    throw DimensionError("family has arity " + std::to_string(fam.arity()) + " but " + std::to_string(args.size()) +
                         " arguments were given");
  for (const auto& a : args)
    if (a.size() != alg.dim()) throw DimensionError("argument length does not match algebra dimension");
  WordEvaluator eval(alg, args);
  EchelonBasis span(alg.dim());
  for (const auto& w : fam.words) {
    span.insert(eval.poly(w));
    if (span.dim() == alg.dim()) break;
  }
  return span.dim();
}

WordFamily tower_family(std::size_t depth) {
  WordFamily fam;
  fam.slots = {"x", "y"};
  fam.tower_depth = depth;
  for (std::size_t i = 0; i <= depth; ++i) fam.words.push_back(NcPoly::monomial(fam.slots, Word::power(0, i)));
  for (std::size_t i = 0; i <= depth; ++i)
    fam.words.push_back(NcPoly::monomial(fam.slots, Word::letter(1) * Word::power(0, i)));
  return fam;
}

std::size_t tower_bound(const BlockProfile& profile) {
  std::size_t total = 0;
  for (auto [j, c] : profile.counts()) total += c * std::min(2 * j, j * j);
  return total;
}

std::size_t sampled_lower_bound(const BlockProfile& profile, const WordFamily& fam, std::size_t trials,
                                std::uint64_t seed) {
  if (trials == 0) throw InvalidInput("sampled_lower_bound needs at least one trial");
  StructureAlgebra model = block_model(profile);
  std::size_t best = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    best = std::max(best, family_span_dim(model, fam, random_args(fam.arity(), model.dim(), seed, k)));
    if (best == model.dim()) break;
  }
  return best;
}

const char* to_string(ObstructionStatus s) {
  switch (s) {
    case ObstructionStatus::Excluded: return "Excluded";
    case ObstructionStatus::NotExcluded: return "NotExcluded";
    case ObstructionStatus::Unknown: return "Unknown";
  }
  return "?";
}

ObstructionReport assess_targets(const StructureAlgebra& alg, const WordFamily& fam, const std::vector<Element>& args,
                                 const ObstructionOptions& opts) {
  ObstructionReport report;
  report.family = fam;
  report.args = args;
  report.dim_in_N = family_span_dim(alg, fam, args);
  for (auto& profile : enumerate_semisimple_types(alg.dim())) {
    TargetRow row;
    row.sampled = opts.trials == 0 ? 0 : sampled_lower_bound(profile, fam, opts.trials, opts.seed);
    if (fam.tower_depth) {
      row.bound = tower_bound(profile);
      row.status = report.dim_in_N > *row.bound ? ObstructionStatus::Excluded : ObstructionStatus::NotExcluded;
      if (row.sampled > *row.bound) throw AnalysisError("sampled span exceeds the certified tower bound");
    }
    row.profile = std::move(profile);
    report.targets.push_back(std::move(row));
  }
  return report;
}

ObstructionReport admissible_targets(const StructureAlgebra& alg, const Element& x, const Element& y,
                                     const ObstructionOptions& opts) {
  Subspace generated = subalgebra_closure(alg, {x, y});
  if (generated.dim() != alg.dim()) throw NotGenerating(generated.dim());
  return assess_targets(alg, tower_family(opts.depth.value_or(alg.dim())), {x, y}, opts);
}

}  // namespace flatdef
