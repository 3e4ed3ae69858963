#include "flatdef/presentation.hpp"

#include <algorithm>
#include <functional>

namespace flatdef {

namespace detail {

using Row = std::vector<std::pair<Word, Scalar>>;  // leading word first, coefficient 1

struct RewriteRules {
  std::size_t alphabet = 0;
  std::map<Word, Row> rows;  // keyed by leading word
  std::map<Word, std::size_t> basis_index;

  using Accumulator = std::map<Word, Scalar, std::greater<>>;

  static void add(Accumulator& acc, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }

  /// Rewrites every leading word; the result contains only non-pivot words.
  Accumulator reduce(Accumulator work) const {
    Accumulator out;
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      auto it = rows.find(node.key());
      if (it == rows.end()) {
        out.insert(std::move(node));
        continue;
      }
      const Scalar& c = node.mapped();
      for (std::size_t k = 1; k < it->second.size(); ++k) add(work, it->second[k].first, -c * it->second[k].second);
    }
    return out;
  }

  /// Inserts v into the row set; returns the new row or nullptr if v was
  /// already in the span.
  const Row* insert(Accumulator v) {
    Accumulator r = reduce(std::move(v));
    if (r.empty()) return nullptr;
    Scalar inv = r.begin()->second.inverse();
    Row row;
    row.reserve(r.size());
    for (auto& [w, c] : r) row.emplace_back(w, c * inv);
    Word lead = row.front().first;
    return &rows.emplace(std::move(lead), std::move(row)).first->second;
  }

  bool is_pivot(const Word& w) const { return rows.count(w) != 0; }

  Element coordinates(const Word& w) const {
    Accumulator a;
    a.emplace(w, Scalar(1));
    Element out(basis_index.size());
    for (auto& [u, c] : reduce(std::move(a))) out[basis_index.at(u)] = c;
    return out;
  }
};

}  // namespace detail

using detail::RewriteRules;
using detail::Row;

const char* to_string(BuildError::Kind kind) {
  switch (kind) {
    case BuildError::Kind::NoStabilization: return "NoStabilization";
    case BuildError::Kind::DimensionMismatch: return "DimensionMismatch";
    case BuildError::Kind::NotClosed: return "NotClosed";
  }
  return "?";
}

std::size_t Presentation::effective_max_degree() const {
  if (max_degree) return *max_degree;
  long longest = 0;
  for (const auto& r : relations) longest = std::max(longest, r.degree());
  return static_cast<std::size_t>(2 * longest + 2);
}

void Presentation::check() const {
  if (expected_dim == 0) throw InvalidInput("expected_dim must be at least 1");
  if (generators.size() > 65535) throw InvalidInput("too many generators");
  for (const auto& r : relations) {
    if (r.generators() != generators) throw InvalidInput("relation uses an alphabet other than the declared generators");
    if (r.is_zero()) throw InvalidInput("relations must be nonzero");
    if (!r.is_constant_in_t()) throw InvalidInput("presentation relations must not depend on t: " + r.to_string());
  }
}

WordReducer::WordReducer(std::shared_ptr<const detail::RewriteRules> rules, std::size_t degree)
    : rules_(std::move(rules)), degree_(degree) {}

std::size_t WordReducer::dim() const { return rules_->basis_index.size(); }

Element WordReducer::evaluate_word(const Word& w) const {
  if (w.size() > degree_)
    throw InvalidInput("word of length " + std::to_string(w.size()) + " exceeds the accepted truncation degree " +
                       std::to_string(degree_));
  for (auto l : w.letters())
    if (l >= rules_->alphabet) throw DimensionError("word uses a letter outside the alphabet");
  return rules_->coordinates(w);
}

Element WordReducer::evaluate(const NcPoly& p) const {
  if (!p.is_constant_in_t()) throw InvalidInput("cannot evaluate a t-dependent polynomial");
  Element out(dim());
  for (const auto& [w, c] : p.terms()) axpy(out, c.constant_term(), evaluate_word(w));
  return out;
}

namespace {

RewriteRules::Accumulator to_accumulator(const NcPoly& p) {
  RewriteRules::Accumulator acc;
  for (const auto& [w, c] : p.terms()) RewriteRules::add(acc, w, c.constant_term());
  return acc;
}

std::size_t count_words(std::size_t alphabet, std::size_t max_len) {
  std::size_t total = 0, layer = 1;
  for (std::size_t k = 0; k <= max_len; ++k) {
    total += layer;
    layer *= alphabet;
  }
  return total;
}

/// Reads off the table from the rewrite rules and checks that it certifies
/// the quotient. Returns nullopt when the truncation is not yet consistent.
std::optional<BuildResult> try_certify(const std::shared_ptr<RewriteRules>& rules, std::size_t degree,
                                       const std::vector<std::string>& names) {
  std::vector<Word> basis;
  for (std::size_t len = 0; len < degree; ++len)
    for (auto& w : words_of_length(rules->alphabet, len))
      if (!rules->is_pivot(w)) basis.push_back(std::move(w));
  const std::size_t n = basis.size();
  if (n == 0) throw BuildError(BuildError::Kind::DimensionMismatch, "relations collapse the algebra to zero", 0);
  if (!basis.front().empty()) return std::nullopt;

  rules->basis_index.clear();
  for (std::size_t i = 0; i < n; ++i) rules->basis_index.emplace(basis[i], i);

  // right action of each letter on the basis classes
  std::vector<Matrix> right(rules->alphabet, Matrix(n, n));
  for (std::size_t a = 0; a < rules->alphabet; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element col = rules->coordinates(basis[b] * Word::letter(static_cast<Word::Letter>(a)));
      for (std::size_t r = 0; r < n; ++r) right[a](r, b) = std::move(col[r]);
    }
  auto act = [&](Element v, const Word& w) {
    for (auto l : w.letters()) v = right[l].apply(v);
    return v;
  };

  std::vector<Vector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = act(unit_vector(n, i), basis[j]);
  std::vector<std::string> labels;
  for (const auto& w : basis) labels.push_back(w.to_string(names));
  StructureAlgebra alg(std::move(labels), std::move(table), unit_vector(n, 0));
  if (!validate(alg).ok()) return std::nullopt;

  // The letter action must reproduce the normal form of every word the
  // truncated ideal knows about; then word -> class is an algebra map.
  Element one = unit_vector(n, 0);
  for (std::size_t len = 1; len <= degree; ++len)
    for (const auto& w : words_of_length(rules->alphabet, len))
      if (act(one, w) != rules->coordinates(w)) return std::nullopt;

  return BuildResult{std::move(alg), std::move(basis), WordReducer(rules, degree), degree};
}

}  // namespace

BuildResult build(const Presentation& p) {
  p.check();
  const std::size_t cap = p.effective_max_degree();
  long longest = 0;
  for (const auto& r : p.relations) longest = std::max(longest, r.degree());

  auto rules = std::make_shared<RewriteRules>();
  rules->alphabet = p.generators.size();

  std::vector<Row> fresh;
  auto insert_all = [&](std::vector<RewriteRules::Accumulator> candidates) {
    fresh.clear();
    for (auto& c : candidates)
      if (const Row* row = rules->insert(std::move(c))) fresh.push_back(*row);
  };

  std::vector<RewriteRules::Accumulator> initial;
  for (const auto& r : p.relations)
    if (r.degree() == 0) initial.push_back(to_accumulator(r));
  insert_all(std::move(initial));
  std::size_t previous_quotient_dim = 1 - rules->rows.size();

  bool saw_unclosed = false;
  for (std::size_t degree = 1; degree <= cap; ++degree) {
    std::vector<RewriteRules::Accumulator> candidates;
    for (const auto& r : p.relations)
      if (static_cast<std::size_t>(r.degree()) == degree) candidates.push_back(to_accumulator(r));
    for (const auto& row : fresh)
      for (std::size_t a = 0; a < rules->alphabet; ++a) {
        Word letter = Word::letter(static_cast<Word::Letter>(a));
        RewriteRules::Accumulator left, right;
        for (const auto& [w, c] : row) {
          RewriteRules::add(left, letter * w, c);
          RewriteRules::add(right, w * letter, c);
        }
        candidates.push_back(std::move(left));
        candidates.push_back(std::move(right));
      }
    insert_all(std::move(candidates));

    std::size_t short_image = 0;
    for (std::size_t len = 0; len < degree; ++len)
      for (const auto& w : words_of_length(rules->alphabet, len))
        if (!rules->is_pivot(w)) ++short_image;
    bool top_reduces = true;
    for (const auto& w : words_of_length(rules->alphabet, degree))
      if (!rules->is_pivot(w)) {
        top_reduces = false;
        break;
      }
    const std::size_t quotient_dim = count_words(rules->alphabet, degree) - rules->rows.size();
    const bool stabilized = short_image == previous_quotient_dim;
    previous_quotient_dim = quotient_dim;

    if (!stabilized || degree < static_cast<std::size_t>(longest)) continue;
    if (!top_reduces) {
      saw_unclosed = true;
      continue;
    }
    auto result = try_certify(rules, degree, p.generators);
    if (!result) {
      saw_unclosed = true;
      continue;
    }
    if (result->algebra.dim() != p.expected_dim)
      throw BuildError(BuildError::Kind::DimensionMismatch,
                       "presentation stabilized at dimension " + std::to_string(result->algebra.dim()) +
                           ", expected " + std::to_string(p.expected_dim),
                       result->algebra.dim());
    return std::move(*result);
  }
  if (saw_unclosed)
    throw BuildError(BuildError::Kind::NotClosed,
                     "multiplication does not close at the stabilized degree; raise max_degree above " +
                         std::to_string(cap));
  throw BuildError(BuildError::Kind::NoStabilization,
                   "no stabilization up to max_degree " + std::to_string(cap));
}

}  // namespace flatdef
