#include "flatdef/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "flatdef/error.hpp"

namespace flatdef {

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<long>(pos),
                                  letters_.begin() + static_cast<long>(pos + len)));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Word::Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

std::string Word::to_string(std::span<const std::string> names) const {
  if (empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < size();) {
    std::size_t run = 1;
    while (i + run < size() && letters_[i + run] == letters_[i]) ++run;
    if (!out.empty()) out += "*";
    out += names[letters_[i]];
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t length) {
  std::vector<Word> out;
  if (alphabet_size == 0) {
    if (length == 0) out.emplace_back();
    return out;
  }
  std::vector<Word::Letter> cur(length, 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t pos = length;
    while (pos > 0 && cur[pos - 1] + 1u == alphabet_size) cur[--pos] = 0;
    if (pos == 0) break;
    ++cur[pos - 1];
  }
  return out;
}

NcPoly NcPoly::constant(std::vector<std::string> generators, const TPoly& c) {
  return monomial(std::move(generators), Word(), c);
}

NcPoly NcPoly::generator(std::vector<std::string> generators, Word::Letter index) {
  if (index >= generators.size()) throw DimensionError("generator index out of range");
  return monomial(std::move(generators), Word::letter(index));
}

NcPoly NcPoly::monomial(std::vector<std::string> generators, const Word& w, const TPoly& c) {
  NcPoly p(std::move(generators));
  p.add_term(w, c);
  return p;
}

long NcPoly::degree() const {
  long d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<long>(w.size()));
  return d;
}

long NcPoly::t_degree() const {
  long d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, c.degree());
  return d;
}

void NcPoly::add_term(const Word& w, const TPoly& c) {
  if (c.is_zero()) return;
  for (auto l : w.letters())
    if (l >= generators_.size()) throw DimensionError("word uses a letter outside the alphabet");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::specialize(const Scalar& s) const {
  NcPoly out(generators_);
  for (const auto& [w, c] : terms_) out.add_term(w, TPoly(c.eval(s)));
  return out;
}

void NcPoly::check_alphabet(const NcPoly& o) const {
  if (generators_ != o.generators_) throw DimensionError("noncommutative polynomials over different alphabets");
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_alphabet(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check_alphabet(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.check_alphabet(b);
  NcPoly out(a.generators_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

std::string NcPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    bool negative = false;
    std::string coeff;
    if (c.is_constant() && c.constant_term().is_real()) {
      Scalar v = c.constant_term();
      negative = sgn(v.re()) < 0;
      if (negative) v = -v;
      if (!(v.is_one() && !w.empty())) coeff = v.to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    std::string term;
    if (w.empty()) {
      term = coeff;
    } else {
      term = coeff.empty() ? w.to_string(generators_) : coeff + "*" + w.to_string(generators_);
    }
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

namespace {

class RelationParser {
 public:
  RelationParser(std::string_view src, const std::vector<std::string>& generators)
      : src_(src), generators_(generators) {}

  NcPoly parse() {
    NcPoly p = expr();
    skip_ws();
    if (pos_ < src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::optional<mpz_class> integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  std::size_t exponent() {
    std::size_t at = pos_;
    auto e = integer();
    if (!e) throw ParseError("expected exponent after '^'", at);
    if (!e->fits_ulong_p() || e->get_ui() > 4096) throw ParseError("exponent too large", at);
    return e->get_ui();
  }

  NcPoly constant(const TPoly& c) const { return NcPoly::constant(generators_, c); }

  NcPoly expr() {
    NcPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  NcPoly term() {
    bool negate = accept('-');
    NcPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return negate ? -acc : acc;
  }

  static NcPoly power(const NcPoly& base, std::size_t k) {
    NcPoly r = NcPoly::constant(base.generators(), TPoly(1));
    for (std::size_t i = 0; i < k; ++i) r = r * base;
    return r;
  }

  NcPoly factor() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", at);
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = *integer();
      mpz_class den = 1;
      if (accept('/')) {
        std::size_t dat = pos_;
        auto d = integer();
        if (!d) throw ParseError("malformed scalar literal: expected denominator", dat);
        if (*d == 0) throw ParseError("malformed scalar literal: zero denominator", dat);
        den = *d;
      }
      mpq_class q(num, den);
      q.canonicalize();
      return constant(TPoly(Scalar(q)));
    }
    if (c == '(') {
      ++pos_;
      NcPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      if (accept('^')) return power(inner, exponent());
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      NcPoly base;
      if (name == "t") {
        base = constant(TPoly::t());
      } else if (name == "i") {
        base = constant(TPoly(Scalar::imaginary_unit()));
      } else {
        auto it = std::find(generators_.begin(), generators_.end(), name);
        if (it == generators_.end()) throw ParseError("unknown generator '" + name + "'", start);
        base = NcPoly::generator(generators_, static_cast<Word::Letter>(it - generators_.begin()));
      }
      if (accept('^')) return power(base, exponent());
      return base;
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  std::string_view src_;
  const std::vector<std::string>& generators_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_ncpoly(std::string_view src, const std::vector<std::string>& generators) {
  for (const auto& g : generators) {
    if (g == "t" || g == "i") throw InvalidInput("generator name '" + g + "' is reserved");
    if (g.empty() || !(std::isalpha(static_cast<unsigned char>(g[0])) || g[0] == '_'))
      throw InvalidInput("invalid generator name '" + g + "'");
  }
  return RelationParser(src, generators).parse();
}

}  // namespace flatdef
