#include "flatdef/scalar.hpp"

#include <cctype>
#include <optional>
#include <ostream>

#include "flatdef/error.hpp"

namespace flatdef {

Scalar Scalar::rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidInput("zero denominator");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  if (is_real()) return Scalar(1 / re_);
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::string rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

class ScalarLexer {
 public:
  explicit ScalarLexer(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

  bool accept(char c) {
    if (!done() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<mpz_class> integer() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  // sign? (uint ('/' uint)? ('*' 'i')? | 'i'); returns (value, imaginary?)
  std::pair<mpq_class, bool> term(bool require_sign) {
    int sign = 1;
    if (accept('-')) {
      sign = -1;
    } else if (!accept('+') && require_sign) {
      throw ParseError("expected '+' or '-' before imaginary part", pos_);
    }
    if (accept('i')) return {mpq_class(sign), true};
    auto num = integer();
    if (!num) throw ParseError("expected digits in scalar literal", pos_);
    mpz_class den = 1;
    if (accept('/')) {
      auto d = integer();
      if (!d) throw ParseError("expected denominator in scalar literal", pos_);
      if (*d == 0) throw ParseError("zero denominator in scalar literal", pos_);
      den = *d;
    }
    mpq_class value(sign * *num, den);
    value.canonicalize();
    bool imaginary = false;
    if (accept('*')) {
      if (!accept('i')) throw ParseError("expected 'i' after '*' in scalar literal", pos_);
      imaginary = true;
    }
    return {value, imaginary};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw ParseError("empty scalar literal", 0);

  ScalarLexer lex(compact);
  auto [first, first_imag] = lex.term(false);
  if (lex.done()) return first_imag ? Scalar(0, first) : Scalar(first);
  if (first_imag) throw ParseError("real part must precede imaginary part", lex.pos());
  auto [second, second_imag] = lex.term(true);
  if (!second_imag) throw ParseError("second scalar component must be imaginary", lex.pos());
  if (!lex.done()) throw ParseError("trailing characters in scalar literal", lex.pos());
  return Scalar(first, second);
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_text(re_);
  std::string imag = rational_text(abs(im_)) + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return rational_text(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace flatdef
