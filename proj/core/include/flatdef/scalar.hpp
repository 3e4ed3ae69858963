#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace flatdef {

/// Exact Gaussian rational re + im*i with arbitrary-precision parts.
///
/// Both parts are kept canonical (positive denominators, lowest terms) by
/// GMP after every operation. Arithmetic takes a real-only fast path when
/// both operands have zero imaginary part, which is the common case.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// Build p/q from integers; q must be nonzero.
  static Scalar rational(long numerator, long denominator);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parse `a`, `a/b`, `c/d*i`, `a/b+c/d*i`, `a/b-c/d*i` (and `i`, `-i`).
  static Scalar parse(std::string_view text);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2 = re^2 + im^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator==(const Scalar& a, const mpq_class& q) {
    return a.is_real() && a.re_ == q;
  }

  /// Canonical text form; Scalar::parse(to_string()) == *this.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace flatdef
