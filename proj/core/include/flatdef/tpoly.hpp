#pragma once

#include <string>
#include <vector>

#include "flatdef/scalar.hpp"

namespace flatdef {

/// Univariate polynomial in the deformation parameter t with exact
/// coefficients. Trailing (highest-degree) zeros are trimmed, so the zero
/// polynomial has no coefficients.
class TPoly {
 public:
  TPoly() = default;
  TPoly(Scalar constant);  // NOLINT(google-explicit-constructor)
  TPoly(long constant) : TPoly(Scalar(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit TPoly(std::vector<Scalar> coefficients);

  static TPoly t() { return monomial(1, 1); }
  static TPoly monomial(const Scalar& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }
  Scalar constant_term() const { return coefficient(0); }

  /// Exact Horner evaluation at t = s.
  Scalar eval(const Scalar& s) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly operator-() const;
  friend bool operator==(const TPoly& a, const TPoly& b) = default;

  /// Quotient of a division known to be exact; throws InvalidInput otherwise.
  friend TPoly exact_quotient(const TPoly& num, const TPoly& den);

  /// Text in the relation grammar, e.g. "1 - 2*t + t^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

}  // namespace flatdef
