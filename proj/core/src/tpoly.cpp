#include "flatdef/tpoly.hpp"

#include "flatdef/error.hpp"

namespace flatdef {

TPoly::TPoly(Scalar constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

TPoly::TPoly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

TPoly TPoly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> cs(degree + 1);
  cs[degree] = c;
  return TPoly(std::move(cs));
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar TPoly::eval(const Scalar& s) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= s;
    acc += *it;
  }
  return acc;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TPoly(std::move(out));
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TPoly exact_quotient(const TPoly& num, const TPoly& den) {
  if (den.is_zero()) throw InvalidInput("polynomial division by zero");
  TPoly rem = num;
  if (rem.degree() < den.degree()) {
    if (!rem.is_zero()) throw InvalidInput("polynomial division is not exact");
    return {};
  }
  std::vector<Scalar> q(static_cast<std::size_t>(rem.degree() - den.degree() + 1));
  Scalar lead_inv = den.coeffs_.back().inverse();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    auto shift = static_cast<std::size_t>(rem.degree() - den.degree());
    Scalar c = rem.coeffs_.back() * lead_inv;
    q[shift] = c;
    rem -= TPoly::monomial(c, shift) * den;
  }
  if (!rem.is_zero()) throw InvalidInput("polynomial division is not exact");
  return TPoly(std::move(q));
}

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mag;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      Scalar a = negative ? -c : c;
      mag = (k > 0 && a.is_one()) ? "" : a.to_string();
    } else {
      mag = "(" + c.to_string() + ")";
    }
    std::string var = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    std::string term = mag.empty() ? var : (var.empty() ? mag : mag + "*" + var);
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace flatdef
