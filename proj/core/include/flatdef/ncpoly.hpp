#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatdef/tpoly.hpp"

namespace flatdef {

/// A monomial in the free algebra: a sequence of generator indices.
/// The empty word is the identity monomial 1. Words are totally ordered by
/// deglex: shorter words first, ties broken lexicographically by index.
class Word {
 public:
  using Letter = std::uint16_t;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word letter(Letter l) { return Word({l}); }
  static Word power(Letter l, std::size_t k) { return Word(std::vector<Letter>(k, l)); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  /// "x^2*y*x" style; "1" for the empty word.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Letter> letters_;
};

/// All words of length exactly `length` over `alphabet_size` letters, in
/// increasing deglex order.
std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t length);

/// Noncommutative polynomial over a named alphabet with coefficients in
/// Q(i)[t]. Only nonzero terms are stored.
class NcPoly {
 public:
  NcPoly() = default;
  explicit NcPoly(std::vector<std::string> generators) : generators_(std::move(generators)) {}

  static NcPoly constant(std::vector<std::string> generators, const TPoly& c);
  static NcPoly generator(std::vector<std::string> generators, Word::Letter index);
  static NcPoly monomial(std::vector<std::string> generators, const Word& w, const TPoly& c = TPoly(1));

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::map<Word, TPoly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Longest word length; -1 for zero.
  long degree() const;
  /// Highest power of t among the coefficients; -1 for zero.
  long t_degree() const;
  bool is_constant_in_t() const { return t_degree() <= 0; }

  void add_term(const Word& w, const TPoly& c);
  /// Substitute t = s in every coefficient.
  NcPoly specialize(const Scalar& s) const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  /// Throws DimensionError when the alphabets differ.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  NcPoly operator-() const;
  friend bool operator==(const NcPoly& a, const NcPoly& b) = default;

  /// Canonical text: terms in decreasing deglex order, parseable by
  /// parse_ncpoly with the same generator list.
  std::string to_string() const;

 private:
  void check_alphabet(const NcPoly& o) const;
  std::vector<std::string> generators_;
  std::map<Word, TPoly> terms_;
};

/// Parse the relation grammar:
///
///   expr   := term (('+'|'-') term)*
///   term   := ['-'] factor ('*' factor)*
///   factor := uint ['/' uint] | name ['^' uint] | '(' expr ')' ['^' uint]
///
/// `t` is the deformation parameter and `i` the imaginary unit; neither may
/// be used as a generator name. Juxtaposition is not multiplication.
NcPoly parse_ncpoly(std::string_view src, const std::vector<std::string>& generators);

}  // namespace flatdef
