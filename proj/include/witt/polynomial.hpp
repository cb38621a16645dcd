#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace witt {

using Rational = mpq_class;

/// The six parameter indeterminates, listed in increasing monomial-order weight.
enum class Symbol : std::uint8_t { lambda = 0, b, c, alpha1, alpha2, iota };

inline constexpr int kNumSymbols = 6;
inline constexpr std::array<Symbol, kNumSymbols> kAllSymbols = {
    Symbol::lambda, Symbol::b, Symbol::c, Symbol::alpha1, Symbol::alpha2, Symbol::iota};

std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

using Assignment = std::map<Symbol, Rational>;

/// Exponent vector packed into 64 bits: total degree in the top 10 bits, then
/// 9 bits per symbol with iota most significant. Unsigned comparison of the
/// packed word is exactly graded lexicographic order.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial var(Symbol s, unsigned exp = 1);

  unsigned exponent(Symbol s) const {
    return static_cast<unsigned>((bits_ >> shift(s)) & kExpMask);
  }
  unsigned degree() const { return static_cast<unsigned>(bits_ >> kDegreeShift); }
  bool is_one() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  bool divides(Monomial other) const;
  Monomial operator*(Monomial other) const;
  /// Requires divides(other) to hold for `other / *this`.
  Monomial operator/(Monomial divisor) const;
  static Monomial gcd(Monomial a, Monomial b);
  Monomial with_exponent(Symbol s, unsigned exp) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  static constexpr unsigned kExpBits = 9;
  static constexpr std::uint64_t kExpMask = (1u << kExpBits) - 1;
  static constexpr unsigned kDegreeShift = 54;

 public:
  static constexpr unsigned kMaxExponent = kExpMask;
  static constexpr unsigned kMaxDegree = 1023;

 private:
  static constexpr unsigned shift(Symbol s) { return kExpBits * static_cast<unsigned>(s); }
  std::uint64_t bits_ = 0;
};

/// Sparse multivariate polynomial over Q in the six parameter symbols.
/// Terms are stored in strictly decreasing graded-lex order with nonzero
/// coefficients, so the representation is canonical.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
  };

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(Symbol s);
  static Poly monomial(Monomial m, const Rational& c);
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  const Term& leading() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  unsigned total_degree() const;
  unsigned degree_in(Symbol s) const;
  bool contains(Symbol s) const { return degree_in(s) > 0; }
  /// Multiplies by the inverse leading coefficient (zero stays zero).
  Poly monic() const;

  /// Coefficients of s^0 .. s^d, each free of s.
  std::vector<Poly> coefficients_in(Symbol s) const;
  static Poly from_coefficients(Symbol s, const std::vector<Poly>& coeffs);

  Rational evaluate(const Assignment& at) const;
  /// Replaces one symbol by a polynomial.
  Poly substitute(Symbol s, const Poly& value) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly mul_term(Monomial m, const Rational& c) const;

  /// Exact division; std::nullopt when `divisor` does not divide `*this`.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Poly pow(const Poly& p, unsigned e);

/// Greatest common divisor, normalized to leading coefficient 1 (gcd(0,0)=0).
Poly gcd(const Poly& a, const Poly& b);

/// Square root in Q[symbols] when `p` is a perfect square.
std::optional<Poly> sqrt_exact(const Poly& p);

std::string to_string(const Rational& q);

}  // namespace witt
