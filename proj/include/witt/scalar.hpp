#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "witt/polynomial.hpp"

namespace witt {

/// Element of Q(l, b, c, a1, a2, iota) in canonical form.
///
/// Two storage modes share one type. Numeric scalars hold a plain Rational and
/// never touch polynomial code. Symbolic scalars hold numerator/denominator
/// polynomials with gcd 1 and a denominator whose graded-lex leading
/// coefficient is 1. A symbolic value that reduces to a constant is demoted to
/// numeric form, so operator== is structural equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}                 // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q) : q_(q) {}      // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(const Poly& p);
  static Scalar symbol(Symbol s) { return Scalar(Poly::var(s)); }
  /// Throws std::domain_error when `den` is zero.
  static Scalar fraction(const Poly& num, const Poly& den);
  /// Parses the text grammar (integers, p/q, symbols, + - * / ^, parentheses).
  static Scalar parse(std::string_view text);

  bool is_symbolic() const { return symbolic_; }
  bool is_zero() const { return !symbolic_ && q_ == 0; }
  bool is_one() const { return !symbolic_ && q_ == 1; }
  bool is_polynomial() const { return !symbolic_ || den_.is_constant(); }
  /// Requires !is_symbolic().
  const Rational& rational() const;
  Poly numerator() const { return symbolic_ ? num_ : Poly(q_.get_num()); }
  Poly denominator() const { return symbolic_ ? den_ : Poly(Rational(q_.get_den())); }
  bool contains(Symbol s) const { return symbolic_ && (num_.contains(s) || den_.contains(s)); }

  /// Throws std::invalid_argument for a missing symbol and std::domain_error at a pole.
  Rational evaluate(const Assignment& at) const;
  Scalar substitute(Symbol s, const Scalar& value) const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  bool operator==(const Scalar& o) const;

  /// Text form accepted by parse().
  std::string to_string() const;

 private:
  void reduce();

  bool symbolic_ = false;
  Rational q_;
  Poly num_;
  Poly den_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Scalar pow(const Scalar& x, int e);

/// True for numeric scalars with an integer value.
bool is_integer(const Scalar& x);

/// One factor (zeta + sign * var) of a factorization linear in `var`.
struct LinearFactor {
  Scalar zeta;
  int sign = 1;
  bool operator==(const LinearFactor&) const = default;
};

/// x = unit * prod(zeta_k + sign_k * var), or ok == false when no such
/// splitting exists over the parameter field.
struct LinearFactorization {
  bool ok = false;
  Scalar unit;
  std::vector<LinearFactor> factors;
  std::string reason;
};

/// Splits a polynomial Scalar into factors linear in `var`. Supported
/// var-degrees are 0, 1 and 2; higher degrees throw std::domain_error.
LinearFactorization factor_linear_in(const Scalar& x, Symbol var);
inline LinearFactorization factor_linear_in_iota(const Scalar& x) {
  return factor_linear_in(x, Symbol::iota);
}

}  // namespace witt
