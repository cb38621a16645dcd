#include "witt/scalar.hpp"

#include <algorithm>

namespace witt {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("division by zero");
  q_ = Rational(num, den);
  q_.canonicalize();
}

Scalar::Scalar(const Poly& p) {
  if (p.is_constant()) {
    q_ = p.constant_value();
  } else {
    symbolic_ = true;
    num_ = p;
    den_ = Poly(1);
  }
}

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  Scalar s;
  s.symbolic_ = true;
  s.num_ = num;
  s.den_ = den;
  s.reduce();
  return s;
}

void Scalar::reduce() {
  if (!symbolic_) return;
  if (den_.is_zero()) throw std::domain_error("division by zero");
  if (num_.is_zero()) {
    *this = Scalar();
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  const Rational inv = Rational(1) / den_.leading_coeff();
  num_ *= inv;
  den_ *= inv;
  if (den_.is_constant() && num_.is_constant()) {
    q_ = num_.constant_value();
    symbolic_ = false;
    num_ = Poly();
    den_ = Poly();
  }
}

const Rational& Scalar::rational() const {
  if (symbolic_) throw std::logic_error("rational() on a symbolic scalar: " + to_string());
  return q_;
}

Rational Scalar::evaluate(const Assignment& at) const {
  if (!symbolic_) return q_;
  const Rational d = den_.evaluate(at);
  if (d == 0) throw std::domain_error("denominator vanishes at the assignment: " + to_string());
  return num_.evaluate(at) / d;
}

namespace {

Scalar substitute_poly(const Poly& p, Symbol s, const Scalar& value) {
  const auto coeffs = p.coefficients_in(s);
  Scalar acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * value + Scalar(*it);
  return acc;
}

}  // namespace

Scalar Scalar::substitute(Symbol s, const Scalar& value) const {
  if (!contains(s)) return *this;
  return substitute_poly(num_, s, value) / substitute_poly(den_, s, value);
}

Scalar Scalar::inverse() const {
  if (!symbolic_) {
    if (q_ == 0) throw std::domain_error("division by zero");
    return Scalar(Rational(1) / q_);
  }
  Scalar s;
  s.symbolic_ = true;
  s.num_ = den_;
  s.den_ = num_;
  const Rational inv = Rational(1) / s.den_.leading_coeff();
  s.num_ *= inv;
  s.den_ *= inv;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (symbolic_) {
    s.num_ = -num_;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.symbolic_ && !b.symbolic_) return Scalar(Rational(a.q_ + b.q_));
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  Scalar s;
  s.symbolic_ = true;
  const Poly an = a.numerator();
  const Poly ad = a.denominator();
  const Poly bn = b.numerator();
  const Poly bd = b.denominator();
  if (ad == bd) {
    s.num_ = an + bn;
    s.den_ = ad;
  } else if (ad.is_constant() && bd.is_constant()) {
    s.num_ = an * bd + bn * ad;
    s.den_ = ad * bd;
  } else {
    const Poly g = gcd(ad, bd);
    const Poly ad_g = *ad.divide_exact(g);
    const Poly bd_g = *bd.divide_exact(g);
    s.num_ = an * bd_g + bn * ad_g;
    s.den_ = ad * bd_g;
  }
  s.reduce();
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.symbolic_ && !b.symbolic_) return Scalar(Rational(a.q_ * b.q_));
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (!b.symbolic_) {
    Scalar s = a;
    s.num_ *= b.q_;
    return s;
  }
  if (!a.symbolic_) {
    Scalar s = b;
    s.num_ *= a.q_;
    return s;
  }
  Scalar s;
  s.symbolic_ = true;
  if (a.den_.is_constant() && b.den_.is_constant()) {
    s.num_ = a.num_ * b.num_;
    s.den_ = Poly(1);
  } else {
    // Cross-cancel before multiplying; both inputs are already reduced.
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    s.num_ = *a.num_.divide_exact(g1) * *b.num_.divide_exact(g2);
    s.den_ = *a.den_.divide_exact(g2) * *b.den_.divide_exact(g1);
  }
  s.reduce();
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (symbolic_ != o.symbolic_) return false;
  if (!symbolic_) return q_ == o.q_;
  return num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::to_string() const {
  if (!symbolic_) return q_.get_str();
  if (den_ == Poly(1)) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  const bool bare_symbol = den_.terms().size() == 1 && den_.leading_coeff() == 1 &&
                           den_.leading().mono.degree() == 1;
  if (!bare_symbol) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar pow(const Scalar& x, int e) {
  if (e < 0) return pow(x.inverse(), -e);
  Scalar result(1);
  for (int k = 0; k < e; ++k) result *= x;
  return result;
}

bool is_integer(const Scalar& x) {
  return !x.is_symbolic() && x.rational().get_den() == 1;
}

// ---------------------------------------------------------------- factoring

namespace {

int leading_sign(const Scalar& x) {
  if (!x.is_symbolic()) return x.rational() < 0 ? -1 : 1;
  return x.numerator().leading_coeff() < 0 ? -1 : 1;
}

}  // namespace

LinearFactorization factor_linear_in(const Scalar& x, Symbol var) {
  if (!x.is_polynomial()) throw std::invalid_argument("factor_linear_in expects a polynomial: " + x.to_string());
  LinearFactorization out;
  if (x.is_zero()) {
    out.reason = "zero has no factorization";
    return out;
  }
  const Poly p = x.is_symbolic() ? x.numerator() : Poly(x.rational());
  const auto coeffs = p.coefficients_in(var);
  const std::size_t degree = coeffs.size() - 1;
  if (degree > 2) {
    throw std::domain_error("factor_linear_in supports degree <= 2 in " + std::string(symbol_name(var)));
  }
  const Scalar lead(coeffs[degree]);
  out.unit = lead;
  std::vector<Scalar> roots;
  if (degree == 1) {
    roots.push_back(-Scalar(coeffs[0]) / lead);
  } else if (degree == 2) {
    const Scalar p1 = Scalar(coeffs[1]) / lead;
    const Scalar p0 = Scalar(coeffs[0]) / lead;
    const Scalar disc = p1 * p1 - Scalar(4) * p0;
    const Poly dn = disc.numerator();
    const Poly dd = disc.denominator();
    auto root = sqrt_exact(dn * dd);
    if (!root) {
      out.reason = "discriminant " + disc.to_string() + " is not a square in the parameter field";
      return out;
    }
    const Scalar sq = Scalar::fraction(*root, dd);
    roots.push_back((-p1 + sq) / Scalar(2));
    roots.push_back((-p1 - sq) / Scalar(2));
  }
  for (const auto& rho : roots) {
    LinearFactor f{-rho, 1};
    if (!f.zeta.is_zero() && leading_sign(f.zeta) < 0) {
      f.zeta = -f.zeta;
      f.sign = -1;
      out.unit = -out.unit;
    }
    out.factors.push_back(std::move(f));
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const LinearFactor& a, const LinearFactor& b) {
    const auto sa = a.zeta.to_string();
    const auto sb = b.zeta.to_string();
    return sa != sb ? sa < sb : a.sign < b.sign;
  });
  out.ok = true;
  return out;
}

}  // namespace witt
