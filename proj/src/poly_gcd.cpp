// Multivariate GCD over Q by recursion on variables: content/primitive-part
// split in a chosen main variable, then a primitive pseudo-remainder sequence
// whose coefficients live in Q[remaining symbols].

#include <stdexcept>

#include "witt/polynomial.hpp"

namespace witt {

namespace {

using Univariate = std::vector<Poly>;  // index = power of the main variable

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly content_of(const Univariate& u) {
  Poly g;
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return Poly(1);
  }
  return g;
}

Univariate primitive_part(Univariate u) {
  trim(u);
  if (u.empty()) return u;
  const Poly cont = content_of(u);
  for (auto& c : u) c = exact(c, cont);
  const Rational inv = Rational(1) / u.back().leading_coeff();
  for (auto& c : u) c *= inv;
  return u;
}

// Pseudo-remainder of a by b in the main variable.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  const Poly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Poly la = a.back();
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
    // Keep the rational content small; this does not change the PRS.
    if (!a.empty()) {
      const Rational inv = Rational(1) / a.back().leading_coeff();
      for (auto& c : a) c *= inv;
    }
  }
  return a;
}

Poly prs_gcd(Univariate a, Univariate b, Symbol v) {
  if (a.size() < b.size()) std::swap(a, b);
  for (;;) {
    Univariate r = pseudo_remainder(a, b);
    if (r.empty()) return Poly::from_coefficients(v, primitive_part(b));
    if (r.size() == 1) return Poly(1);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
}

Poly monomial_content(const Poly& p) {
  Monomial m = p.leading().mono;
  for (const auto& t : p.terms()) m = Monomial::gcd(m, t.mono);
  return Poly::monomial(m, Rational(1));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.is_monomial() || b.is_monomial()) {
    Monomial m = a.leading().mono;
    for (const auto& t : a.terms()) m = Monomial::gcd(m, t.mono);
    for (const auto& t : b.terms()) m = Monomial::gcd(m, t.mono);
    return Poly::monomial(m, Rational(1));
  }
  if (a == b) return a.monic();

  // Pull out common monomial factors first; they are cheap and common.
  const Poly ma = monomial_content(a);
  const Poly mb = monomial_content(b);
  if (!ma.leading().mono.is_one() || !mb.leading().mono.is_one()) {
    const Poly mg = gcd(ma, mb);
    return (mg * gcd(exact(a, ma), exact(b, mb))).monic();
  }

  // A symbol present in only one argument cannot occur in the gcd.
  for (Symbol s : kAllSymbols) {
    const bool in_a = a.contains(s);
    const bool in_b = b.contains(s);
    if (in_a && !in_b) return gcd(content_of(a.coefficients_in(s)), b);
    if (in_b && !in_a) return gcd(a, content_of(b.coefficients_in(s)));
  }

  // Main variable: the shared symbol with the smallest degree.
  Symbol main = Symbol::lambda;
  unsigned best = ~0u;
  for (Symbol s : kAllSymbols) {
    const unsigned d = std::max(a.degree_in(s), b.degree_in(s));
    if (d > 0 && d < best) {
      best = d;
      main = s;
    }
  }

  Univariate ua = a.coefficients_in(main);
  Univariate ub = b.coefficients_in(main);
  const Poly ca = content_of(ua);
  const Poly cb = content_of(ub);
  const Poly g0 = gcd(ca, cb);
  for (auto& c : ua) c = exact(c, ca);
  for (auto& c : ub) c = exact(c, cb);
  return (g0 * prs_gcd(std::move(ua), std::move(ub), main)).monic();
}

}  // namespace witt
