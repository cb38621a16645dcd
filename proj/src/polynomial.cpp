#include "witt/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace witt {

namespace {

constexpr std::array<std::string_view, kNumSymbols> kNames = {"l", "b", "c", "a1", "a2", "iota"};

}  // namespace

std::string_view symbol_name(Symbol s) { return kNames[static_cast<int>(s)]; }

std::optional<Symbol> symbol_from_name(std::string_view name) {
  for (Symbol s : kAllSymbols) {
    if (kNames[static_cast<int>(s)] == name) return s;
  }
  return std::nullopt;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(Symbol s, unsigned exp) {
  if (exp > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  Monomial m;
  m.bits_ = (static_cast<std::uint64_t>(exp) << shift(s)) | (static_cast<std::uint64_t>(exp) << kDegreeShift);
  return m;
}

bool Monomial::divides(Monomial other) const {
  for (Symbol s : kAllSymbols) {
    if (exponent(s) > other.exponent(s)) return false;
  }
  return true;
}

Monomial Monomial::operator*(Monomial other) const {
  const unsigned total = degree() + other.degree();
  if (total > kMaxDegree) throw std::overflow_error("monomial degree overflow");
  for (Symbol s : kAllSymbols) {
    if (total <= kMaxExponent) break;
    if (exponent(s) + other.exponent(s) > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  }
  Monomial m;
  m.bits_ = bits_ + other.bits_;
  return m;
}

Monomial Monomial::operator/(Monomial divisor) const {
  Monomial m;
  m.bits_ = bits_ - divisor.bits_;
  return m;
}

Monomial Monomial::gcd(Monomial a, Monomial b) {
  Monomial m;
  for (Symbol s : kAllSymbols) {
    const unsigned e = std::min(a.exponent(s), b.exponent(s));
    if (e > 0) m = m * var(s, e);
  }
  return m;
}

Monomial Monomial::with_exponent(Symbol s, unsigned exp) const {
  const unsigned old = exponent(s);
  Monomial m;
  m.bits_ = bits_ & ~(kExpMask << shift(s));
  m.bits_ -= static_cast<std::uint64_t>(old) << kDegreeShift;
  return m * var(s, exp);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::var(Symbol s) { return monomial(Monomial::var(s), Rational(1)); }

Poly Poly::monomial(Monomial m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!terms_.back().mono.is_one()) return Rational(0);
  return terms_.back().coeff;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned Poly::degree_in(Symbol s) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(s));
  return d;
}

Poly Poly::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  Poly p = *this;
  p *= Rational(1) / terms_.front().coeff;
  return p;
}

std::vector<Poly> Poly::coefficients_in(Symbol s) const {
  std::vector<std::vector<Term>> buckets(degree_in(s) + 1);
  for (const auto& t : terms_) {
    buckets[t.mono.exponent(s)].push_back({t.mono.with_exponent(s, 0), t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::from_coefficients(Symbol s, const std::vector<Poly>& coeffs) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Monomial m = Monomial::var(s, static_cast<unsigned>(k));
    for (const auto& t : coeffs[k].terms()) all.push_back({t.mono * m, t.coeff});
  }
  return from_terms(std::move(all));
}

Rational Poly::evaluate(const Assignment& at) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (Symbol s : kAllSymbols) {
      const unsigned e = t.mono.exponent(s);
      if (e == 0) continue;
      auto it = at.find(s);
      if (it == at.end()) {
        throw std::invalid_argument("no value assigned to symbol '" + std::string(symbol_name(s)) + "'");
      }
      for (unsigned k = 0; k < e; ++k) v *= it->second;
    }
    sum += v;
  }
  return sum;
}

Poly Poly::substitute(Symbol s, const Poly& value) const {
  std::vector<Poly> powers{Poly(1)};
  Poly out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(s);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    out += powers[e].mul_term(t.mono.with_exponent(s, 0), t.coeff);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

template <bool Subtract>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(b[j]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = Subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly Poly::mul_term(Monomial m, const Rational& c) const {
  Poly p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  return Poly::from_terms(std::move(prod));
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (divisor.terms_.size() == 1 && divisor.terms_[0].mono.is_one()) {
    Poly q = *this;
    q *= Rational(1) / divisor.terms_[0].coeff;
    return q;
  }
  const Term& lead = divisor.terms_.front();
  Poly rem = *this;
  Poly quot;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.front();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    const Monomial qm = lt.mono / lead.mono;
    Rational qc = lt.coeff / lead.coeff;
    rem -= divisor.mul_term(qm, qc);
    quot.terms_.push_back({qm, std::move(qc)});
  }
  return quot;
}

Poly pow(const Poly& p, unsigned e) {
  Poly result(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    std::string mono;
    for (int k = kNumSymbols - 1; k >= 0; --k) {
      const Symbol s = static_cast<Symbol>(k);
      const unsigned e = t.mono.exponent(s);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += symbol_name(s);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<Poly> sqrt_exact(const Poly& p) {
  if (p.is_zero()) return Poly();
  const auto& lt = p.leading();
  Monomial root_mono;
  for (Symbol s : kAllSymbols) {
    const unsigned e = lt.mono.exponent(s);
    if (e % 2 != 0) return std::nullopt;
    if (e > 0) root_mono = root_mono * Monomial::var(s, e / 2);
  }
  auto root_coeff = rational_sqrt(lt.coeff);
  if (!root_coeff) return std::nullopt;

  Poly root = Poly::monomial(root_mono, *root_coeff);
  Poly rem = p - root * root;
  const Monomial lead_mono = root_mono;
  const Rational twice_lead = 2 * *root_coeff;
  Monomial last = root_mono;
  while (!rem.is_zero()) {
    const auto& r = rem.leading();
    if (!lead_mono.divides(r.mono)) return std::nullopt;
    const Monomial m = r.mono / lead_mono;
    if (!(m < last)) return std::nullopt;
    const Poly t = Poly::monomial(m, r.coeff / twice_lead);
    rem -= (root * t) * Rational(2) + t * t;
    root += t;
    last = m;
  }
  return root;
}

}  // namespace witt
