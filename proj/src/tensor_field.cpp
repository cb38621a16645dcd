#include "witt/tensor_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace witt {

Lattice::Lattice(std::initializer_list<int> coords) {
  if (coords.size() > kMaxRank) throw std::invalid_argument("lattice rank exceeds kMaxRank");
  n = static_cast<int>(coords.size());
  std::copy(coords.begin(), coords.end(), v.begin());
}

Lattice Lattice::zero(int n) {
  if (n < 0 || n > kMaxRank) throw std::invalid_argument("lattice rank out of range");
  Lattice r;
  r.n = n;
  return r;
}

Lattice Lattice::unit(int n, int k) {
  Lattice r = zero(n);
  r[k - 1] = 1;
  return r;
}

Lattice Lattice::operator+(const Lattice& o) const {
  if (n != o.n) throw std::invalid_argument("lattice rank mismatch");
  Lattice out = *this;
  for (int k = 0; k < n; ++k) out[k] += o[k];
  return out;
}

Lattice Lattice::operator-(const Lattice& o) const { return *this + (-o); }

Lattice Lattice::operator-() const {
  Lattice out = *this;
  for (int k = 0; k < n; ++k) out[k] = -out[k];
  return out;
}

ModuleElement ModuleElement::basis(long index, const Lattice& r, Scalar coeff) {
  ModuleElement x;
  x.add(BasisKey{index, r}, coeff);
  return x;
}

Scalar ModuleElement::coeff(const BasisKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

void ModuleElement::add(const BasisKey& k, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

ModuleElement ModuleElement::operator*(const Scalar& s) const {
  ModuleElement out;
  if (s.is_zero()) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
  return out;
}

TensorFieldModule TensorFieldModule::make(GlModule V, std::vector<Scalar> alpha) {
  if (static_cast<int>(alpha.size()) != rank_of(V)) {
    throw std::invalid_argument("alpha length must equal the rank of the gl module");
  }
  if (alpha.size() > static_cast<std::size_t>(kMaxRank)) throw std::invalid_argument("rank exceeds kMaxRank");
  return TensorFieldModule{std::move(V), std::move(alpha)};
}

namespace {

void require_rank(const TensorFieldModule& F, const WittGenerator& D) {
  if (static_cast<int>(D.u.size()) != F.n() || D.r.n != F.n()) {
    throw std::invalid_argument("Witt generator dimension does not match the module");
  }
}

void require_rank(const TensorFieldModule& F, const Lattice& r) {
  if (r.n != F.n()) throw std::invalid_argument("lattice point dimension does not match the module");
}

// Adds coeff * (g v_index) at lattice point `at`.
void add_gl_image(const TensorFieldModule& F, int i, int j, long index, const Lattice& at, const Scalar& coeff,
                  ModuleElement& out) {
  const GlVector img = act_gl(F.V, i, j, GlVector::basis(index));
  for (const auto& [k, c] : img.terms()) out.add(BasisKey{k, at}, coeff * c);
}

Scalar shifted(const TensorFieldModule& F, const Lattice& m, int k) { return Scalar(m[k]) + F.alpha[k]; }

}  // namespace

ModuleElement act_witt(const TensorFieldModule& F, const WittGenerator& D, const ModuleElement& x) {
  require_rank(F, D);
  const int n = F.n();
  ModuleElement out;
  for (const auto& [key, a] : x.terms()) {
    require_rank(F, key.r);
    const Lattice target = key.r + D.r;
    Scalar weight;
    for (int k = 0; k < n; ++k) {
      if (!D.u[k].is_zero()) weight += D.u[k] * shifted(F, key.r, k);
    }
    out.add(BasisKey{key.index, target}, a * weight);
    for (int i = 0; i < n; ++i) {
      if (D.r[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (D.u[j].is_zero()) continue;
        add_gl_image(F, i + 1, j + 1, key.index, target, a * Scalar(D.r[i]) * D.u[j], out);
      }
    }
  }
  return out;
}

WittGenerator witt_bracket(const WittGenerator& a, const WittGenerator& b) {
  const std::size_t n = a.u.size();
  if (b.u.size() != n) throw std::invalid_argument("Witt generator dimension mismatch");
  Scalar us;
  Scalar vr;
  for (std::size_t k = 0; k < n; ++k) {
    us += a.u[k] * Scalar(b.r[static_cast<int>(k)]);
    vr += b.u[k] * Scalar(a.r[static_cast<int>(k)]);
  }
  WittGenerator w;
  w.r = a.r + b.r;
  for (std::size_t k = 0; k < n; ++k) w.u.push_back(us * b.u[k] - vr * a.u[k]);
  return w;
}

WittGenerator embedded_generator(int n, int i, int j) {
  if (i < 1 || i > n + 1 || j < 1 || j > n + 1) throw std::out_of_range("generator index out of range");
  WittGenerator D;
  D.u.assign(static_cast<std::size_t>(n), Scalar());
  D.r = Lattice::zero(n);
  if (i <= n && j <= n) {
    // t_i t_j^{-1} d_j
    D.u[j - 1] = Scalar(1);
    D.r = Lattice::unit(n, i) - Lattice::unit(n, j);
  } else if (i <= n) {
    // -t_i sum_k d_k
    for (auto& u : D.u) u = Scalar(-1);
    D.r = Lattice::unit(n, i);
  } else if (j <= n) {
    // t_j^{-1} d_j
    D.u[j - 1] = Scalar(1);
    D.r = -Lattice::unit(n, j);
  } else {
    for (auto& u : D.u) u = Scalar(-1);
  }
  return D;
}

ModuleElement act_sl_embedded(const TensorFieldModule& F, int i, int j, const ModuleElement& x) {
  const int n = F.n();
  if (i < 1 || i > n + 1 || j < 1 || j > n + 1) throw std::out_of_range("generator index out of range");
  ModuleElement out;
  for (const auto& [key, a] : x.terms()) {
    require_rank(F, key.r);
    const Lattice& r = key.r;
    if (i <= n && j <= n) {
      const Lattice target = r + Lattice::unit(n, i) - Lattice::unit(n, j);
      out.add(BasisKey{key.index, target}, a * shifted(F, r, j - 1));
      add_gl_image(F, i, j, key.index, target, a, out);
      add_gl_image(F, j, j, key.index, target, -a, out);
    } else if (i <= n) {
      const Lattice target = r + Lattice::unit(n, i);
      Scalar total;
      for (int k = 0; k < n; ++k) total += shifted(F, r, k);
      out.add(BasisKey{key.index, target}, -a * total);
      for (int k = 1; k <= n; ++k) add_gl_image(F, i, k, key.index, target, -a, out);
    } else if (j <= n) {
      const Lattice target = r - Lattice::unit(n, j);
      out.add(BasisKey{key.index, target}, a * shifted(F, r, j - 1));
      add_gl_image(F, j, j, key.index, target, -a, out);
    } else {
      Scalar total;
      for (int k = 0; k < n; ++k) total += shifted(F, r, k);
      out.add(key, -a * total);
    }
  }
  return out;
}

ModuleElement commutator(const ElementOp& a, const ElementOp& b, const ModuleElement& x) {
  return a(b(x)) - b(a(x));
}

namespace {

void lattice_box(int n, int radius, std::vector<Lattice>& out) {
  Lattice r = Lattice::zero(n);
  for (int k = 0; k < n; ++k) r[k] = -radius;
  for (;;) {
    out.push_back(r);
    int k = n - 1;
    while (k >= 0 && r[k] == radius) {
      r[k] = -radius;
      --k;
    }
    if (k < 0) return;
    ++r[k];
  }
}

std::vector<long> gl_indices(const GlModule& V, long radius) {
  std::vector<long> out;
  if (const auto* f = std::get_if<FinDimGlModule>(&V)) {
    for (long k = 0; k < f->dim(); ++k) out.push_back(k);
  } else {
    for (long k = -radius; k <= radius; ++k) out.push_back(k);
  }
  return out;
}

}  // namespace

std::vector<ModuleElement> window_basis(const TensorFieldModule& F, long index_radius, int lattice_radius) {
  std::vector<Lattice> points;
  lattice_box(F.n(), lattice_radius, points);
  std::vector<ModuleElement> out;
  for (long idx : gl_indices(F.V, index_radius)) {
    for (const auto& r : points) out.push_back(ModuleElement::basis(idx, r));
  }
  return out;
}

Report witt_bracket_check(const TensorFieldModule& F, const WittGenerator& a, const WittGenerator& b,
                          const std::vector<ModuleElement>& xs) {
  Report rep;
  rep.check = "witt_bracket";
  rep.anchor = "Witt bracket [D(u,r),D(v,s)] = D((u|s)v-(v|r)u, r+s)";
  rep.params["first"] = to_json(a);
  rep.params["second"] = to_json(b);
  const WittGenerator w = witt_bracket(a, b);
  rep.params["bracket"] = to_json(w);
  auto op = [&F](const WittGenerator& D) { return [&F, D](const ModuleElement& x) { return act_witt(F, D, x); }; };
  for (const auto& x : xs) {
    const ModuleElement res = commutator(op(a), op(b), x) - act_witt(F, w, x);
    if (!res.is_zero()) rep.add_residual({{"element", to_json(x, F.alpha)}, {"residual", to_json(res, F.alpha)}});
  }
  rep.stats["elements"] = xs.size();
  return rep;
}

Report jacobi_check(const TensorFieldModule& F, const WittGenerator& a, const WittGenerator& b,
                    const WittGenerator& c, const std::vector<ModuleElement>& xs) {
  Report rep;
  rep.check = "witt_jacobi";
  rep.anchor = "Jacobi identity for the Witt action";
  rep.params["generators"] = {to_json(a), to_json(b), to_json(c)};
  auto op = [&F](const WittGenerator& D) -> ElementOp {
    return [&F, D](const ModuleElement& x) { return act_witt(F, D, x); };
  };
  auto nested = [&](const WittGenerator& p, const WittGenerator& q, const WittGenerator& s, const ModuleElement& x) {
    const ElementOp inner = [&](const ModuleElement& y) { return commutator(op(q), op(s), y); };
    return commutator(op(p), inner, x);
  };
  for (const auto& x : xs) {
    ModuleElement sum = nested(a, b, c, x);
    sum += nested(b, c, a, x);
    sum += nested(c, a, b, x);
    if (!sum.is_zero()) rep.add_residual({{"element", to_json(x, F.alpha)}, {"residual", to_json(sum, F.alpha)}});
  }
  rep.stats["elements"] = xs.size();
  return rep;
}

ModuleElement de_rham_differential(int n, int k, const std::vector<Scalar>& alpha, const ModuleElement& x) {
  if (k < 0 || k >= n) throw std::invalid_argument("de Rham differential needs 0 <= k < n");
  if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("alpha length must equal n");
  const auto src = exterior_power(n, k).labels();
  const auto dst = exterior_power(n, k + 1).labels();
  std::map<std::vector<int>, long> position;
  for (std::size_t p = 0; p < dst.size(); ++p) position[dst[p]] = static_cast<long>(p);

  ModuleElement out;
  for (const auto& [key, a] : x.terms()) {
    if (key.index < 0 || key.index >= static_cast<long>(src.size())) {
      throw std::out_of_range("form index out of range");
    }
    if (key.r.n != n) throw std::invalid_argument("lattice point dimension does not match n");
    const auto& s = src[static_cast<std::size_t>(key.index)];
    for (int j = 1; j <= n; ++j) {
      if (std::find(s.begin(), s.end(), j) != s.end()) continue;
      // e_j ^ e_S: move e_j past every element of S below j.
      const auto below = std::count_if(s.begin(), s.end(), [j](int x) { return x < j; });
      std::vector<int> t = s;
      t.insert(std::lower_bound(t.begin(), t.end(), j), j);
      const Scalar sign(below % 2 == 0 ? 1 : -1);
      out.add(BasisKey{position.at(t), key.r}, a * sign * (Scalar(key.r[j - 1]) + alpha[j - 1]));
    }
  }
  return out;
}

Report verify_d_intertwines(int n, int k, const std::vector<Scalar>& alpha, const std::vector<WittGenerator>& gens,
                            const std::vector<ModuleElement>& xs) {
  Report rep;
  rep.check = "de_rham_intertwines";
  rep.anchor = "d commutes with the Witt action on twisted forms";
  rep.params["n"] = n;
  rep.params["k"] = k;
  const auto src = TensorFieldModule::make(exterior_power(n, k), alpha);
  const auto dst = TensorFieldModule::make(exterior_power(n, k + 1), alpha);
  for (const auto& D : gens) {
    for (const auto& x : xs) {
      const ModuleElement lhs = de_rham_differential(n, k, alpha, act_witt(src, D, x));
      const ModuleElement rhs = act_witt(dst, D, de_rham_differential(n, k, alpha, x));
      const ModuleElement res = lhs - rhs;
      if (!res.is_zero()) {
        rep.add_residual({{"generator", to_json(D)}, {"element", to_json(x, alpha)}, {"residual", to_json(res, alpha)}});
      }
    }
  }
  rep.stats["generators"] = gens.size();
  rep.stats["elements"] = xs.size();
  return rep;
}

Json to_json(const Lattice& r) {
  Json out = Json::array();
  for (int k = 0; k < r.n; ++k) out.push_back(r[k]);
  return out;
}

Lattice lattice_from_json(const Json& j) {
  if (!j.is_array() || j.size() > static_cast<std::size_t>(kMaxRank)) {
    throw std::invalid_argument("lattice point must be an array of at most 4 integers");
  }
  Lattice r = Lattice::zero(static_cast<int>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) r[static_cast<int>(k)] = j[k].get<int>();
  return r;
}

Json to_json(const WittGenerator& D) {
  Json u = Json::array();
  for (const auto& x : D.u) u.push_back(x.to_string());
  return {{"u", u}, {"r", to_json(D.r)}};
}

Json to_json(const ModuleElement& x, const std::vector<Scalar>& alpha, const std::vector<std::vector<int>>* labels) {
  Json a = Json::array();
  for (const auto& s : alpha) a.push_back(s.to_string());
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms()) {
    Json t;
    if (labels) {
      t["index"] = labels->at(static_cast<std::size_t>(key.index));
    } else {
      t["index"] = key.index;
    }
    t["r"] = to_json(key.r);
    t["coeff"] = c.to_string();
    terms.push_back(t);
  }
  return {{"alpha", a}, {"terms", terms}};
}

ModuleElement element_from_json(const Json& j, std::vector<Scalar>* alpha, const std::vector<std::vector<int>>* labels) {
  if (alpha && j.contains("alpha")) {
    alpha->clear();
    for (const auto& s : j.at("alpha")) alpha->push_back(Scalar::parse(s.get<std::string>()));
  }
  ModuleElement x;
  for (const auto& t : j.at("terms")) {
    long index = 0;
    if (t.at("index").is_array()) {
      if (!labels) throw std::invalid_argument("subset index given without basis labels");
      const auto subset = t.at("index").get<std::vector<int>>();
      auto it = std::find(labels->begin(), labels->end(), subset);
      if (it == labels->end()) throw std::invalid_argument("unknown basis subset");
      index = static_cast<long>(it - labels->begin());
    } else {
      index = t.at("index").get<long>();
    }
    x.add(BasisKey{index, lattice_from_json(t.at("r"))}, Scalar::parse(t.at("coeff").get<std::string>()));
  }
  return x;
}

std::string basis_symbol(const BasisKey& k) {
  std::string out = "v:" + std::to_string(k.index) + "@";
  for (int c = 0; c < k.r.n; ++c) {
    if (c) out += ",";
    out += std::to_string(k.r[c]);
  }
  return out;
}

}  // namespace witt
