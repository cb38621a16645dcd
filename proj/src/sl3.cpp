#include "witt/sl3.hpp"

#include <cctype>

namespace witt {

Sl3Params Sl3Params::symbolic() {
  return Sl3Params{Scalar::symbol(Symbol::lambda), Scalar::symbol(Symbol::b), Scalar::symbol(Symbol::c),
                   Scalar::symbol(Symbol::alpha1), Scalar::symbol(Symbol::alpha2)};
}

Sl3Params Sl3Params::desk() {
  return Sl3Params{Scalar(1, 7), Scalar(1, 11), Scalar(1, 13), Scalar(1, 17), Scalar(1, 19)};
}

bool Sl3Params::is_numeric() const {
  for (const Scalar* s : {&lambda, &b, &c, &alpha1, &alpha2}) {
    if (s->is_symbolic()) return false;
  }
  return true;
}

Json Sl3Params::to_json() const {
  return {{"l", lambda.to_string()},
          {"b", b.to_string()},
          {"c", c.to_string()},
          {"a1", alpha1.to_string()},
          {"a2", alpha2.to_string()}};
}

std::string Sl3Generator::name() const { return "E" + std::to_string(i) + std::to_string(j); }

std::vector<Sl3Generator> all_generators() {
  std::vector<Sl3Generator> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) out.push_back({i, j});
  return out;
}

namespace {

void skip_space(std::string_view t, std::size_t& pos) {
  while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
}

long read_int(std::string_view t, std::size_t& pos) {
  const std::size_t start = pos;
  bool negative = false;
  if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) {
    negative = t[pos] == '-';
    ++pos;
  }
  const std::size_t digits = pos;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected integer", start);
  if (pos - digits > 9) throw ParseError("integer too large", start);
  const long v = std::stol(std::string(t.substr(digits, pos - digits)));
  return negative ? -v : v;
}

void expect(std::string_view t, std::size_t& pos, char c) {
  if (pos >= t.size() || t[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
  ++pos;
}

}  // namespace

GeneratorWord parse_word(std::string_view text) {
  GeneratorWord w;
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) return w;
  for (;;) {
    skip_space(text, pos);
    if (pos >= text.size() || text[pos] != 'E') throw ParseError("expected generator E<i><j>", pos);
    if (pos + 2 >= text.size() || text[pos + 1] < '1' || text[pos + 1] > '3' || text[pos + 2] < '1' ||
        text[pos + 2] > '3') {
      throw ParseError("generator indices must be digits 1..3", pos);
    }
    w.push_back({text[pos + 1] - '0', text[pos + 2] - '0'});
    pos += 3;
    skip_space(text, pos);
    if (pos == text.size()) return w;
    expect(text, pos, '*');
  }
}

std::string word_name(const GeneratorWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "*";
    out += w[k].name();
  }
  return out;
}

BasisKey parse_basis_symbol(std::string_view text) {
  std::size_t pos = 0;
  expect(text, pos, 'v');
  expect(text, pos, ':');
  BasisKey k;
  k.index = read_int(text, pos);
  expect(text, pos, '@');
  k.r = Lattice::zero(2);
  k.r[0] = static_cast<int>(read_int(text, pos));
  expect(text, pos, ',');
  k.r[1] = static_cast<int>(read_int(text, pos));
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return k;
}

ModuleElement act_sl3(const Sl3Params& p, Sl3Generator g, const ModuleElement& x) {
  ModuleElement out;
  for (const auto& [key, a] : x.terms()) {
    if (key.r.n != 2) throw std::invalid_argument("sl3 basis symbols need two lattice coordinates");
    const long i = key.index;
    const int r1 = key.r[0];
    const int r2 = key.r[1];
    const Scalar ii = p.lambda + Scalar(i);
    const Scalar s1 = Scalar(r1) + p.alpha1;
    const Scalar s2 = Scalar(r2) + p.alpha2;
    auto put = [&](long idx, int q1, int q2, const Scalar& coeff) {
      out.add(BasisKey{idx, Lattice{q1, q2}}, a * coeff);
    };
    switch (g.i * 10 + g.j) {
      case 11:
        put(i, r1, r2, s1);
        break;
      case 22:
        put(i, r1, r2, s2);
        break;
      case 33:
        put(i, r1, r2, -(s1 + s2));
        break;
      case 12:
        put(i, r1 + 1, r2 - 1, ii - p.b + s2);
        put(i + 1, r1 + 1, r2 - 1, p.c + ii);
        break;
      case 21:
        put(i - 1, r1 - 1, r2 + 1, p.c - ii);
        put(i, r1 - 1, r2 + 1, -ii - p.b + s1);
        break;
      case 13:
        put(i, r1 + 1, r2, -(s1 + s2 + p.b + ii));
        put(i + 1, r1 + 1, r2, -(p.c + ii));
        break;
      case 31:
        put(i, r1 - 1, r2, s1 - p.b - ii);
        break;
      case 23:
        put(i - 1, r1, r2 + 1, -(p.c - ii));
        put(i, r1, r2 + 1, -(s1 + s2 + p.b - ii));
        break;
      case 32:
        put(i, r1, r2 - 1, s2 - p.b + ii);
        break;
      default:
        throw std::out_of_range("generator index out of range");
    }
  }
  return out;
}

ModuleElement act_word(const Sl3Params& p, const GeneratorWord& w, const ModuleElement& x) {
  ModuleElement y = x;
  for (auto it = w.rbegin(); it != w.rend() && !y.is_zero(); ++it) y = act_sl3(p, *it, y);
  return y;
}

Sl3Action default_action(const Sl3Params& p) {
  return [p](Sl3Generator g, const ModuleElement& x) { return act_sl3(p, g, x); };
}

namespace {

Json compact(const ModuleElement& x) {
  Json out = Json::array();
  for (const auto& [k, c] : x.terms()) out.push_back({{"v", basis_symbol(k)}, {"coeff", c.to_string()}});
  return out;
}

std::vector<BasisKey> box(long index_radius, int lattice_radius) {
  std::vector<BasisKey> out;
  for (long i = -index_radius; i <= index_radius; ++i)
    for (int r1 = -lattice_radius; r1 <= lattice_radius; ++r1)
      for (int r2 = -lattice_radius; r2 <= lattice_radius; ++r2) out.push_back(BasisKey{i, Lattice{r1, r2}});
  return out;
}

Json window_json(long index_radius, int lattice_radius) {
  return {{"index_radius", index_radius}, {"lattice_radius", lattice_radius}};
}

}  // namespace

Report verify_sl3_brackets(const Sl3Params& p, long index_radius, int lattice_radius, ExecPolicy policy,
                           const Sl3Action& action) {
  const Sl3Action act = action ? action : default_action(p);
  Report rep;
  rep.check = "sl3_brackets";
  rep.anchor = "gl3 structure constants on F^alpha_2b(V)";
  rep.params = p.to_json();
  rep.window = window_json(index_radius, lattice_radius);
  const auto keys = box(index_radius, lattice_radius);
  const auto gens = all_generators();
  std::vector<std::vector<Json>> found(keys.size());
  for_each_index(keys.size(), policy, [&](std::size_t slot) {
    const ModuleElement x = ModuleElement::basis(keys[slot].index, keys[slot].r);
    for (const auto& g : gens) {
      const ModuleElement gx = act(g, x);
      for (const auto& h : gens) {
        ModuleElement res = act(g, act(h, x));
        res -= act(h, gx);
        if (g.j == h.i) res -= act({g.i, h.j}, x);
        if (h.j == g.i) res += act({h.i, g.j}, x);
        if (!res.is_zero()) {
          found[slot].push_back({{"pair", {g.name(), h.name()}}, {"element", basis_symbol(keys[slot])},
                                 {"residual", compact(res)}});
        }
      }
    }
  });
  for (auto& list : found)
    for (auto& r : list) rep.add_residual(std::move(r));
  rep.stats["pairs"] = gens.size() * gens.size();
  rep.stats["elements"] = keys.size();
  return rep;
}

Report embedding_consistency(const Sl3Params& p, long index_radius, int lattice_radius, ExecPolicy policy) {
  const TensorFieldModule F = p.tensor_field();
  const auto keys = box(index_radius, lattice_radius);
  const auto gens = all_generators();

  Report rep;
  rep.check = "embedding_consistency";
  rep.anchor = "sl3 inside W_2 via the standard vector-field embedding";
  rep.params = p.to_json();
  rep.window = window_json(index_radius, lattice_radius);

  Report witt;
  witt.check = "witt_image";
  witt.anchor = "E_ij against the Witt generator it embeds as";
  Report general;
  general.check = "general_rank_formula";
  general.anchor = "E_ij against the sl_{n+1} action formula at n = 2";

  std::vector<std::vector<Json>> bad_witt(keys.size());
  std::vector<std::vector<Json>> bad_general(keys.size());
  for_each_index(keys.size(), policy, [&](std::size_t slot) {
    const ModuleElement x = ModuleElement::basis(keys[slot].index, keys[slot].r);
    for (const auto& g : gens) {
      const ModuleElement direct = act_sl3(p, g, x);
      const ModuleElement via_witt = act_witt(F, embedded_generator(2, g.i, g.j), x);
      const ModuleElement via_general = act_sl_embedded(F, g.i, g.j, x);
      if (!(direct == via_witt)) {
        bad_witt[slot].push_back({{"generator", g.name()}, {"element", basis_symbol(keys[slot])},
                                  {"residual", compact(direct - via_witt)}});
      }
      if (!(direct == via_general)) {
        bad_general[slot].push_back({{"generator", g.name()}, {"element", basis_symbol(keys[slot])},
                                     {"residual", compact(direct - via_general)}});
      }
    }
  });
  for (auto& list : bad_witt)
    for (auto& r : list) witt.add_residual(std::move(r));
  for (auto& list : bad_general)
    for (auto& r : list) general.add_residual(std::move(r));
  for (const auto& g : gens) {
    const WittGenerator D = embedded_generator(2, g.i, g.j);
    witt.witnesses.push_back({{"generator", g.name()}, {"image", to_json(D)}});
  }
  rep.add_subcheck(std::move(witt));
  rep.add_subcheck(std::move(general));
  rep.stats["elements"] = keys.size();
  return rep;
}

std::array<Scalar, 3> weight_of(const Sl3Params& p, const BasisKey& k) {
  const Scalar s1 = Scalar(k.r[0]) + p.alpha1;
  const Scalar s2 = Scalar(k.r[1]) + p.alpha2;
  return {s1, s2, -(s1 + s2)};
}

std::string status_name(GenericityCondition::Status s) {
  switch (s) {
    case GenericityCondition::Status::holds:
      return "holds";
    case GenericityCondition::Status::fails:
      return "fails";
    case GenericityCondition::Status::undecidable:
      return "undecidable-symbolic";
  }
  return "undecidable-symbolic";
}

bool GenericityReport::all_hold() const { return unmet(false).empty(); }

bool GenericityReport::generation_subset_holds() const { return unmet(true).empty(); }

std::vector<std::string> GenericityReport::unmet(bool subset_only) const {
  std::vector<std::string> out;
  for (const auto& c : conditions) {
    if (subset_only && !c.generation_subset) continue;
    if (c.status != GenericityCondition::Status::holds) out.push_back(c.name);
  }
  return out;
}

Report GenericityReport::to_report() const {
  Report rep;
  rep.check = "check_generic";
  rep.anchor = "non-integrality conditions for irreducibility";
  for (const auto& c : conditions) {
    rep.witnesses.push_back({{"condition", c.name},
                             {"value", c.value.to_string()},
                             {"status", status_name(c.status)},
                             {"generation_subset", c.generation_subset}});
  }
  rep.stats["all_ten_hold"] = all_hold();
  rep.stats["generation_subset_holds"] = generation_subset_holds();
  for (const auto& name : unmet(false)) rep.add_residual({{"condition", name}});
  return rep;
}

GenericityReport check_generic(const Sl3Params& p) {
  const Scalar two_b = Scalar(2) * p.b;
  const Scalar three_b = Scalar(3) * p.b;
  const Scalar sum = p.alpha1 + p.alpha2 + p.b;
  const std::vector<std::pair<std::string, Scalar>> exprs = {
      {"c+l", p.c + p.lambda},
      {"c-l", p.c - p.lambda},
      {"a1-b-l", p.alpha1 - p.b - p.lambda},
      {"a2-b+l", p.alpha2 - p.b + p.lambda},
      {"a1+2*b", p.alpha1 + two_b},
      {"a2+2*b", p.alpha2 + two_b},
      {"a1+a2+b+c", sum + p.c},
      {"a1+a2+b-c", sum - p.c},
      {"c+3*b", p.c + three_b},
      {"c-3*b", p.c - three_b},
  };
  GenericityReport out;
  for (std::size_t k = 0; k < exprs.size(); ++k) {
    GenericityCondition c;
    c.name = exprs[k].first;
    c.value = exprs[k].second;
    c.generation_subset = k < 8;
    if (c.value.is_symbolic()) {
      c.status = GenericityCondition::Status::undecidable;
    } else {
      c.status = is_integer(c.value) ? GenericityCondition::Status::fails : GenericityCondition::Status::holds;
    }
    out.conditions.push_back(std::move(c));
  }
  return out;
}

// ------------------------------------------------------------ proof identities

namespace {

struct Display {
  std::string name;
  GeneratorWord word;
  long shift;  // applied to the index of the input basis vector
  int d1;      // lattice point of the input, relative to (r1, r2)
  int d2;
  std::function<ModuleElement(long i, int r1, int r2, const Scalar& ii, const Scalar& s1, const Scalar& s2)> expected;
};

ModuleElement v(long i, int r1, int r2, const Scalar& c) { return ModuleElement::basis(i, Lattice{r1, r2}, c); }

std::vector<Display> displays(const Sl3Params& p) {
  const Scalar b = p.b;
  const Scalar c = p.c;
  const Scalar one(1);
  std::vector<Display> out;
  out.push_back({"E12 v_i(r)", {{1, 2}}, 0, 0, 0,
                 [=](long i, int r1, int r2, const Scalar& ii, const Scalar&, const Scalar& s2) {
                   return v(i, r1 + 1, r2 - 1, ii - b + s2) + v(i + 1, r1 + 1, r2 - 1, c + ii);
                 }});
  out.push_back({"E13*E32 v_i(r)", {{1, 3}, {3, 2}}, 0, 0, 0,
                 [=](long i, int r1, int r2, const Scalar& ii, const Scalar& s1, const Scalar& s2) {
                   const Scalar f = -(s2 - b + ii);
                   return v(i, r1 + 1, r2 - 1, f * (s1 + s2 - one + b + ii)) + v(i + 1, r1 + 1, r2 - 1, f * (c + ii));
                 }});
  out.push_back({"E21 v_i(r)", {{2, 1}}, 0, 0, 0,
                 [=](long i, int r1, int r2, const Scalar& ii, const Scalar& s1, const Scalar&) {
                   return v(i - 1, r1 - 1, r2 + 1, c - ii) + v(i, r1 - 1, r2 + 1, -ii - b + s1);
                 }});
  out.push_back({"E23*E31 v_i(r)", {{2, 3}, {3, 1}}, 0, 0, 0,
                 [=](long i, int r1, int r2, const Scalar& ii, const Scalar& s1, const Scalar& s2) {
                   const Scalar f = -(s1 - b - ii);
                   return v(i - 1, r1 - 1, r2 + 1, f * (c - ii)) + v(i, r1 - 1, r2 + 1, f * (s1 + s2 + b - ii - one));
                 }});
  return out;
}

std::vector<Display> ascent_displays(const Sl3Params& p) {
  const Scalar b = p.b;
  const Scalar c = p.c;
  const Scalar one(1);
  std::vector<Display> out;
  out.push_back({"E13 v_i(j)", {{1, 3}}, 0, 0, 0,
                 [=](long i, int r1, int r2, const Scalar& ii, const Scalar& s1, const Scalar& s2) {
                   return v(i, r1 + 1, r2, -(s1 + s2 + b + ii)) + v(i + 1, r1 + 1, r2, -(c + ii));
                 }});
  // Input v_{i+1}(j1+1, j2-1); expected written in terms of i, j.
  out.push_back({"E23 v_{i+1}(j1+1,j2-1)", {{2, 3}}, 1, 1, -1,
                 [=](long i, int r1, int r2, const Scalar& ii, const Scalar& s1, const Scalar& s2) {
                   return v(i, r1 + 1, r2, -(c - ii - one)) + v(i + 1, r1 + 1, r2, -(s1 + s2 + b - ii - one));
                 }});
  return out;
}

Report check_displays(const Sl3Params& p, const std::string& name, const std::string& anchor,
                      const std::vector<Display>& list, long index_radius, int lattice_radius) {
  Report rep;
  rep.check = name;
  rep.anchor = anchor;
  std::size_t checked = 0;
  for (const auto& d : list) {
    for (const auto& key : box(index_radius, lattice_radius)) {
      const long i = key.index;
      const int r1 = key.r[0];
      const int r2 = key.r[1];
      const Scalar ii = p.lambda + Scalar(i);
      const Scalar s1 = Scalar(r1) + p.alpha1;
      const Scalar s2 = Scalar(r2) + p.alpha2;
      const ModuleElement got = act_word(p, d.word, v(i + d.shift, r1 + d.d1, r2 + d.d2, Scalar(1)));
      const ModuleElement res = got - d.expected(i, r1, r2, ii, s1, s2);
      ++checked;
      if (!res.is_zero()) {
        rep.add_residual({{"display", d.name}, {"i", i}, {"r", {r1, r2}}, {"residual", compact(res)}});
      }
    }
    rep.witnesses.push_back(d.name);
  }
  rep.stats["checked"] = checked;
  return rep;
}

}  // namespace

Report proof_identity_suite(const Sl3Params& p, long index_radius, int lattice_radius, int s_max,
                            int multiplier_offset) {
  Report rep;
  rep.check = "proof_identities";
  rep.anchor = "composite actions and cancellation identities";
  rep.params = p.to_json();
  rep.params["s_max"] = s_max;
  rep.params["multiplier_offset"] = multiplier_offset;
  rep.window = window_json(index_radius, lattice_radius);

  rep.add_subcheck(check_displays(p, "generation_displays", "single-vector generation: composite actions",
                                  displays(p), index_radius, lattice_radius));
  rep.add_subcheck(check_displays(p, "ascent_displays", "single-vector generation: E13/E23 ascent",
                                  ascent_displays(p), index_radius, lattice_radius));

  // w = sum_j a_j v_{i+j}(r) with a_0 = 1 and a_j = iota^j, a free coefficient.
  const Scalar iota = Scalar::symbol(Symbol::iota);
  const Scalar offset(multiplier_offset);
  Report raise;
  raise.check = "raising_cancellation";
  raise.anchor = "cancelling the top term v_{i+s+1} with E12 and E13*E32";
  Report lower;
  lower.check = "lowering_cancellation";
  lower.anchor = "cancelling the bottom term v_{i-1} with E21 and E23*E31";
  const GeneratorWord e12 = {{1, 2}};
  const GeneratorWord e13e32 = {{1, 3}, {3, 2}};
  const GeneratorWord e21 = {{2, 1}};
  const GeneratorWord e23e31 = {{2, 3}, {3, 1}};
  for (int s = 1; s <= s_max; ++s) {
    const Scalar S(s);
    for (const auto& key : box(index_radius, lattice_radius)) {
      const long i = key.index;
      const int r1 = key.r[0];
      const int r2 = key.r[1];
      const Scalar ii = p.lambda + Scalar(i);
      const Scalar s1 = Scalar(r1) + p.alpha1;
      const Scalar s2 = Scalar(r2) + p.alpha2;
      ModuleElement w;
      Scalar a(1);
      for (int j = 0; j <= s; ++j) {
        w += v(i + j, r1, r2, a);
        a *= iota;
      }
      const Scalar a_s = pow(iota, s);

      const ModuleElement up = act_word(p, e12, w) * (s2 - p.b + ii + S + offset) + act_word(p, e13e32, w);
      const Scalar top = up.coeff(BasisKey{i + s + 1, Lattice{r1 + 1, r2 - 1}});
      if (!top.is_zero()) raise.add_residual({{"s", s}, {"i", i}, {"r", {r1, r2}}, {"component", top.to_string()}});
      const Scalar kappa_a = (s2 - p.b + ii) * (S + Scalar(1) - Scalar(2) * p.b - s1);
      const Scalar base = up.coeff(BasisKey{i, Lattice{r1 + 1, r2 - 1}});
      if (!(base == kappa_a)) {
        raise.add_residual({{"s", s}, {"i", i}, {"r", {r1, r2}}, {"base_component", (base - kappa_a).to_string()}});
      }

      const ModuleElement down = act_word(p, e21, w) * (s1 - p.b - ii + offset) + act_word(p, e23e31, w);
      const Scalar bottom = down.coeff(BasisKey{i - 1, Lattice{r1 - 1, r2 + 1}});
      if (!bottom.is_zero()) {
        lower.add_residual({{"s", s}, {"i", i}, {"r", {r1, r2}}, {"component", bottom.to_string()}});
      }
      const Scalar kappa_b = (s1 - p.b - ii - S) * (S + Scalar(1) - Scalar(2) * p.b - s2) * a_s;
      const Scalar head = down.coeff(BasisKey{i + s, Lattice{r1 - 1, r2 + 1}});
      if (!(head == kappa_b)) {
        lower.add_residual({{"s", s}, {"i", i}, {"r", {r1, r2}}, {"top_component", (head - kappa_b).to_string()}});
      }
    }
  }
  rep.add_subcheck(std::move(raise));
  rep.add_subcheck(std::move(lower));
  return rep;
}

}  // namespace witt
