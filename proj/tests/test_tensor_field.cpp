#include <random>

#include "doctest.h"
#include "witt/tensor_field.hpp"

using namespace witt;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

TensorFieldModule cuspidal_field() {
  const CuspidalGl2 V{Scalar::symbol(Symbol::lambda), Scalar::symbol(Symbol::b), Scalar::symbol(Symbol::c)};
  return TensorFieldModule::make(V, {Scalar::symbol(Symbol::alpha1), Scalar::symbol(Symbol::alpha2)});
}

WittGenerator D(std::vector<Scalar> u, Lattice r) { return {std::move(u), r}; }

struct RandomGenerators {
  std::mt19937 rng{20240611};
  std::uniform_int_distribution<int> entry{-2, 2};

  WittGenerator next(int n) {
    WittGenerator g;
    g.r = Lattice::zero(n);
    for (int k = 0; k < n; ++k) {
      g.u.push_back(Scalar(entry(rng)));
      g.r[k] = entry(rng);
    }
    return g;
  }
};

}  // namespace

TEST_CASE("Cartan generators scale by the shifted weight") {
  const auto F = cuspidal_field();
  const ModuleElement x = ModuleElement::basis(3, Lattice{2, -1});
  CHECK(act_witt(F, D({1, 0}, Lattice{0, 0}), x) == x * S("2+a1"));
  CHECK(act_witt(F, D({0, 1}, Lattice{0, 0}), x) == x * S("-1+a2"));
  CHECK(act_witt(F, D({1, 0}, Lattice{1, 1}), ModuleElement()).is_zero());
}

TEST_CASE("D(e2, e1-e2) on the cuspidal module") {
  const auto F = cuspidal_field();
  for (long i = -2; i <= 2; ++i) {
    const Lattice r{1, 2};
    const ModuleElement y = act_witt(F, D({0, 1}, Lattice{1, -1}), ModuleElement::basis(i, r));
    const Lattice to{2, 1};
    const Scalar ii = S("l") + Scalar(i);
    ModuleElement expect = ModuleElement::basis(i, to, S("2+a2"));
    expect.add(BasisKey{i + 1, to}, S("c") + ii);    // E12 v_i
    expect.add(BasisKey{i, to}, -(S("b") - ii));    // -E22 v_i
    CHECK(y == expect);
  }
}

TEST_CASE("Witt bracket law") {
  const auto F = cuspidal_field();
  const auto xs = window_basis(F, 2, 1);

  SUBCASE("commuting Cartan") {
    const WittGenerator a = D({1, 0}, Lattice{0, 0});
    const WittGenerator b = D({0, 1}, Lattice{0, 0});
    const WittGenerator w = witt_bracket(a, b);
    CHECK(w.u[0].is_zero());
    CHECK(w.u[1].is_zero());
    CHECK(witt_bracket_check(F, a, b, xs).passed());
  }
  SUBCASE("hand-computed bracket") {
    const WittGenerator a = D({1, 0}, Lattice{0, 1});
    const WittGenerator b = D({0, 1}, Lattice{1, 0});
    const WittGenerator w = witt_bracket(a, b);
    CHECK(w.u[0] == Scalar(-1));
    CHECK(w.u[1] == Scalar(1));
    CHECK(w.r == Lattice{1, 1});
    CHECK(witt_bracket_check(F, a, b, xs).passed());
  }
  SUBCASE("randomized on cuspidal and exterior-power inputs") {
    RandomGenerators gen;
    std::vector<TensorFieldModule> modules = {F};
    for (int n : {2, 3})
      for (int k = 0; k <= n; ++k) {
        std::vector<Scalar> alpha;
        for (int t = 0; t < n; ++t) alpha.push_back(Scalar(1, 3 + 2 * t));
        modules.push_back(TensorFieldModule::make(exterior_power(n, k), alpha));
      }
    for (const auto& M : modules) {
      const auto basis = window_basis(M, 1, 1);
      for (int t = 0; t < 6; ++t) {
        const WittGenerator a = gen.next(M.n());
        const WittGenerator b = gen.next(M.n());
        CHECK(witt_bracket_check(M, a, b, basis).passed());
      }
    }
  }
}

TEST_CASE("Jacobi identity on random triples") {
  const auto F = cuspidal_field();
  const auto xs = window_basis(F, 1, 1);
  RandomGenerators gen;
  for (int t = 0; t < 4; ++t) {
    const WittGenerator a = gen.next(2), b = gen.next(2), c = gen.next(2);
    CHECK(jacobi_check(F, a, b, c, xs).passed());
  }
}

TEST_CASE("action is linear in u") {
  const auto F = cuspidal_field();
  const auto xs = window_basis(F, 1, 1);
  const Lattice r{1, -2};
  const Scalar u1 = S("3/2"), u2 = S("-5");
  for (const auto& x : xs) {
    const ModuleElement whole = act_witt(F, D({u1, u2}, r), x);
    const ModuleElement parts = act_witt(F, D({1, 0}, r), x) * u1 + act_witt(F, D({0, 1}, r), x) * u2;
    CHECK(whole == parts);
  }
}

TEST_CASE("dimension mismatches are rejected") {
  const auto F = cuspidal_field();
  CHECK_THROWS_AS(act_witt(F, D({1, 0, 0}, Lattice{0, 0}), ModuleElement::basis(0, Lattice{0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(TensorFieldModule::make(exterior_power(3, 1), {Scalar(0)}), std::invalid_argument);
}

TEST_CASE("de Rham differential") {
  const std::vector<Scalar> alpha = {S("a1"), S("a2")};
  const Lattice m{2, -3};
  SUBCASE("degree zero") {
    const ModuleElement d = de_rham_differential(2, 0, alpha, ModuleElement::basis(0, m));
    ModuleElement expect = ModuleElement::basis(0, m, S("2+a1"));
    expect.add(BasisKey{1, m}, S("-3+a2"));
    CHECK(d == expect);
    CHECK(de_rham_differential(2, 1, alpha, d).is_zero());
  }
  SUBCASE("degree one sign convention") {
    CHECK(de_rham_differential(2, 1, alpha, ModuleElement::basis(0, m)) == ModuleElement::basis(0, m, S("3-a2")));
    CHECK(de_rham_differential(2, 1, alpha, ModuleElement::basis(1, m)) == ModuleElement::basis(0, m, S("2+a1")));
  }
  SUBCASE("d o d vanishes for n = 3") {
    const std::vector<Scalar> a3 = {S("a1"), S("a2"), S("b")};
    for (int k = 0; k + 2 <= 3; ++k)
      for (int idx = 0; idx < exterior_power(3, k).dim(); ++idx) {
        const ModuleElement x = ModuleElement::basis(idx, Lattice{1, -1, 2});
        CHECK(de_rham_differential(3, k + 1, a3, de_rham_differential(3, k, a3, x)).is_zero());
      }
  }
  CHECK_THROWS_AS(de_rham_differential(2, 2, alpha, ModuleElement::basis(0, m)), std::invalid_argument);
}

TEST_CASE("d intertwines the Witt action") {
  const std::vector<Scalar> alpha = {S("a1"), S("a2")};
  RandomGenerators gen;
  std::vector<WittGenerator> gens = {D({1, 0}, Lattice{0, 0})};
  for (int t = 0; t < 12; ++t) gens.push_back(gen.next(2));
  for (int k : {0, 1}) {
    const auto F = TensorFieldModule::make(exterior_power(2, k), alpha);
    CHECK(verify_d_intertwines(2, k, alpha, gens, window_basis(F, 0, 1)).passed());
    CHECK(verify_d_intertwines(2, k, alpha, gens, {ModuleElement()}).passed());
  }
}

TEST_CASE("element JSON round trip") {
  const std::vector<Scalar> alpha = {S("a1"), S("1/19")};
  ModuleElement x = ModuleElement::basis(0, Lattice{0, 0});
  x.add(BasisKey{-2, Lattice{3, -1}}, S("(c+l)/(a1-b-l)"));
  std::vector<Scalar> back_alpha;
  CHECK(element_from_json(to_json(x, alpha), &back_alpha) == x);
  CHECK(back_alpha == alpha);

  const FinDimGlModule m = exterior_power(3, 2);
  const ModuleElement y = ModuleElement::basis(2, Lattice{1, 0, -1}, S("b"));
  const Json j = to_json(y, {S("0"), S("0"), S("0")}, &m.labels());
  CHECK(element_from_json(j, nullptr, &m.labels()) == y);
  CHECK(basis_symbol(BasisKey{3, Lattice{2, -1}}) == "v:3@2,-1");
}
