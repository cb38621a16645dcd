#include "doctest.h"
#include "witt/sl3.hpp"

using namespace witt;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

ModuleElement v(long i, int r1, int r2, Scalar c = Scalar(1)) { return ModuleElement::basis(i, Lattice{r1, r2}, c); }

// E23 with its sign flipped: a broken action for the negative control.
Sl3Action flipped_e23(const Sl3Params& p) {
  return [p](Sl3Generator g, const ModuleElement& x) {
    ModuleElement y = act_sl3(p, g, x);
    return g == Sl3Generator{2, 3} ? y * Scalar(-1) : y;
  };
}

}  // namespace

TEST_CASE("generator action examples") {
  const Sl3Params sym = Sl3Params::symbolic();
  CHECK(act_sl3(sym, {1, 1}, v(3, 2, -1)) == v(3, 2, -1, S("2+a1")));

  for (long i = -2; i <= 2; ++i) {
    ModuleElement trace = act_sl3(sym, {1, 1}, v(i, 1, -2));
    trace += act_sl3(sym, {2, 2}, v(i, 1, -2));
    trace += act_sl3(sym, {3, 3}, v(i, 1, -2));
    CHECK(trace.is_zero());
  }

  const Sl3Params desk = Sl3Params::desk();
  CHECK(act_sl3(desk, {3, 1}, v(0, 1, 0)) == v(0, 0, 0, Scalar(1080, 1309)));
  CHECK(Scalar(1) + Scalar(1, 17) - Scalar(1, 11) - Scalar(1, 7) == Scalar(1080, 1309));
}

TEST_CASE("words compose right to left") {
  const Sl3Params p = Sl3Params::symbolic();
  const ModuleElement x = v(1, -1, 2);
  CHECK(act_word(p, {}, x) == x);
  CHECK(act_word(p, parse_word("E13*E32"), x) == act_sl3(p, {1, 3}, act_sl3(p, {3, 2}, x)));

  for (long i = -2; i <= 2; ++i)
    for (int r1 = -1; r1 <= 1; ++r1)
      for (int r2 = -1; r2 <= 1; ++r2) {
        const ModuleElement y = v(i, r1, r2);
        const ModuleElement lhs = act_word(p, parse_word("E12*E21"), y) - act_word(p, parse_word("E21*E12"), y);
        const Scalar r1p = Scalar(r1) + S("a1");
        const Scalar r2p = Scalar(r2) + S("a2");
        CHECK(lhs == y * (r1p - r2p));
      }
}

TEST_CASE("E13*E32 matches the displayed product") {
  const Sl3Params p = Sl3Params::symbolic();
  for (long i = -2; i <= 2; ++i)
    for (int r1 = -1; r1 <= 1; ++r1)
      for (int r2 = -1; r2 <= 1; ++r2) {
        const Scalar ii = S("l") + Scalar(i);
        const Scalar r1p = Scalar(r1) + S("a1");
        const Scalar r2p = Scalar(r2) + S("a2");
        const Scalar b = S("b"), c = S("c");
        const Scalar lead = -(r2p - b + ii);
        ModuleElement expect = v(i, r1 + 1, r2 - 1, lead * (r1p + r2p - Scalar(1) + b + ii));
        expect.add(BasisKey{i + 1, Lattice{r1 + 1, r2 - 1}}, lead * (c + ii));
        CHECK(act_word(p, parse_word("E13*E32"), v(i, r1, r2)) == expect);
      }
}

TEST_CASE("weight preservation and index shifts") {
  const Sl3Params p = Sl3Params::symbolic();
  for (const auto& g : all_generators()) {
    Lattice shift = Lattice::zero(2);
    if (g.i <= 2) shift[g.i - 1] += 1;
    if (g.j <= 2) shift[g.j - 1] -= 1;
    long up = 0, down = 0;
    if ((g.i == 1 && g.j == 2) || (g.i == 1 && g.j == 3)) up = 1;
    if ((g.i == 2 && g.j == 1) || (g.i == 2 && g.j == 3)) down = 1;
    for (long i = -2; i <= 2; ++i) {
      const ModuleElement x = v(i, 1, -1);
      const ModuleElement y = act_sl3(p, g, x);
      for (const auto& [k, c] : y.terms()) {
        CHECK(k.r == Lattice{1, -1} + shift);
        CHECK(k.index - i <= up);
        CHECK(i - k.index <= down);
      }
      const auto w = weight_of(p, BasisKey{i, Lattice{1, -1}});
      if (g.i == g.j) CHECK(y == x * w[static_cast<std::size_t>(g.i - 1)]);
    }
  }
}

TEST_CASE("weights") {
  const Sl3Params p = Sl3Params::symbolic();
  const auto w0 = weight_of(p, BasisKey{0, Lattice{0, 0}});
  CHECK(w0[0] == S("a1"));
  CHECK(w0[1] == S("a2"));
  CHECK(w0[2] == S("-a1-a2"));
  CHECK(weight_of(p, BasisKey{5, Lattice{0, 0}}) == w0);
  const auto wd = weight_of(Sl3Params::desk(), BasisKey{2, Lattice{1, -1}});
  CHECK(wd[0] == Scalar(18, 17));
  CHECK(wd[1] == Scalar(-18, 19));
  CHECK(wd[2] == Scalar(-18, 17) + Scalar(18, 19));
}

TEST_CASE("gl3 brackets hold symbolically") {
  const Sl3Params p = Sl3Params::symbolic();
  CHECK(verify_sl3_brackets(p, 1, 1, ExecPolicy::serial).passed());
  const ModuleElement x = v(0, 0, 0);
  CHECK(act_sl3(p, {1, 1}, act_sl3(p, {2, 2}, x)) == act_sl3(p, {2, 2}, act_sl3(p, {1, 1}, x)));

  const Report bad = verify_sl3_brackets(p, 1, 1, ExecPolicy::serial, flipped_e23(p));
  CHECK_FALSE(bad.passed());
  REQUIRE(!bad.residuals.empty());
  CHECK(bad.residuals.dump().find("E23") != std::string::npos);
  CHECK(bad.residuals[0].contains("element"));
}

TEST_CASE("serial and parallel bracket scans agree") {
  const Sl3Params p = Sl3Params::desk();
  CHECK(verify_sl3_brackets(p, 1, 1, ExecPolicy::serial).dump() ==
        verify_sl3_brackets(p, 1, 1, ExecPolicy::parallel).dump());
}

TEST_CASE("embedding consistency") {
  const Sl3Params p = Sl3Params::symbolic();
  const Report r = embedding_consistency(p, 1, 1, ExecPolicy::serial);
  CHECK(r.passed());
  CHECK(r.subchecks.size() == 2);
}

TEST_CASE("genericity conditions") {
  const auto desk = check_generic(Sl3Params::desk());
  CHECK(desk.conditions.size() == 10);
  CHECK(desk.all_hold());
  CHECK(desk.generation_subset_holds());

  Sl3Params p = Sl3Params::desk();
  p.alpha1 = p.b + p.lambda;
  const auto g1 = check_generic(p);
  CHECK_FALSE(g1.all_hold());
  CHECK(g1.unmet(false) == std::vector<std::string>{"a1-b-l"});

  p = Sl3Params::desk();
  p.c = Scalar(3) * p.b;
  const auto g2 = check_generic(p);
  CHECK(g2.unmet(false) == std::vector<std::string>{"c-3*b"});
  CHECK(g2.generation_subset_holds());

  const auto sym = check_generic(Sl3Params::symbolic());
  for (const auto& c : sym.conditions) CHECK(c.status == GenericityCondition::Status::undecidable);
  CHECK_FALSE(sym.all_hold());
}

TEST_CASE("proof identities") {
  const Sl3Params p = Sl3Params::symbolic();
  const Report r = proof_identity_suite(p, 1, 1, 2);
  CHECK(r.passed());
  CHECK(r.subchecks.size() == 4);

  const Report wrong = proof_identity_suite(p, 0, 0, 1, 1);
  CHECK_FALSE(wrong.passed());
  bool raise_failed = false;
  for (const auto& sub : wrong.subchecks) {
    if (sub.check == "raising_cancellation") raise_failed = !sub.passed();
  }
  CHECK(raise_failed);
}

TEST_CASE("text forms") {
  CHECK(parse_word("E13*E32") == GeneratorWord{{1, 3}, {3, 2}});
  CHECK(parse_word("").empty());
  CHECK(word_name({{2, 3}, {3, 1}}) == "E23*E31");
  CHECK_THROWS_AS(parse_word("E14"), ParseError);
  CHECK_THROWS_AS(parse_word("E12*"), ParseError);

  const BasisKey k = parse_basis_symbol("v:3@2,-1");
  CHECK(k.index == 3);
  CHECK(k.r == Lattice{2, -1});
  CHECK(basis_symbol(k) == "v:3@2,-1");
  try {
    parse_basis_symbol("v:@1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_basis_symbol("v:1@2"), ParseError);
  CHECK_THROWS_AS(parse_basis_symbol("w:1@2,3"), ParseError);
}
