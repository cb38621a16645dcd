#include "doctest.h"
#include "witt/gl_module.hpp"

using namespace witt;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

CuspidalGl2 symbolic_cuspidal() {
  return CuspidalGl2{Scalar::symbol(Symbol::lambda), Scalar::symbol(Symbol::b), Scalar::symbol(Symbol::c)};
}

// Sign of moving e_i into the slot of e_j in an ordered subset, computed by
// sorting a word of indices with adjacent swaps.
int sort_sign(std::vector<int> word) {
  int sign = 1;
  for (std::size_t a = 0; a < word.size(); ++a)
    for (std::size_t b = 0; b + 1 < word.size() - a; ++b)
      if (word[b] > word[b + 1]) {
        std::swap(word[b], word[b + 1]);
        sign = -sign;
      }
  return sign;
}

}  // namespace

TEST_CASE("cuspidal action matches the displayed formulas") {
  const GlModule V = symbolic_cuspidal();
  const GlVector v0 = GlVector::basis(0);
  CHECK(act_gl(V, 1, 2, v0) == GlVector::basis(1, S("c+l")));
  CHECK(act_gl(V, 2, 1, GlVector::basis(3)) == GlVector::basis(2, S("c-l-3")));
  CHECK(act_gl(V, 1, 1, GlVector::basis(-2)) == GlVector::basis(-2, S("b+l-2")));
  CHECK(act_gl(V, 2, 2, GlVector::basis(-2)) == GlVector::basis(-2, S("b-l+2")));

  const GlModule N = CuspidalGl2::make(Scalar(1, 7), Scalar(1, 11), Scalar(1, 13));
  CHECK(act_gl(N, 1, 2, v0) == GlVector::basis(1, Scalar(20, 91)));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(act_gl(N, i, j, GlVector()).is_zero());
}

TEST_CASE("cuspidal parameters with integral c +- lambda are rejected") {
  CHECK_THROWS_AS(CuspidalGl2::make(Scalar(1, 3), Scalar(0), Scalar(-1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(CuspidalGl2::make(Scalar(1, 3), Scalar(0), Scalar(7, 3)), std::invalid_argument);
  CHECK_NOTHROW(CuspidalGl2::make(Scalar(1, 3), Scalar(0), Scalar(1, 2)));
}

TEST_CASE("symbolic cuspidal module satisfies the bracket law") {
  const GlModule V = symbolic_cuspidal();
  const Report r = verify_gl_brackets(V, 6);
  CHECK(r.passed());
  for (long i = -6; i <= 6; ++i) {
    const GlVector v = GlVector::basis(i);
    GlVector lhs = act_gl(V, 1, 2, act_gl(V, 2, 1, v));
    lhs -= act_gl(V, 2, 1, act_gl(V, 1, 2, v));
    GlVector rhs = act_gl(V, 1, 1, v);
    rhs -= act_gl(V, 2, 2, v);
    CHECK(lhs == rhs);
  }
  CHECK(central_charge(V) == S("2*b"));
}

TEST_CASE("exterior powers") {
  SUBCASE("defining representation") {
    const FinDimGlModule m = exterior_power(2, 1);
    CHECK(m.dim() == 2);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        Matrix e(2, 2);
        e.at(i - 1, j - 1) = Scalar(1);
        CHECK(m.matrix(i, j) == e);
      }
  }
  SUBCASE("trivial and top degree") {
    const FinDimGlModule zero = exterior_power(2, 0);
    CHECK(zero.dim() == 1);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) CHECK(zero.matrix(i, j).at(0, 0).is_zero());
    const FinDimGlModule top = exterior_power(2, 2);
    CHECK(top.matrix(1, 1).at(0, 0) == Scalar(1));
    CHECK(top.matrix(2, 2).at(0, 0) == Scalar(1));
    CHECK(top.matrix(1, 2).at(0, 0).is_zero());
    CHECK(top.matrix(2, 1).at(0, 0).is_zero());
  }
  SUBCASE("bracket law and central charge for n <= 4") {
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        const FinDimGlModule m = exterior_power(n, k);
        CHECK(verify_gl_brackets(m).passed());
        CHECK(central_charge(m) == Scalar(k));
      }
  }
  SUBCASE("matrix entries against a permutation-sign oracle") {
    const FinDimGlModule m = exterior_power(4, 2);
    const auto& labels = m.labels();
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        for (int col = 0; col < m.dim(); ++col) {
          const auto& S0 = labels[col];
          const bool has_j = std::find(S0.begin(), S0.end(), j) != S0.end();
          const bool has_i = std::find(S0.begin(), S0.end(), i) != S0.end();
          for (int row = 0; row < m.dim(); ++row) {
            Scalar expect(0);
            if (i == j && has_j && row == col) expect = Scalar(1);
            if (i != j && has_j && !has_i) {
              std::vector<int> word = S0;
              std::replace(word.begin(), word.end(), j, i);
              std::vector<int> sorted = word;
              std::sort(sorted.begin(), sorted.end());
              if (sorted == labels[row]) expect = Scalar(sort_sign(word));
            }
            CHECK(m.matrix(i, j).at(row, col) == expect);
          }
        }
  }
  CHECK_THROWS(exterior_power(2, 3));
  CHECK_THROWS(exterior_power(2, -1));
}

TEST_CASE("corrupted matrix module fails with a located residual") {
  FinDimGlModule m = exterior_power(2, 1);
  Matrix bad = m.matrix(1, 2);
  bad.at(0, 1) = Scalar(2);
  m.set_matrix(1, 2, bad);
  const Report r = verify_gl_brackets(m);
  CHECK_FALSE(r.passed());
  REQUIRE(!r.residuals.empty());
  CHECK(r.residuals[0].contains("generators"));
  CHECK(r.residuals[0].contains("basis_index"));
  CHECK_THROWS_AS(act_gl(GlModule{m}, 3, 1, GlVector::basis(0)), std::out_of_range);
}

TEST_CASE("non-scalar identity action is reported") {
  FinDimGlModule m = exterior_power(2, 1);
  Matrix e11 = m.matrix(1, 1);
  e11.at(0, 0) = Scalar(3);
  m.set_matrix(1, 1, e11);
  CHECK_THROWS_AS(central_charge(m), std::domain_error);
}

TEST_CASE("JSON round trip") {
  const FinDimGlModule m = exterior_power(3, 2);
  const FinDimGlModule back = fin_dim_from_json(to_json(m));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(back.matrix(i, j) == m.matrix(i, j));
  GlVector v = GlVector::basis(-3, S("(c+l)/(a1-b-l)"));
  v.add(4, Scalar(2, 5));
  CHECK(gl_vector_from_json(to_json(v)) == v);
}
