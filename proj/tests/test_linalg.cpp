#include <algorithm>
#include <random>

#include "doctest.h"
#include "witt/linalg.hpp"

using namespace witt;

namespace {

using QRow = std::vector<Rational>;

// Plain forward elimination over mpq_class, no pivot ordering conventions.
std::size_t naive_rank(std::vector<QRow> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

Row to_row(const QRow& q) {
  Row r;
  for (const auto& x : q) r.push_back(Scalar(x));
  return r;
}

struct RandomMatrices {
  std::mt19937 rng{20240611};

  std::vector<QRow> next(std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> sparse(0, 2);
    std::vector<QRow> m(rows, QRow(cols));
    for (auto& row : m)
      for (auto& x : row) x = sparse(rng) == 0 ? Rational(0) : Rational(entry(rng), 1 + sparse(rng));
    // Plant a dependent row half of the time.
    if (rows >= 3 && sparse(rng) == 1) {
      for (std::size_t k = 0; k < cols; ++k) m[rows - 1][k] = m[0][k] * 2 - m[1][k];
    }
    return m;
  }
};

}  // namespace

TEST_CASE("row space rank agrees with a naive elimination oracle") {
  RandomMatrices gen;
  for (int t = 0; t < 60; ++t) {
    const auto m = gen.next(2 + t % 5, 3 + t % 4);
    std::vector<Row> rows;
    for (const auto& q : m) rows.push_back(to_row(q));
    const std::size_t expect = naive_rank(m);
    CHECK(rank_of(rows, m[0].size()) == expect);
    std::vector<Row> shuffled = rows;
    std::reverse(shuffled.begin(), shuffled.end());
    std::rotate(shuffled.begin(), shuffled.begin() + 1, shuffled.end());
    CHECK(rank_of(shuffled, m[0].size()) == expect);
  }
}

TEST_CASE("membership agrees with solvability") {
  RandomMatrices gen;
  for (int t = 0; t < 40; ++t) {
    const auto m = gen.next(3, 5);
    const auto probe = gen.next(1, 5)[0];
    RowSpace s(5);
    for (const auto& q : m) s.insert(to_row(q));
    std::vector<QRow> aug = m;
    aug.push_back(probe);
    const bool solvable = naive_rank(aug) == naive_rank(m);
    CHECK(s.contains(to_row(probe)) == solvable);
  }
}

TEST_CASE("reduced row-echelon invariants") {
  RandomMatrices gen;
  const auto m = gen.next(5, 6);
  RowSpace s(6);
  for (const auto& q : m) s.insert(to_row(q));
  for (std::size_t k = 0; k < s.rank(); ++k) {
    const auto p = s.pivots()[k];
    CHECK(s.rows()[k][p] == Scalar(1));
    for (std::size_t c = 0; c < p; ++c) CHECK(s.rows()[k][c].is_zero());
    for (std::size_t o = 0; o < s.rank(); ++o)
      if (o != k) CHECK(s.rows()[o][p].is_zero());
    if (k > 0) CHECK(s.pivots()[k - 1] < p);
  }
}

TEST_CASE("nullspace vectors are annihilated") {
  RandomMatrices gen;
  for (int t = 0; t < 20; ++t) {
    const auto m = gen.next(3, 5);
    std::vector<Row> rows;
    for (const auto& q : m) rows.push_back(to_row(q));
    const auto ker = nullspace(rows, 5);
    CHECK(ker.size() + naive_rank(m) == 5);
    for (const auto& x : ker)
      for (const auto& row : rows) {
        Scalar dot(0);
        for (std::size_t k = 0; k < 5; ++k) dot += row[k] * x[k];
        CHECK(dot.is_zero());
      }
  }
}

TEST_CASE("windows") {
  const Window w = Window::centered(4, 3, 2, 1);
  CHECK(w.width() == 9);
  CHECK(w.inner_keys().size() == 7u * 5u * 3u);
  CHECK(w.inner_contains(BasisKey{3, Lattice{2, 1}}));
  CHECK_FALSE(w.inner_contains(BasisKey{4, Lattice{0, 0}}));
  CHECK(w.contains(BasisKey{4, Lattice{-3, 2}}));
  CHECK_THROWS_AS(Window::centered(1, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("subspace basis rejects out-of-window and mixed-weight input") {
  SubspaceBasis basis(Window::centered(2, 2, 2, 1));
  ModuleElement mixed = ModuleElement::basis(0, Lattice{0, 0});
  mixed.add(BasisKey{0, Lattice{1, 0}}, Scalar(1));
  CHECK_THROWS_AS(basis.insert(mixed), std::invalid_argument);
  CHECK_THROWS_AS(basis.insert(ModuleElement::basis(5, Lattice{0, 0})), std::invalid_argument);
  CHECK(basis.insert(ModuleElement::basis(1, Lattice{0, 0}, Scalar(3))));
  CHECK_FALSE(basis.insert(ModuleElement::basis(1, Lattice{0, 0})));
  CHECK(basis.contains(BasisKey{1, Lattice{0, 0}}));
  CHECK(basis.dimension() == 1);
  const auto parts = weight_components(mixed);
  CHECK(parts.size() == 2);
}
