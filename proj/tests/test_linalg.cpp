#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vab/matrix.hpp"
#include "vab/subspace.hpp"

using namespace vab;

namespace {

MatrixQ mat(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.set(r, c, Rational(rows[r][c]));
  return m;
}

VecQ vec(const std::vector<long>& v) {
  VecQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

MatrixQ random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  MatrixQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      int e = entry(rng);
      if (e != 0) m.set(r, c, Rational(e));
    }
  return m;
}

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK((Rational(1, 3) + Rational(2, 5)).str() == "11/15");
  CHECK((Rational(1, 2) * Rational(2)).is_one());
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("rref identity and hand examples") {
  auto [r1, p1] = rref(MatrixQ::identity(2));
  CHECK(r1 == MatrixQ::identity(2));
  CHECK(p1 == std::vector<std::size_t>{0, 1});

  // [[2,4],[1,2]] -> [[1,2]] with pivot column 0
  auto [r2, p2] = rref(mat({{2, 4}, {1, 2}}, 2));
  CHECK(p2 == std::vector<std::size_t>{0});
  CHECK(r2.at(0, 0).is_one());
  CHECK(r2.at(0, 1) == Rational(2));
  CHECK(r2.rows() == 1);

  auto [r3, p3] = rref(MatrixQ(3, 3));
  CHECK(p3.empty());
  CHECK(r3.rows() == 0);
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    MatrixQ m = random_matrix(rng, 4, 6);
    auto [r, p] = rref(m);
    auto [rr, pp] = rref(r);
    CHECK(r == rr);
    CHECK(p == pp);
  }
}

TEST_CASE("kernel basics and rank-nullity") {
  CHECK(kernel(MatrixQ::identity(3)).dim() == 0);
  CHECK(kernel(MatrixQ(3, 3)).dim() == 3);

  SubspaceQ k = kernel(mat({{1, 1}}, 2));
  CHECK(k.dim() == 1);
  CHECK(k.contains(vec({1, -1})));
  CHECK_FALSE(k.contains(vec({1, 1})));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    MatrixQ m = random_matrix(rng, 5, 7);
    CHECK(rank(m) + kernel(m).dim() == m.cols());
    // kernel vectors actually die
    SubspaceQ k2 = kernel(m);
    for (std::size_t i = 0; i < k2.dim(); ++i)
      CHECK(is_zero(m.apply(k2.basis().row_dense(i))));
  }
}

TEST_CASE("complement uses standard vectors at non-pivot coordinates") {
  SubspaceQ zero3(3);
  CHECK(zero3.complement().dim() == 3);

  SubspaceQ e1 = SubspaceQ::span({vec({1, 0})}, 2);
  SubspaceQ c = e1.complement();
  CHECK(c.dim() == 1);
  CHECK(c.contains(vec({0, 1})));

  SubspaceQ s = SubspaceQ::span({vec({1, 1, 0})}, 3);
  SubspaceQ cs = s.complement();
  CHECK(cs.dim() == 2);
  CHECK(cs.contains(vec({0, 1, 0})));
  CHECK(cs.contains(vec({0, 0, 1})));
  CHECK(sum(s, cs).dim() == 3);
  CHECK(intersect(s, cs).dim() == 0);
}

TEST_CASE("lattice operations") {
  SubspaceQ full2 = SubspaceQ::full(2);
  SubspaceQ diag = SubspaceQ::span({vec({1, 1})}, 2);
  CHECK(intersect(full2, diag) == diag);
  CHECK(sum(SubspaceQ::span({vec({1, 0})}, 2), SubspaceQ::span({vec({0, 1})}, 2)) == full2);
  CHECK(intersect(full2, diag).contains(vec({1, 1})));
  CHECK_THROWS_AS(sum(full2, SubspaceQ::full(3)), std::invalid_argument);
}

TEST_CASE("Grassmann identity on random subspaces") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    SubspaceQ s1 = SubspaceQ::row_space(random_matrix(rng, 3, 6));
    SubspaceQ s2 = SubspaceQ::row_space(random_matrix(rng, 3, 6));
    CHECK(s1.dim() + s2.dim() == sum(s1, s2).dim() + intersect(s1, s2).dim());
    SubspaceQ i = intersect(s1, s2);
    CHECK(s1.contains(i));
    CHECK(s2.contains(i));
  }
}

TEST_CASE("matrix product and transpose") {
  MatrixQ a = mat({{1, 2}, {3, 4}}, 2);
  MatrixQ b = mat({{0, 1}, {1, 0}}, 2);
  CHECK(a.multiply(b) == mat({{2, 1}, {4, 3}}, 2));
  CHECK(a.transpose() == mat({{1, 3}, {2, 4}}, 2));
  CHECK(a.apply(vec({1, 1})) == vec({3, 7}));
  CHECK(a.apply_left(vec({1, 1})) == vec({4, 6}));
}
