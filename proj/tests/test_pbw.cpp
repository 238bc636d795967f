#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vab/catalog.hpp"
#include "vab/pbw.hpp"

using namespace vab;

namespace {

// Oracle: coefficients of prod_{m>=1} (1 - q^m)^{-colors} up to maxn,
// computed by an independent generating-function convolution.
std::vector<long> gf_dims(int colors, int maxn) {
  std::vector<long> c(maxn + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= maxn; ++m)
    for (int rep = 0; rep < colors; ++rep)
      for (int k = m; k <= maxn; ++k) c[k] += c[k - m];
  return c;
}

BaseActions heisenberg_base(const Rational& lambda) {
  BaseActions b;
  b.dim = 1;
  b.aAct.push_back(MatrixQ::identity(1));
  MatrixQ m(1, 1);
  m.set(0, 0, lambda);
  b.bAct.push_back(m);
  return b;
}

BaseActions sl2_trivial_base() {
  BaseActions b;
  b.dim = 1;
  b.aAct.push_back(MatrixQ::identity(1));
  for (int i = 0; i < 3; ++i) b.bAct.push_back(MatrixQ(1, 1));
  return b;
}

}  // namespace

TEST_CASE("M(U) dimensions match the partition oracles") {
  WindowedLieAlgebra wh(to_tca(catalog::heisenberg()), 6);
  GradedModule m = GradedModule::induce(wh, heisenberg_base(Rational(0)), 6);
  auto p1 = gf_dims(1, 6);  // 1 1 2 3 5 7 11
  for (long n = 0; n <= 6; ++n) CHECK(m.dim(n) == (std::size_t)p1[n]);
  CHECK(p1 == std::vector<long>{1, 1, 2, 3, 5, 7, 11});

  WindowedLieAlgebra ws(to_tca(catalog::sl2(Rational(1))), 4);
  GradedModule ms = GradedModule::induce(ws, sl2_trivial_base(), 4);
  auto p3 = gf_dims(3, 4);  // 1 3 9 22 51
  for (long n = 0; n <= 4; ++n) CHECK(ms.dim(n) == (std::size_t)p3[n]);
  CHECK(p3 == std::vector<long>{1, 3, 9, 22, 51});

  // n = 0 piece is the base
  CHECK(m.dim(0) == 1);
  CHECK(m.basis(0)[0].factors.empty());
}

TEST_CASE("every enumerated monomial is in canonical order") {
  WindowedLieAlgebra w(to_tca(catalog::trunc_poly2(Rational(-1))), 3);
  GradedModule vl = GradedModule::build_VL(w, 3, 2);
  for (long n = 0; n <= 3; ++n) {
    std::size_t prev_weight = 0;
    for (const auto& mono : vl.basis(n)) {
      CHECK(mono.sorted());
      CHECK(mono.degree() == n);
      CHECK(mono.a_weight() >= prev_weight);  // weight-ascending piece order
      prev_weight = mono.a_weight();
    }
  }
}

TEST_CASE("V_L piece dimensions with the A-weight cap") {
  // Heisenberg, cap 3: piece(0) = {1, e(-1), e(-1)^2, e(-1)^3}
  WindowedLieAlgebra wh(to_tca(catalog::heisenberg()), 4);
  GradedModule vl = GradedModule::build_VL(wh, 4, 3);
  CHECK(vl.dim(0) == 4);
  CHECK(vl.dim_capped(0, 1) == 2);
  CHECK(vl.b_only_count(0) == 1);
  CHECK(vl.b_only_count(3) == 3);  // partitions of 3

  // dimA = 0: piece(0) = Q 1 regardless of cap
  Tca abelian = Tca::zero(0, 1);
  WindowedLieAlgebra wa(abelian, 3);
  GradedModule va = GradedModule::build_VL(wa, 3, 5);
  CHECK(va.dim(0) == 1);

  // sl2, cap 0: piece(1) = B(-1)1, three dimensional
  WindowedLieAlgebra ws(to_tca(catalog::sl2(Rational(1))), 3);
  GradedModule vs = GradedModule::build_VL(ws, 3, 0);
  CHECK(vs.dim(1) == 3);
}

TEST_CASE("Fock action: b(1) b(-1) u = u and friends") {
  WindowedLieAlgebra wh(to_tca(catalog::heisenberg()), 5);
  GradedModule m = GradedModule::induce(wh, heisenberg_base(Rational(0)), 5);

  VecQ bm1(m.dim(1));
  bm1[0] = Rational(1);  // b(-1) u
  VecQ r = m.act_loop(false, 0, 1, 1, bm1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].is_one());

  // b(1) on b(-2)u vanishes ([b(1), b(-2)] = 0 in the quotient)
  PbwMonomial bm2;
  bm2.factors.push_back({false, 0, -2});
  VecQ v2(m.dim(2));
  v2[m.index_of(2, bm2)] = Rational(1);
  VecQ r2 = m.act_loop(false, 0, 1, 2, v2);
  CHECK(is_zero(r2));

  // b(1) on b(-1)^2 u = 2 b(-1) u
  PbwMonomial b11;
  b11.factors.push_back({false, 0, -1});
  b11.factors.push_back({false, 0, -1});
  VecQ v3(m.dim(2));
  v3[m.index_of(2, b11)] = Rational(1);
  VecQ r3 = m.act_loop(false, 0, 1, 2, v3);
  CHECK(r3[0] == Rational(2));

  // u(m) piece(n) = 0 whenever m + n < 0
  VecQ base(m.dim(0));
  base[0] = Rational(1);
  CHECK(m.act_loop(false, 0, 1, 0, base).empty());

  // e(-1) acts as the identity on every piece
  for (long n = 0; n <= 5; ++n) {
    for (std::size_t col = 0; col < m.dim(n); ++col) {
      VecQ e(m.dim(n));
      e[col] = Rational(1);
      VecQ img = m.act_loop(true, 0, -1, n, e);
      CHECK(img == e);
    }
  }
}

TEST_CASE("translation operator") {
  WindowedLieAlgebra wh(to_tca(catalog::heisenberg()), 4);
  GradedModule vl = GradedModule::build_VL(wh, 4, 2);

  // D 1 = 0
  VecQ vac(vl.dim(0));
  PbwMonomial one;
  vac[vl.index_of(0, one)] = Rational(1);
  CHECK(is_zero(vl.d_operator(0, vac)));

  // D(b(-1)1) = b(-2)1
  VecQ b1 = vl.embed_B(0);
  VecQ db = vl.d_operator(1, b1);
  PbwMonomial bm2;
  bm2.factors.push_back({false, 0, -2});
  CHECK(db[vl.index_of(2, bm2)].is_one());
  Rational total;
  for (const auto& x : db) total += x * x;
  CHECK(total == Rational(1));  // no other component

  // partial = 0: D(e(-1)1) = 0
  CHECK(is_zero(vl.d_operator(0, vl.embed_A(0))));

  // partial != 0: D(x(-1)1) = dx(-1)1 in trunc_poly2
  WindowedLieAlgebra wt(to_tca(catalog::trunc_poly2(Rational(-1))), 3);
  GradedModule vt = GradedModule::build_VL(wt, 3, 2);
  VecQ dxv = vt.d_operator(0, vt.embed_A(1));
  CHECK(dxv == vt.embed_B(2));  // dx has B index 2
}

TEST_CASE("iterate action of quadratic vectors") {
  WindowedLieAlgebra wh(to_tca(catalog::heisenberg()), 4);
  GradedModule vl = GradedModule::build_VL(wh, 4, 3);

  // (e(-1)e)_{-1} 1 = e(-1)e(-1)1
  PbwMonomial one;
  VecQ vac(vl.dim(0));
  vac[vl.index_of(0, one)] = Rational(1);
  VecQ q = vl.iterate_action(true, 0, true, 0, -1, 0, vac);
  PbwMonomial ee;
  ee.factors.push_back({true, 0, -1});
  ee.factors.push_back({true, 0, -1});
  CHECK(q[vl.index_of(0, ee)].is_one());

  // on the Fock module: (e(-1)b)_0 u = b u = lambda u
  GradedModule m = GradedModule::induce(wh, heisenberg_base(Rational(7)), 4);
  VecQ u(m.dim(0));
  u[0] = Rational(1);
  VecQ r = m.iterate_action(true, 0, false, 0, 0, 0, u);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == Rational(7));

  // grading truncation: (a(-1)b)_n w = 0 for large n
  CHECK(m.iterate_action(true, 0, false, 0, 5, 0, u).empty());
}

TEST_CASE("representation property and commutator consistency") {
  WindowedLieAlgebra wh(to_tca(catalog::heisenberg()), 3);
  GradedModule fock = GradedModule::induce(wh, heisenberg_base(Rational(1)), 3);
  CHECK(fock.representation_property_check());
  CHECK(fock.commutator_consistency());

  GradedModule vl = GradedModule::build_VL(wh, 3, 3);
  CHECK(vl.representation_property_check());
  CHECK(vl.commutator_consistency());
  CHECK(vl.d_bracket_check());

  WindowedLieAlgebra wt(to_tca(catalog::trunc_poly2(Rational(-1))), 3);
  GradedModule vt = GradedModule::build_VL(wt, 3, 3);
  CHECK(vt.representation_property_check());
  CHECK(vt.commutator_consistency());
  CHECK(vt.d_bracket_check());

  WindowedLieAlgebra ws(to_tca(catalog::sl2(Rational(1))), 3);
  GradedModule ms = GradedModule::induce(ws, sl2_trivial_base(), 3);
  CHECK(ms.representation_property_check());
  CHECK(ms.commutator_consistency());
}

TEST_CASE("abelian zero Tca: all commutators vanish") {
  Tca z = Tca::zero(1, 1);
  WindowedLieAlgebra w(z, 3);
  GradedModule vl = GradedModule::build_VL(w, 3, 2);
  CHECK(vl.commutator_consistency());
  // b(2) b(-2) 1 = [b(2), b(-2)] 1 = 0 in the abelian case
  PbwMonomial bm2;
  bm2.factors.push_back({false, 0, -2});
  VecQ v(vl.dim(2));
  v[vl.index_of(2, bm2)] = Rational(1);
  CHECK(is_zero(vl.act_loop(false, 0, 2, 2, v)));
}

TEST_CASE("embeddings of A and B are injective") {
  WindowedLieAlgebra wt(to_tca(catalog::trunc_poly2(Rational(-1))), 3);
  GradedModule vt = GradedModule::build_VL(wt, 3, 2);
  std::vector<VecQ> arows, brows;
  for (std::size_t i = 0; i < 2; ++i) arows.push_back(vt.embed_A(i));
  for (std::size_t i = 0; i < 3; ++i) brows.push_back(vt.embed_B(i));
  CHECK(SubspaceQ::span(arows, vt.dim(0)).dim() == 2);
  CHECK(SubspaceQ::span(brows, vt.dim(1)).dim() == 3);
}

TEST_CASE("window and cap exhaustion are reported") {
  WindowedLieAlgebra wh(to_tca(catalog::heisenberg()), 3);
  GradedModule vl = GradedModule::build_VL(wh, 3, 1);
  // raising past the stored degree range
  VecQ v(vl.dim(3));
  if (!v.empty()) v[0] = Rational(1);
  CHECK_THROWS_AS(vl.act_loop(false, 0, -1, 3, v), WindowExceeded);
  // exceeding the A-weight cap
  VecQ w = vl.embed_A(0);
  CHECK_THROWS_AS(vl.act_loop(true, 0, -1, 0, w), CapExceeded);
}
