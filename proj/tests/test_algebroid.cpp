#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vab/algebroid.hpp"
#include "vab/catalog.hpp"

using namespace vab;

TEST_CASE("commutative algebra checker") {
  CHECK(check_comm_algebra(CommAlgebra::rational_line()).ok());

  // Q[x]/(x^2)
  CommAlgebra A;
  A.dim = 2;
  A.mult = zero_tensor(2, 2, 2);
  A.mult[0][0][0] = Rational(1);
  A.mult[0][1][1] = Rational(1);
  A.mult[1][0][1] = Rational(1);
  A.unit = VecQ{Rational(1), Rational(0)};
  CHECK(check_comm_algebra(A).ok());

  A.mult[0][1][1] = Rational(0);  // e*x = 0 breaks the unit law
  ViolationReport rep = check_comm_algebra(A);
  CHECK_FALSE(rep.ok());
  CHECK(rep.has_axiom("unital"));
}

TEST_CASE("catalog algebroids satisfy the paper-sign axioms") {
  CHECK(check_vertex_algebroid(catalog::heisenberg()).ok());
  CHECK(check_vertex_algebroid(catalog::sl2(Rational(1))).ok());
  CHECK(check_vertex_algebroid(catalog::sl2(Rational(0))).ok());
  CHECK(check_vertex_algebroid(catalog::kaehler_x2()).ok());
  CHECK(check_vertex_algebroid(catalog::trunc_poly2(Rational(-1))).ok());
  CHECK(check_vertex_algebroid(catalog::trunc_poly3(Rational(-1))).ok());
  CHECK(check_vertex_algebroid(catalog::trunc_poly3(Rational(2))).ok());
  CHECK(check_vertex_algebroid(
            algebroid_direct_sum(catalog::heisenberg(), catalog::sl2(Rational(1))))
            .ok());
}

TEST_CASE("sign regression: Br12 convention fails exactly at va1 on trunc_poly3") {
  VertexAlgebroidData v = catalog::trunc_poly3(Rational(-1));
  REQUIRE(check_vertex_algebroid(v, SignConvention::Paper).ok());
  ViolationReport rep = check_vertex_algebroid(v, SignConvention::Br12);
  CHECK_FALSE(rep.ok());
  CHECK(rep.axioms() == std::vector<std::string>{"va1-act-assoc"});
}

TEST_CASE("the Br12 sign is invisible on associative-action instances") {
  // partial = 0 or associative action makes both conventions agree
  CHECK(check_vertex_algebroid(catalog::heisenberg(), SignConvention::Br12).ok());
  CHECK(check_vertex_algebroid(catalog::trunc_poly2(Rational(-1)), SignConvention::Br12).ok());
}

TEST_CASE("non-symmetric pairing is flagged at va3/pair-symmetric") {
  VertexAlgebroidData v = catalog::sl2(Rational(1));
  v.pair[0][1][0] += Rational(1);
  ViolationReport rep = check_vertex_algebroid(v);
  CHECK_FALSE(rep.ok());
  CHECK(rep.has_axiom("pair-symmetric"));
}

TEST_CASE("to_tca produces valid truncated structures") {
  for (const auto& v : {catalog::heisenberg(), catalog::sl2(Rational(1)),
                        catalog::trunc_poly2(Rational(-1)), catalog::trunc_poly3(Rational(-1)),
                        catalog::kaehler_x2()}) {
    REQUIRE(check_vertex_algebroid(v).ok());
    Tca c = to_tca(v);
    CHECK(check_tca(c).ok());
  }
}

TEST_CASE("to_tca round-trips through decompose_leibniz") {
  VertexAlgebroidData v = catalog::trunc_poly3(Rational(-1));
  Tca c = to_tca(v);
  LeibnizDecomposition d = decompose_leibniz(c);
  CHECK(d.report.ok());
  CHECK(d.bracket == v.bracket);
  CHECK(d.pairing == v.pair);
  for (std::size_t i = 0; i < v.dimB; ++i)
    for (std::size_t j = 0; j < v.A.dim; ++j) CHECK(d.action[i][j] == v.pi[i][j]);
}

TEST_CASE("heisenberg to_tca matches from_quadratic_lie") {
  Tca c = to_tca(catalog::heisenberg());
  Tensor2 bracket = zero_tensor(1, 1, 1);
  MatrixQ form(1, 1);
  form.set(0, 0, Rational(1));
  Tca q = from_quadratic_lie(bracket, form);
  CHECK(c.t1_bb == q.t1_bb);
  CHECK(c.t0_bb == q.t0_bb);
  CHECK(c.partial == q.partial);
}

TEST_CASE("lie_algebroid_quotient") {
  SUBCASE("partial = 0 keeps B") {
    AlgebroidQuotient q = lie_algebroid_quotient(catalog::sl2(Rational(1)));
    CHECK(q.report.ok());
    CHECK(q.lie.dimG == 3);
    CHECK(q.lie.bracket == catalog::sl2_bracket());
  }
  SUBCASE("heisenberg: quotient is Q b, abelian, zero anchor") {
    AlgebroidQuotient q = lie_algebroid_quotient(catalog::heisenberg());
    CHECK(q.report.ok());
    CHECK(q.lie.dimG == 1);
    CHECK(is_zero(q.lie.bracket[0][0]));
    CHECK(is_zero(q.lie.anchor[0][0]));
  }
  SUBCASE("trunc_poly2: A partial A = span{dx}, quotient 2-dim with anchor") {
    AlgebroidQuotient q = lie_algebroid_quotient(catalog::trunc_poly2(Rational(-1)));
    CHECK(q.report.ok());
    CHECK(q.a_partial_a.dim() == 1);
    CHECK(q.lie.dimG == 2);
    // anchor of the u-class: x -> x
    CHECK(q.lie.anchor[0][1][1] == Rational(1));
  }
  SUBCASE("trunc_poly3: A partial A = span{dx, xdx}") {
    AlgebroidQuotient q = lie_algebroid_quotient(catalog::trunc_poly3(Rational(-1)));
    CHECK(q.report.ok());
    CHECK(q.a_partial_a.dim() == 2);
    CHECK(q.lie.dimG == 3);
  }
}

TEST_CASE("la-module checker and simplicity") {
  AlgebroidQuotient qh = lie_algebroid_quotient(catalog::heisenberg());
  LAModule m0 = catalog::heisenberg_character(Rational(0));
  LAModule m1 = catalog::heisenberg_character(Rational(1));
  CHECK(check_la_module(qh.lie, m0).ok());
  CHECK(check_la_module(qh.lie, m1).ok());
  CHECK(simple_la_modules_check(qh.lie, m0));
  CHECK(simple_la_modules_check(qh.lie, m1));

  AlgebroidQuotient qs = lie_algebroid_quotient(catalog::sl2(Rational(1)));
  LAModule adj = catalog::sl2_adjoint();
  CHECK(check_la_module(qs.lie, adj).ok());
  CHECK(simple_la_modules_check(qs.lie, adj));
  CHECK(check_la_module(qs.lie, catalog::sl2_trivial()).ok());

  SUBCASE("W = A with the anchor action is a module") {
    AlgebroidQuotient qt = lie_algebroid_quotient(catalog::trunc_poly2(Rational(-1)));
    LAModule w;
    w.dimW = qt.lie.A.dim;
    for (std::size_t i = 0; i < qt.lie.A.dim; ++i) {
      MatrixQ op(w.dimW, w.dimW);
      for (std::size_t j = 0; j < w.dimW; ++j)
        for (std::size_t k = 0; k < w.dimW; ++k)
          if (!qt.lie.A.mult[i][j][k].is_zero()) op.set(k, j, qt.lie.A.mult[i][j][k]);
      w.aAct.push_back(op);
    }
    for (std::size_t i = 0; i < qt.lie.dimG; ++i) {
      MatrixQ op(w.dimW, w.dimW);
      for (std::size_t j = 0; j < w.dimW; ++j)
        for (std::size_t k = 0; k < w.dimW; ++k)
          if (!qt.lie.anchor[i][j][k].is_zero()) op.set(k, j, qt.lie.anchor[i][j][k]);
      w.gAct.push_back(op);
    }
    CHECK(check_la_module(qt.lie, w).ok());
  }

  SUBCASE("direct sum of distinct characters is not simple") {
    LAModule s = direct_sum(m0, m1);
    CHECK(check_la_module(qh.lie, s).ok());
    CHECK_FALSE(simple_la_modules_check(qh.lie, s));
    CHECK(invariant_subspace_witness(s).dim() == 1);
  }

  SUBCASE("broken compatibility is reported") {
    LAModule bad = adj;
    bad.gAct[0].add_to(0, 0, Rational(1));  // h no longer acts by ad(h)
    ViolationReport rep = check_la_module(qs.lie, bad);
    CHECK_FALSE(rep.ok());
  }
}

TEST_CASE("a conjugated direct sum of characters is still caught") {
  // same module as above but in a basis where the summands are hidden
  AlgebroidQuotient qh = lie_algebroid_quotient(catalog::heisenberg());
  LAModule s;
  s.dimW = 2;
  s.aAct.push_back(MatrixQ::identity(2));
  // b acts with eigenvalues 0,1 but eigenvectors (1,1) and (1,-1)
  MatrixQ b(2, 2);
  b.set(0, 0, Rational(1, 2));
  b.set(0, 1, Rational(1, 2));
  b.set(1, 0, Rational(1, 2));
  b.set(1, 1, Rational(1, 2));
  s.gAct.push_back(b);
  CHECK(check_la_module(qh.lie, s).ok());
  CHECK_FALSE(simple_la_modules_check(qh.lie, s));
}
