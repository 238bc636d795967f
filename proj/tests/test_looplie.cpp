#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vab/catalog.hpp"
#include "vab/looplie.hpp"

using namespace vab;

namespace {

Tca heisenberg_tca() { return to_tca(catalog::heisenberg()); }
Tca sl2_tca(long level) { return to_tca(catalog::sl2(Rational(level))); }
Tca trunc2_tca() { return to_tca(catalog::trunc_poly2(Rational(-1))); }

}  // namespace

TEST_CASE("hat_partial term by term") {
  Tca h = heisenberg_tca();  // partial = 0
  RawLoopElement z = hat_partial(h, VecQ{Rational(1)}, 0);
  CHECK(is_zero(z.aPart));
  CHECK(is_zero(z.bPart));
  CHECK(z.degree == 0);

  RawLoopElement e2 = hat_partial(h, VecQ{Rational(1)}, 2);
  CHECK(e2.degree == -2);
  CHECK(e2.aPart == VecQ{Rational(2)});
  CHECK(is_zero(e2.bPart));

  Tca idp = Tca::zero(1, 1);
  idp.partial.set(0, 0, Rational(1));
  RawLoopElement g = hat_partial(idp, VecQ{Rational(1)}, 1);
  CHECK(g.degree == -1);
  CHECK(g.aPart == VecQ{Rational(1)});
  CHECK(g.bPart == VecQ{Rational(1)});
}

TEST_CASE("raw_bracket matches the defining formulas") {
  Tca h = heisenberg_tca();
  // [b t^1, b t^-1] = 1 * <b,b> e t^-1  (degree 0, aPart e)
  RawLoopElement x = raw_loop_basis(h, false, 0, 1);
  RawLoopElement y = raw_loop_basis(h, false, 0, -1);
  RawLoopElement br = raw_bracket(h, x, y);
  CHECK(br.degree == 0);
  CHECK(br.aPart == VecQ{Rational(1)});
  CHECK(is_zero(br.bPart));

  // [a t^0, a' t^5] = 0
  Tca s = sl2_tca(1);
  RawLoopElement a0 = raw_loop_basis(s, true, 0, 0);
  RawLoopElement a5 = raw_loop_basis(s, true, 0, 5);
  RawLoopElement z = raw_bracket(s, a0, a5);
  CHECK(is_zero(z.aPart));
  CHECK(is_zero(z.bPart));

  // sl2 trace form: [h t^1, h t^-1] = <h,h> e t^-1 = 2 e t^-1
  RawLoopElement hx = raw_loop_basis(s, false, 0, 1);
  RawLoopElement hy = raw_loop_basis(s, false, 0, -1);
  RawLoopElement hb = raw_bracket(s, hx, hy);
  CHECK(hb.degree == 0);
  CHECK(hb.aPart == VecQ{Rational(2)});
  CHECK(is_zero(hb.bPart));
}

TEST_CASE("normal form folds the A part") {
  Tca h = heisenberg_tca();
  WindowedLieAlgebra w(h, 3);
  // partial = 0: a t^-2 (degree 1) reduces to zero coordinates
  RawLoopElement am2 = raw_loop_basis(h, true, 0, -2);
  CHECK(am2.degree == 1);
  CHECK(WindowedLieAlgebra::is_zero_elem(w.normal_form(am2)));

  // injective partial: a t^-2 -> partial(a) t^-1
  Tca idp = Tca::zero(1, 1);
  idp.partial.set(0, 0, Rational(1));
  WindowedLieAlgebra wi(idp, 3);
  NormalLoopElement nf = wi.normal_form(raw_loop_basis(idp, true, 0, -2));
  CHECK(nf.degree == 1);
  CHECK(nf.b == VecQ{Rational(1)});

  // normal_form(hat_partial(a, n)) = 0 for all n in window
  Tca t2 = trunc2_tca();
  WindowedLieAlgebra wt(t2, 3);
  for (long n = -3; n <= 3; ++n)
    for (std::size_t i = 0; i < t2.dim0; ++i) {
      VecQ a(t2.dim0);
      a[i] = Rational(1);
      RawLoopElement g = hat_partial(t2, a, n);
      if (std::abs(g.degree) > 3) continue;
      CHECK(WindowedLieAlgebra::is_zero_elem(wt.normal_form(g)));
    }
  // idempotence on the canonical embedding: reducing a reduced element
  // changes nothing
  NormalLoopElement e0 = wt.basis_element(0, t2.dim0);  // first complement class
  RawLoopElement raw;
  raw.degree = 0;
  raw.aPart = e0.a;
  raw.bPart = e0.b;
  NormalLoopElement again = wt.normal_form(raw);
  CHECK(again.a == e0.a);
  CHECK(again.b == e0.b);
}

TEST_CASE("graded dimensions of the quotient") {
  WindowedLieAlgebra wh(heisenberg_tca(), 4);
  CHECK(wh.dim_at(1) == 1);
  CHECK(wh.dim_at(-3) == 1);
  CHECK(wh.dim_at(0) == 2);  // dimA + dimB - rank(partial) = 1 + 1 - 0

  WindowedLieAlgebra wt(trunc2_tca(), 3);
  CHECK(wt.dim_at(2) == 3);
  CHECK(wt.dim_at(0) == 2 + 3 - 1);
}

TEST_CASE("Heisenberg bracket table: [b(m), b(n)] = m delta_{m+n,0} e(-1)") {
  Tca h = heisenberg_tca();
  WindowedLieAlgebra w(h, 4);
  for (long d1 = -4; d1 <= 4; ++d1)
    for (long d2 = -4; d2 <= 4; ++d2) {
      if (d1 == 0 || d2 == 0 || std::abs(d1 + d2) > 4) continue;
      const NormalLoopElement& t = w.bracket(d1, 0, d2, 0);
      if (d1 + d2 == 0) {
        // m = -d1
        CHECK(t.a == VecQ{Rational(-d1)});
        CHECK(is_zero(t.b));
      } else {
        CHECK(WindowedLieAlgebra::is_zero_elem(t));
      }
    }
}

TEST_CASE("zero Tca gives an abelian windowed algebra") {
  WindowedLieAlgebra w(Tca::zero(1, 2), 3);
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      if (std::abs(m + n) > 3) continue;
      for (std::size_t i = 0; i < w.dim_at(m); ++i)
        for (std::size_t j = 0; j < w.dim_at(n); ++j)
          CHECK(WindowedLieAlgebra::is_zero_elem(w.bracket(m, i, n, j)));
    }
}

TEST_CASE("windowed construction passes for every catalog instance") {
  CHECK_NOTHROW(WindowedLieAlgebra(heisenberg_tca(), 4));
  CHECK_NOTHROW(WindowedLieAlgebra(sl2_tca(1), 4));
  CHECK_NOTHROW(WindowedLieAlgebra(sl2_tca(0), 4));
  CHECK_NOTHROW(WindowedLieAlgebra(trunc2_tca(), 3));
  CHECK_NOTHROW(WindowedLieAlgebra(to_tca(catalog::trunc_poly3(Rational(-1))), 3));
  CHECK_NOTHROW(WindowedLieAlgebra(to_tca(catalog::kaehler_x2()), 4));
}

TEST_CASE("condition checkers accept valid data") {
  for (const Tca& c : {heisenberg_tca(), sl2_tca(1), trunc2_tca(), Tca::zero(2, 2)}) {
    CHECK(check_ideal_conditions(c).ok());
    CHECK(check_skew_conditions(c).ok());
    CHECK(check_jacobi_conditions(c).ok());
  }
}

TEST_CASE("perturbed anchor breaks the ideal conditions, and the membership oracle agrees") {
  Tca c = trunc2_tca();
  // b_1 partial(a') = b_0 a' fails once the action tensor is off by e
  c.t0_ba[0][1][0] += Rational(1);
  ViolationReport rep = check_ideal_conditions(c);
  CHECK_FALSE(rep.ok());
  CHECK(rep.has_axiom("ideal-b1-partial"));
  LoopMembershipVerdict v = loop_membership_oracle(c, 2);
  CHECK_FALSE(v.ideal_ok);

  LoopMembershipVerdict ok = loop_membership_oracle(trunc2_tca(), 2);
  CHECK(ok.ideal_ok);
  CHECK(ok.skew_ok);
  CHECK(ok.jacobi_ok);
}

TEST_CASE("pairing asymmetry breaks skew, Leibniz perturbation breaks Jacobi") {
  Tca c = sl2_tca(1);
  c.t1_bb[0][1][0] += Rational(1);
  CHECK(check_ideal_conditions(c).ok());
  ViolationReport rep = check_skew_conditions(c);
  CHECK(rep.has_axiom("skew-pairing"));
  LoopMembershipVerdict v = loop_membership_oracle(c, 2);
  CHECK(v.ideal_ok);
  CHECK_FALSE(v.skew_ok);

  Tca c2 = sl2_tca(1);
  c2.t0_bb[0][1][1] += Rational(1);  // tweak [h,x]
  ViolationReport rep2 = check_jacobi_conditions(c2);
  CHECK(rep2.has_axiom("jacobi-bbb0"));
  LoopMembershipVerdict v2 = loop_membership_oracle(c2, 2);
  CHECK_FALSE(v2.jacobi_ok);
}

TEST_CASE("degree zero subalgebra") {
  SUBCASE("Heisenberg: 2-dim abelian") {
    WindowedLieAlgebra w(heisenberg_tca(), 3);
    DegreeZeroAlgebra z = degree_zero_algebra(w);
    CHECK(z.report.ok());
    CHECK(z.dimA == 1);
    CHECK(z.dimG == 1);
    for (const auto& row : z.bracket)
      for (const auto& v : row) CHECK(is_zero(v));
  }
  SUBCASE("sl2: Q e(-1) central plus the sl2 block") {
    WindowedLieAlgebra w(sl2_tca(1), 3);
    DegreeZeroAlgebra z = degree_zero_algebra(w);
    CHECK(z.report.ok());
    CHECK(z.dimG == 3);
    // g block reproduces the sl2 bracket
    Tensor2 br = catalog::sl2_bracket();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          CHECK(z.bracket[1 + i][1 + j][1 + k] == br[i][j][k]);
  }
  SUBCASE("surjective partial leaves only A") {
    Tca idp = Tca::zero(1, 1);
    idp.partial.set(0, 0, Rational(1));
    WindowedLieAlgebra w(idp, 3);
    DegreeZeroAlgebra z = degree_zero_algebra(w);
    CHECK(z.report.ok());
    CHECK(z.dimG == 0);
    CHECK(z.dimA == 1);
  }
}

TEST_CASE("central elements") {
  WindowedLieAlgebra wh(heisenberg_tca(), 4);
  CentralElements ch = central_elements(wh);
  CHECK(ch.report.ok());
  REQUIRE(ch.central.size() == 1);
  CHECK(ch.central[0] == VecQ{Rational(1)});

  Tca idp = Tca::zero(1, 1);
  idp.partial.set(0, 0, Rational(1));
  CentralElements ci = central_elements(WindowedLieAlgebra(idp, 3));
  CHECK(ci.central.empty());

  Tca sum = direct_sum(sl2_tca(1), heisenberg_tca());
  CentralElements cs = central_elements(WindowedLieAlgebra(sum, 3));
  CHECK(cs.report.ok());
  CHECK(cs.central.size() == 2);
}

TEST_CASE("commutator series check") {
  CHECK(commutator_series_check(WindowedLieAlgebra(heisenberg_tca(), 4)));
  CHECK(commutator_series_check(WindowedLieAlgebra(sl2_tca(1), 3)));
  CHECK(commutator_series_check(WindowedLieAlgebra(trunc2_tca(), 3)));
  CHECK(commutator_series_check(WindowedLieAlgebra(Tca::zero(1, 1), 3)));
}

TEST_CASE("bracket outside the window throws") {
  WindowedLieAlgebra w(heisenberg_tca(), 2);
  CHECK_THROWS_AS(w.bracket(2, 0, 1, 0), std::out_of_range);
}
