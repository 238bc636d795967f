#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vab/catalog.hpp"
#include "vab/vb.hpp"

using namespace vab;

namespace {

std::vector<long> gf_dims(int colors, int maxn) {
  std::vector<long> c(maxn + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= maxn; ++m)
    for (int rep = 0; rep < colors; ++rep)
      for (int k = m; k <= maxn; ++k) c[k] += c[k - m];
  return c;
}

}  // namespace

TEST_CASE("E generators of the Heisenberg algebroid") {
  VertexAlgebroidData alg = catalog::heisenberg();
  WindowedLieAlgebra w(to_tca(alg), 4);
  GradedModule vl = GradedModule::build_VL(w, 4, 4);
  EGenerators eg = build_E(alg, vl);
  CHECK(eg.report.ok());
  // e - 1 and e(-1)^2 - e(-1): the span is 2-dimensional
  CHECK(eg.span0.dim() == 2);
  // e(-1)b(-1)1 - b(-1)1
  CHECK(eg.span1.dim() == 1);
  VecQ v = vl.act_loop(true, 0, -1, 1, vl.embed_B(0));
  v = sub(v, vl.embed_B(0));
  CHECK(eg.span1.contains(v));
}

TEST_CASE("E generators: degenerate cases") {
  // B = 0 over A = Q e: E1 empty, E0 = {e - 1}
  VertexAlgebroidData alg = VertexAlgebroidData::zero(CommAlgebra::rational_line(), 0);
  WindowedLieAlgebra w(to_tca(alg), 3);
  GradedModule vl = GradedModule::build_VL(w, 3, 4);
  EGenerators eg = build_E(alg, vl);
  CHECK(eg.report.ok());
  CHECK(eg.span1.dim() == 0);
  CHECK(eg.span0.dim() == 1);
}

TEST_CASE("closure facts hold on every catalog algebroid") {
  for (const auto& alg :
       {catalog::heisenberg(), catalog::sl2(Rational(1)), catalog::sl2(Rational(0)),
        catalog::trunc_poly2(Rational(-1)), catalog::kaehler_x2()}) {
    WindowedLieAlgebra w(to_tca(alg), 3);
    GradedModule vl = GradedModule::build_VL(w, 3, 4);
    EGenerators eg = build_E(alg, vl);
    CHECK(eg.report.ok());
  }
}

TEST_CASE("Heisenberg ideal slice at degree 0") {
  VertexAlgebroidData alg = catalog::heisenberg();
  WindowedLieAlgebra w(to_tca(alg), 4);
  GradedModule vl = GradedModule::build_VL(w, 4, 3 + 2 + 2);
  EGenerators eg = build_E(alg, vl);
  auto spans = build_IB_spans(vl, eg, 4);

  IdealSlice s = build_IB_slice(vl, spans, 0, 3);
  // capped piece(0) = {1, e, e^2, e^3}, slice = {e^k - e^{k-1}: k<=3}
  CHECK(vl.dim_capped(0, 3) == 4);
  CHECK(s.subspace.dim() == 3);
  CHECK(s.stabilized);
  // e - 1 is there
  VecQ em1(4);
  em1[0] = Rational(-1);
  em1[1] = Rational(1);
  CHECK(s.subspace.contains(em1));

  // decomposition at W = 4: piece(0) dim 5 = slice 4 + A 1
  IdealSlice s4 = build_IB_slice(vl, spans, 0, 4);
  CHECK(vl.dim_capped(0, 4) == 5);
  CHECK(s4.subspace.dim() == 4);
  CHECK(check_degree01_decomposition(alg, vl, spans, 4).ok());
}

TEST_CASE("Heisenberg tower dims are the partition numbers") {
  VbTower t(catalog::heisenberg(), 6, 6, 3, 2);
  CHECK(t.eg.report.ok());
  CHECK(check_degree01_decomposition(catalog::heisenberg(), t.vl, t.spans, 3).ok());
  auto rows = vb_graded_dims(t.vl, t.spans, 6, 3);
  auto oracle = gf_dims(1, 6);
  for (long n = 0; n <= 6; ++n) {
    CHECK(rows[n].dim == (std::size_t)oracle[n]);
    CHECK(rows[n].stabilized);
    CHECK(rows[n].upper_bound == (std::size_t)oracle[n]);
    CHECK(spanning_check(t.vl, t.spans, n, 3));
  }
  // stabilization appears already at W = 2
  auto rows2 = vb_graded_dims(t.vl, t.spans, 6, 2);
  for (long n = 0; n <= 6; ++n) {
    CHECK(rows2[n].dim == (std::size_t)oracle[n]);
    CHECK(rows2[n].stabilized);
  }
}

TEST_CASE("affine sl2 tower dims match the three-color oracle") {
  VbTower t(catalog::sl2(Rational(1)), 4, 4, 3, 2);
  CHECK(t.eg.report.ok());
  CHECK(check_degree01_decomposition(catalog::sl2(Rational(1)), t.vl, t.spans, 3).ok());
  auto rows = vb_graded_dims(t.vl, t.spans, 4, 3);
  auto oracle = gf_dims(3, 4);  // 1 3 9 22 51
  for (long n = 0; n <= 4; ++n) {
    CHECK(rows[n].dim == (std::size_t)oracle[n]);
    CHECK(rows[n].stabilized);
    CHECK(spanning_check(t.vl, t.spans, n, 3));
  }
  // sl2, degree 1: quotient of the capped piece by the slice is B
  IdealSlice s1 = build_IB_slice(t.vl, t.spans, 1, 1);
  CHECK(t.vl.dim_capped(1, 1) - s1.subspace.dim() == 3);
}

TEST_CASE("slice monotonicity in the weight cap") {
  VbTower t(catalog::heisenberg(), 5, 5, 3, 2);
  for (long n = 0; n <= 5; ++n) {
    IdealSlice s1 = build_IB_slice(t.vl, t.spans, n, 1);
    IdealSlice s2 = build_IB_slice(t.vl, t.spans, n, 2);
    IdealSlice s3 = build_IB_slice(t.vl, t.spans, n, 3);
    CHECK(s1.subspace.dim() <= s2.subspace.dim());
    CHECK(s2.subspace.dim() <= s3.subspace.dim());
    // slices embed: padding with zeros lands inside the larger slice
    for (std::size_t r = 0; r < s1.subspace.dim(); ++r) {
      VecQ v = s1.subspace.basis().row_dense(r);
      v.resize(t.vl.dim_capped(n, 2));
      CHECK(s2.subspace.contains(v));
    }
  }
}

TEST_CASE("a partial != 0 tower stays exact at the bottom") {
  VertexAlgebroidData alg = catalog::trunc_poly2(Rational(-1));
  VbTower t(alg, 3, 3, 2, 2);
  CHECK(t.eg.report.ok());
  CHECK(check_degree01_decomposition(alg, t.vl, t.spans, 2).ok());
  auto rows = vb_graded_dims(t.vl, t.spans, 3, 2);
  CHECK(rows[0].dim == 2);  // dim A
  CHECK(rows[1].dim == 3);  // dim B
  for (long n = 0; n <= 3; ++n) CHECK(spanning_check(t.vl, t.spans, n, 2));
}
