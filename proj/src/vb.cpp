#include "vab/vb.hpp"

#include <algorithm>

#include "vab/parallel.hpp"

namespace vab {

std::vector<EGen> e_generator_list(const VertexAlgebroidData& alg) {
  std::vector<EGen> out;
  out.push_back({EGen::UnitMinusVacuum, 0, 0});
  for (std::size_t i = 0; i < alg.A.dim; ++i)
    for (std::size_t j = 0; j < alg.A.dim; ++j) out.push_back({EGen::QuadAA, i, j});
  for (std::size_t i = 0; i < alg.A.dim; ++i)
    for (std::size_t j = 0; j < alg.dimB; ++j) out.push_back({EGen::QuadAB, i, j});
  return out;
}

VecQ e_gen_mode(const VertexAlgebroidData& alg, const GradedModule& g, const EGen& gen, long n,
                long from, const VecQ& w) {
  switch (gen.kind) {
    case EGen::UnitMinusVacuum: {
      long target = from - n - 1;
      if (target < 0) return VecQ();
      VecQ out(g.dim(target));
      for (std::size_t i = 0; i < alg.A.dim; ++i) {
        if (alg.A.unit[i].is_zero()) continue;
        VecQ part = g.act_loop(true, i, n, from, w);
        if (!part.empty()) axpy(out, alg.A.unit[i], part);
      }
      if (n == -1) out = sub(out, w);
      return out;
    }
    case EGen::QuadAA: {
      long target = from - n - 1;
      if (target < 0) return VecQ();
      VecQ out = g.iterate_action(true, gen.i, true, gen.j, n, from, w);
      if (out.empty()) out = VecQ(g.dim(target));
      const VecQ& prod = alg.A.mult[gen.i][gen.j];
      for (std::size_t k = 0; k < prod.size(); ++k) {
        if (prod[k].is_zero()) continue;
        VecQ part = g.act_loop(true, k, n, from, w);
        if (!part.empty()) axpy(out, -prod[k], part);
      }
      return out;
    }
    case EGen::QuadAB: {
      long target = from - n;
      if (target < 0) return VecQ();
      VecQ out = g.iterate_action(true, gen.i, false, gen.j, n, from, w);
      if (out.empty()) out = VecQ(g.dim(target));
      const VecQ& img = alg.act[gen.i][gen.j];
      for (std::size_t k = 0; k < img.size(); ++k) {
        if (img[k].is_zero()) continue;
        VecQ part = g.act_loop(false, k, n, from, w);
        if (!part.empty()) axpy(out, -img[k], part);
      }
      return out;
    }
  }
  return VecQ();
}

EGenerators build_E(const VertexAlgebroidData& alg, const GradedModule& vl) {
  if (!vl.has_a_factors() || vl.a_cap() < 3)
    throw std::invalid_argument("vb: build_E needs the vacuum module with A-weight cap >= 3");
  EGenerators eg;
  VecQ vac(vl.dim(0));
  PbwMonomial one;
  vac[vl.index_of(0, one)] = Rational(1);

  for (const EGen& gen : e_generator_list(alg)) {
    VecQ v = e_gen_mode(alg, vl, gen, -1, 0, vac);
    if (gen.degree() == 0)
      eg.e0.push_back(std::move(v));
    else
      eg.e1.push_back(std::move(v));
  }
  eg.span0 = SubspaceQ::span(eg.e0, vl.dim(0));
  eg.span1 = SubspaceQ::span(eg.e1, vl.dim(1));

  ViolationReport& rep = eg.report;
  const Tca& c = vl.lie().source();
  // v(n) E c E for the modes that do not vanish by grading
  auto check_in = [&](const VecQ& img, const SubspaceQ& span, const char* id, long i0, long i1) {
    if (!img.empty() && !span.contains(img))
      rep.add(id, {i0, i1}, "image leaves the span of E");
  };
  for (std::size_t v = 0; v < eg.e1.size(); ++v) {
    for (std::size_t i = 0; i < c.dim0; ++i)
      check_in(vl.act_loop(true, i, 0, 1, eg.e1[v]), eg.span0, "closure-a0-e1", (long)i, (long)v);
    for (std::size_t i = 0; i < c.dim1; ++i) {
      check_in(vl.act_loop(false, i, 0, 1, eg.e1[v]), eg.span1, "closure-b0-e1", (long)i, (long)v);
      check_in(vl.act_loop(false, i, 1, 1, eg.e1[v]), eg.span0, "closure-b1-e1", (long)i, (long)v);
    }
  }
  for (std::size_t v = 0; v < eg.e0.size(); ++v)
    for (std::size_t i = 0; i < c.dim1; ++i)
      check_in(vl.act_loop(false, i, 0, 0, eg.e0[v]), eg.span0, "closure-b0-e0", (long)i, (long)v);

  // D E0 c E1
  for (std::size_t v = 0; v < eg.e0.size(); ++v)
    check_in(vl.d_operator(0, eg.e0[v]), eg.span1, "closure-d-e0", (long)v, 0);

  // B(-1) E0 c A(-1) E1 + E1
  std::vector<VecQ> big = eg.e1;
  for (std::size_t i = 0; i < c.dim0; ++i)
    for (const VecQ& w : eg.e1) big.push_back(vl.act_loop(true, i, -1, 1, w));
  SubspaceQ target = SubspaceQ::span(big, vl.dim(2));
  for (std::size_t v = 0; v < eg.e0.size(); ++v)
    for (std::size_t i = 0; i < c.dim1; ++i)
      check_in(vl.act_loop(false, i, -1, 0, eg.e0[v]), target, "closure-bm1-e0", (long)i, (long)v);

  rep.sort();
  return eg;
}

std::vector<SubspaceQ> build_IB_spans(const GradedModule& vl, const EGenerators& eg, long n_max) {
  std::vector<SubspaceQ> spans;
  for (long d = 0; d <= n_max; ++d) spans.emplace_back(vl.dim(d));

  // seeds: D^j c for c in E
  for (const VecQ& c0 : eg.e0) {
    VecQ cur = c0;
    for (long d = 0; d <= n_max; ++d) {
      spans[d].grow(cur);
      if (d == n_max) break;
      cur = vl.d_operator(d, cur);
    }
  }
  for (const VecQ& c1 : eg.e1) {
    VecQ cur = c1;
    for (long d = 1; d <= n_max; ++d) {
      spans[d].grow(cur);
      if (d == n_max) break;
      cur = vl.d_operator(d, cur);
    }
  }

  // close under the raising part of U(L^{<0}); a(-1) only applies where
  // weight headroom remains
  const WindowedLieAlgebra& w = vl.lie();
  bool grew = true;
  while (grew) {
    grew = false;
    for (long d = 0; d <= n_max; ++d) {
      if (spans[d].dim() == 0) continue;
      // b(-k) raising
      for (long k = 1; d + k <= n_max; ++k)
        for (std::size_t i = 0; i < w.dimB(); ++i) {
          std::vector<VecQ> images(spans[d].dim());
          parallel_for(spans[d].dim(), [&](std::size_t r) {
            images[r] = vl.act(k, i, d, spans[d].basis().row_dense(r));
          });
          for (const auto& img : images)
            if (spans[d + k].grow(img)) grew = true;
        }
      // a(-1), on the headroom prefix
      std::size_t limit = vl.action_col_limit(0, d);
      SubspaceQ prefix(vl.dim(d));
      {
        std::vector<VecQ> pref_rows;
        for (std::size_t c = 0; c < limit; ++c) {
          VecQ e(vl.dim(d));
          e[c] = Rational(1);
          pref_rows.push_back(std::move(e));
        }
        prefix = SubspaceQ::span(pref_rows, vl.dim(d));
      }
      SubspaceQ headroom = intersect(spans[d], prefix);
      for (std::size_t i = 0; i < w.dimA(); ++i)
        for (std::size_t r = 0; r < headroom.dim(); ++r)
          if (spans[d].grow(vl.act(0, i, d, headroom.basis().row_dense(r)))) grew = true;
    }
  }
  return spans;
}

namespace {

/// Vectors of s supported on the first k coordinates, re-coordinatized
/// to Q^k: the row combinations whose tail block vanishes.
SubspaceQ prefix_slice(const SubspaceQ& s, std::size_t k) {
  MatrixQ tail(s.dim(), s.ambient_dim() >= k ? s.ambient_dim() - k : 0);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    VecQ v = s.basis().row_dense(r);
    for (std::size_t c = k; c < v.size(); ++c) tail.set(r, c - k, v[c]);
  }
  SubspaceQ combos = kernel(tail.transpose());
  std::vector<VecQ> out;
  for (std::size_t r = 0; r < combos.dim(); ++r) {
    VecQ full = s.basis().apply_left(combos.basis().row_dense(r));
    out.push_back(VecQ(full.begin(), full.begin() + k));
  }
  return SubspaceQ::span(out, k);
}

}  // namespace

IdealSlice build_IB_slice(const GradedModule& vl, const std::vector<SubspaceQ>& spans, long n,
                          std::size_t W) {
  IdealSlice s;
  s.degree = n;
  s.weight_cap = W;
  const std::size_t capped = vl.dim_capped(n, W);
  s.subspace = prefix_slice(spans[n], capped);
  if (W >= 1) {
    std::size_t capped_prev = vl.dim_capped(n, W - 1);
    SubspaceQ prev = prefix_slice(spans[n], capped_prev);
    s.stabilized = (capped - s.subspace.dim()) == (capped_prev - prev.dim());
  }
  return s;
}

ViolationReport check_degree01_decomposition(const VertexAlgebroidData& alg, const GradedModule& vl,
                                             const std::vector<SubspaceQ>& spans, std::size_t W) {
  if (W < 1)
    throw std::invalid_argument("vb: the decomposition check needs weight cap >= 1");
  ViolationReport rep;
  IdealSlice s0 = build_IB_slice(vl, spans, 0, W);
  IdealSlice s1 = build_IB_slice(vl, spans, 1, W);

  std::vector<VecQ> a_img, b_img;
  std::size_t cap0 = vl.dim_capped(0, W), cap1 = vl.dim_capped(1, W);
  for (std::size_t i = 0; i < alg.A.dim; ++i) {
    VecQ v = vl.embed_A(i);
    a_img.push_back(VecQ(v.begin(), v.begin() + cap0));
  }
  for (std::size_t i = 0; i < alg.dimB; ++i) {
    VecQ v = vl.embed_B(i);
    b_img.push_back(VecQ(v.begin(), v.begin() + cap1));
  }
  SubspaceQ A_img = SubspaceQ::span(a_img, cap0);
  SubspaceQ B_img = SubspaceQ::span(b_img, cap1);

  if (intersect(s0.subspace, A_img).dim() != 0)
    rep.add("decomp0-intersection", {}, "slice(0) meets the image of A");
  if (sum(s0.subspace, A_img).dim() != cap0)
    rep.add("decomp0-sum", {}, "slice(0) + A does not fill the capped piece");
  if (intersect(s1.subspace, B_img).dim() != 0)
    rep.add("decomp1-intersection", {}, "slice(1) meets the image of B");
  if (sum(s1.subspace, B_img).dim() != cap1)
    rep.add("decomp1-sum", {}, "slice(1) + B does not fill the capped piece");
  rep.sort();
  return rep;
}

bool spanning_check(const GradedModule& vl, const std::vector<SubspaceQ>& spans, long n,
                    std::size_t W) {
  IdealSlice s = build_IB_slice(vl, spans, n, W);
  const std::size_t capped = vl.dim_capped(n, W);
  std::vector<VecQ> bonly;
  for (std::size_t c = 0; c < vl.b_only_count(n); ++c) {
    VecQ e(capped);
    e[c] = Rational(1);
    bonly.push_back(std::move(e));
  }
  SubspaceQ total = sum(SubspaceQ::span(bonly, capped), s.subspace);
  return total.dim() == capped;
}

std::vector<VbDimRow> vb_graded_dims(const GradedModule& vl, const std::vector<SubspaceQ>& spans,
                                     long n_max, std::size_t W) {
  std::vector<VbDimRow> rows;
  for (long n = 0; n <= n_max; ++n) {
    IdealSlice s = build_IB_slice(vl, spans, n, W);
    VbDimRow r;
    r.degree = n;
    r.dim = vl.dim_capped(n, W) - s.subspace.dim();
    r.stabilized = s.stabilized;
    r.upper_bound = vl.b_only_count(n);
    rows.push_back(r);
  }
  return rows;
}

VbTower::VbTower(const VertexAlgebroidData& alg, long window, long n_max, std::size_t W,
                 std::size_t margin_)
    : lie(to_tca(alg), window),
      vl(GradedModule::build_VL(lie, n_max, W + margin_ + 2)),
      eg(build_E(alg, vl)),
      spans(build_IB_spans(vl, eg, n_max)),
      weight_cap(W),
      margin(margin_) {}

}  // namespace vab
