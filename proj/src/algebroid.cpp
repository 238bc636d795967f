#include "vab/algebroid.hpp"

#include <stdexcept>

#include "sweep.hpp"

namespace vab {

using detail::IndexTuple;
using detail::index_tuples;
using detail::run_vec_family;

namespace {

void bilinear(VecQ& out, const Tensor2& t, const VecQ& x, const VecQ& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], t[i][j]);
    }
  }
}

VecQ ebasis(std::size_t n, std::size_t i) {
  VecQ v(n);
  v[i] = Rational(1);
  return v;
}

}  // namespace

CommAlgebra CommAlgebra::rational_line() {
  CommAlgebra a;
  a.dim = 1;
  a.mult = zero_tensor(1, 1, 1);
  a.mult[0][0][0] = Rational(1);
  a.unit = VecQ{Rational(1)};
  return a;
}

VecQ CommAlgebra::multiply(const VecQ& x, const VecQ& y) const {
  VecQ out(dim);
  bilinear(out, mult, x, y);
  return out;
}

VecQ CommAlgebra::basis(std::size_t i) const { return ebasis(dim, i); }

ViolationReport check_comm_algebra(const CommAlgebra& a) {
  ViolationReport rep;
  const std::size_t n = a.dim;
  if (a.unit.size() != n || a.mult.size() != n)
    throw std::invalid_argument("comm-algebra: dimension mismatch");
  run_vec_family(rep, "commutative", index_tuples({n, n}), [&](const IndexTuple& t) {
    return sub(a.mult[t[0]][t[1]], a.mult[t[1]][t[0]]);
  });
  run_vec_family(rep, "associative", index_tuples({n, n, n}), [&](const IndexTuple& t) {
    VecQ lhs = a.multiply(a.mult[t[0]][t[1]], a.basis(t[2]));
    VecQ rhs = a.multiply(a.basis(t[0]), a.mult[t[1]][t[2]]);
    return sub(lhs, rhs);
  });
  run_vec_family(rep, "unital", index_tuples({n}), [&](const IndexTuple& t) {
    return sub(a.multiply(a.unit, a.basis(t[0])), a.basis(t[0]));
  });
  rep.sort();
  return rep;
}

VertexAlgebroidData VertexAlgebroidData::zero(CommAlgebra A, std::size_t dimB) {
  VertexAlgebroidData v;
  v.dimB = dimB;
  v.act = zero_tensor(A.dim, dimB, dimB);
  v.bracket = zero_tensor(dimB, dimB, dimB);
  v.pi = zero_tensor(dimB, A.dim, A.dim);
  v.pair = zero_tensor(dimB, dimB, A.dim);
  v.partial = MatrixQ(dimB, A.dim);
  v.A = std::move(A);
  return v;
}

VecQ VertexAlgebroidData::act_of(const VecQ& a, const VecQ& v) const {
  VecQ out(dimB);
  bilinear(out, act, a, v);
  return out;
}
VecQ VertexAlgebroidData::bracket_of(const VecQ& u, const VecQ& v) const {
  VecQ out(dimB);
  bilinear(out, bracket, u, v);
  return out;
}
VecQ VertexAlgebroidData::pi_of(const VecQ& u, const VecQ& a) const {
  VecQ out(A.dim);
  bilinear(out, pi, u, a);
  return out;
}
VecQ VertexAlgebroidData::pair_of(const VecQ& u, const VecQ& v) const {
  VecQ out(A.dim);
  bilinear(out, pair, u, v);
  return out;
}
VecQ VertexAlgebroidData::partial_of(const VecQ& a) const { return partial.apply(a); }
VecQ VertexAlgebroidData::basisB(std::size_t i) const { return ebasis(dimB, i); }

ViolationReport check_vertex_algebroid(const VertexAlgebroidData& v, SignConvention sign) {
  ViolationReport rep = check_comm_algebra(v.A);
  const std::size_t nA = v.A.dim, nB = v.dimB;
  const Rational rhs_sign = sign == SignConvention::Paper ? Rational(1) : Rational(-1);

  run_vec_family(rep, "unital", index_tuples({nB}), [&](const IndexTuple& t) {
    return sub(v.act_of(v.A.unit, v.basisB(t[0])), v.basisB(t[0]));
  });
  run_vec_family(rep, "pair-symmetric", index_tuples({nB, nB}), [&](const IndexTuple& t) {
    return sub(v.pair[t[0]][t[1]], v.pair[t[1]][t[0]]);
  });
  run_vec_family(rep, "pi-partial", index_tuples({nA, nA}), [&](const IndexTuple& t) {
    return v.pi_of(v.partial_of(v.A.basis(t[0])), v.A.basis(t[1]));
  });
  run_vec_family(rep, "leibniz", index_tuples({nB, nB, nB}), [&](const IndexTuple& t) {
    VecQ lhs = v.bracket_of(v.basisB(t[0]), v.bracket[t[1]][t[2]]);
    VecQ rhs = v.bracket_of(v.bracket[t[0]][t[1]], v.basisB(t[2]));
    axpy(rhs, Rational(1), v.bracket_of(v.basisB(t[1]), v.bracket[t[0]][t[2]]));
    return sub(lhs, rhs);
  });
  run_vec_family(rep, "pi-leibniz-hom", index_tuples({nB, nB, nA}), [&](const IndexTuple& t) {
    VecQ lhs = v.pi_of(v.bracket[t[0]][t[1]], v.A.basis(t[2]));
    VecQ rhs = v.pi_of(v.basisB(t[0]), v.pi[t[1]][t[2]]);
    axpy(rhs, Rational(-1), v.pi_of(v.basisB(t[1]), v.pi[t[0]][t[2]]));
    return sub(lhs, rhs);
  });
  run_vec_family(rep, "pi-derivation", index_tuples({nB, nA, nA}), [&](const IndexTuple& t) {
    VecQ lhs = v.pi_of(v.basisB(t[0]), v.A.mult[t[1]][t[2]]);
    VecQ rhs = v.A.multiply(v.A.basis(t[1]), v.pi[t[0]][t[2]]);
    axpy(rhs, Rational(1), v.A.multiply(v.pi[t[0]][t[1]], v.A.basis(t[2])));
    return sub(lhs, rhs);
  });

  // va1: a*(a'*v) - (aa')*v = sign * ( pi(v)(a)*partial(a') + pi(v)(a')*partial(a) )
  run_vec_family(rep, "va1-act-assoc", index_tuples({nA, nA, nB}), [&](const IndexTuple& t) {
    VecQ lhs = v.act_of(v.A.basis(t[0]), v.act[t[1]][t[2]]);
    axpy(lhs, Rational(-1), v.act_of(v.A.mult[t[0]][t[1]], v.basisB(t[2])));
    VecQ rhs = v.act_of(v.pi[t[2]][t[0]], v.partial_of(v.A.basis(t[1])));
    axpy(rhs, Rational(1), v.act_of(v.pi[t[2]][t[1]], v.partial_of(v.A.basis(t[0]))));
    axpy(lhs, -rhs_sign, rhs);
    return lhs;
  });
  // va2: [u, a*v] = pi(u)(a)*v + a*[u,v]
  run_vec_family(rep, "va2-bracket-act", index_tuples({nB, nA, nB}), [&](const IndexTuple& t) {
    VecQ lhs = v.bracket_of(v.basisB(t[0]), v.act[t[1]][t[2]]);
    VecQ rhs = v.act_of(v.pi[t[0]][t[1]], v.basisB(t[2]));
    axpy(rhs, Rational(1), v.act_of(v.A.basis(t[1]), v.bracket[t[0]][t[2]]));
    return sub(lhs, rhs);
  });
  // va3: [u,v] + [v,u] = partial(<u,v>)
  run_vec_family(rep, "va3-skew-pairing", index_tuples({nB, nB}), [&](const IndexTuple& t) {
    VecQ lhs = add(v.bracket[t[0]][t[1]], v.bracket[t[1]][t[0]]);
    return sub(lhs, v.partial_of(v.pair[t[0]][t[1]]));
  });
  // va4: pi(a*v) = a pi(v)
  run_vec_family(rep, "va4-pi-act", index_tuples({nA, nB, nA}), [&](const IndexTuple& t) {
    VecQ lhs = v.pi_of(v.act[t[0]][t[1]], v.A.basis(t[2]));
    return sub(lhs, v.A.multiply(v.A.basis(t[0]), v.pi[t[1]][t[2]]));
  });
  // va5: <a*u, v> = a<u,v> - pi(u)(pi(v)(a))
  run_vec_family(rep, "va5-pairing-act", index_tuples({nA, nB, nB}), [&](const IndexTuple& t) {
    VecQ lhs = v.pair_of(v.act[t[0]][t[1]], v.basisB(t[2]));
    VecQ rhs = v.A.multiply(v.A.basis(t[0]), v.pair[t[1]][t[2]]);
    axpy(rhs, Rational(-1), v.pi_of(v.basisB(t[1]), v.pi[t[2]][t[0]]));
    return sub(lhs, rhs);
  });
  // va6: pi(v)(<v1,v2>) = <[v,v1],v2> + <v1,[v,v2]>
  run_vec_family(rep, "va6-pairing-invariance", index_tuples({nB, nB, nB}),
                 [&](const IndexTuple& t) {
                   VecQ lhs = v.pi_of(v.basisB(t[0]), v.pair[t[1]][t[2]]);
                   VecQ rhs = v.pair_of(v.bracket[t[0]][t[1]], v.basisB(t[2]));
                   axpy(rhs, Rational(1), v.pair_of(v.basisB(t[1]), v.bracket[t[0]][t[2]]));
                   return sub(lhs, rhs);
                 });
  // va7: partial(aa') = a*partial(a') + a'*partial(a)
  run_vec_family(rep, "va7-partial-leibniz", index_tuples({nA, nA}), [&](const IndexTuple& t) {
    VecQ lhs = v.partial_of(v.A.mult[t[0]][t[1]]);
    VecQ rhs = v.act_of(v.A.basis(t[0]), v.partial_of(v.A.basis(t[1])));
    axpy(rhs, Rational(1), v.act_of(v.A.basis(t[1]), v.partial_of(v.A.basis(t[0]))));
    return sub(lhs, rhs);
  });
  // va8: [v, partial(a)] = partial(pi(v)(a))
  run_vec_family(rep, "va8-bracket-partial", index_tuples({nB, nA}), [&](const IndexTuple& t) {
    VecQ lhs = v.bracket_of(v.basisB(t[0]), v.partial_of(v.A.basis(t[1])));
    return sub(lhs, v.partial_of(v.pi[t[0]][t[1]]));
  });
  // va9: <v, partial(a)> = pi(v)(a)
  run_vec_family(rep, "va9-pairing-partial", index_tuples({nB, nA}), [&](const IndexTuple& t) {
    VecQ lhs = v.pair_of(v.basisB(t[0]), v.partial_of(v.A.basis(t[1])));
    return sub(lhs, v.pi[t[0]][t[1]]);
  });

  rep.sort();
  return rep;
}

Tca to_tca(const VertexAlgebroidData& v) {
  const std::size_t nA = v.A.dim, nB = v.dimB;
  Tca c = Tca::zero(nA, nB);
  c.partial = v.partial;
  c.t0_bb = v.bracket;
  c.t1_bb = v.pair;
  for (std::size_t i = 0; i < nB; ++i)
    for (std::size_t j = 0; j < nA; ++j) {
      c.t0_ba[i][j] = v.pi[i][j];
      c.t0_ab[j][i] = scaled(v.pi[i][j], Rational(-1));
    }

  // six supplementary identities coupling the A-action to the products
  ViolationReport rep;
  run_vec_family(rep, "supp1", index_tuples({nA, nA, nB}), [&](const IndexTuple& t) {
    // a(a'u) - (aa')u = (u_0 a) partial(a') + (u_0 a') partial(a)
    VecQ lhs = v.act_of(v.A.basis(t[0]), v.act[t[1]][t[2]]);
    axpy(lhs, Rational(-1), v.act_of(v.A.mult[t[0]][t[1]], v.basisB(t[2])));
    VecQ rhs = v.act_of(v.pi[t[2]][t[0]], v.partial_of(v.A.basis(t[1])));
    axpy(rhs, Rational(1), v.act_of(v.pi[t[2]][t[1]], v.partial_of(v.A.basis(t[0]))));
    return sub(lhs, rhs);
  });
  run_vec_family(rep, "supp2", index_tuples({nB, nA, nB}), [&](const IndexTuple& t) {
    // u_0(a v) - a(u_0 v) = (u_0 a)v
    VecQ lhs = v.bracket_of(v.basisB(t[0]), v.act[t[1]][t[2]]);
    axpy(lhs, Rational(-1), v.act_of(v.A.basis(t[1]), v.bracket[t[0]][t[2]]));
    return sub(lhs, v.act_of(v.pi[t[0]][t[1]], v.basisB(t[2])));
  });
  run_vec_family(rep, "supp3", index_tuples({nB, nA, nA}), [&](const IndexTuple& t) {
    // u_0(aa') = a(u_0 a') + (u_0 a)a'
    VecQ lhs = v.pi_of(v.basisB(t[0]), v.A.mult[t[1]][t[2]]);
    VecQ rhs = v.A.multiply(v.A.basis(t[1]), v.pi[t[0]][t[2]]);
    axpy(rhs, Rational(1), v.A.multiply(v.pi[t[0]][t[1]], v.A.basis(t[2])));
    return sub(lhs, rhs);
  });
  run_vec_family(rep, "supp4", index_tuples({nA, nA, nB}), [&](const IndexTuple& t) {
    // a_0(a' v) = a'(a_0 v)  with a_0 v = -pi(v)(a)
    VecQ lhs = scaled(v.pi_of(v.act[t[1]][t[2]], v.A.basis(t[0])), Rational(-1));
    VecQ rhs = scaled(v.A.multiply(v.A.basis(t[1]), v.pi[t[2]][t[0]]), Rational(-1));
    return sub(lhs, rhs);
  });
  run_vec_family(rep, "supp5", index_tuples({nA, nB, nB}), [&](const IndexTuple& t) {
    // (au)_1 v = a(u_1 v) - u_0(v_0 a)
    VecQ lhs = v.pair_of(v.act[t[0]][t[1]], v.basisB(t[2]));
    VecQ rhs = v.A.multiply(v.A.basis(t[0]), v.pair[t[1]][t[2]]);
    axpy(rhs, Rational(-1), v.pi_of(v.basisB(t[1]), v.pi[t[2]][t[0]]));
    return sub(lhs, rhs);
  });
  run_vec_family(rep, "supp6", index_tuples({nA, nA}), [&](const IndexTuple& t) {
    // partial(aa') = a partial(a') + a' partial(a)
    VecQ lhs = v.partial_of(v.A.mult[t[0]][t[1]]);
    VecQ rhs = v.act_of(v.A.basis(t[0]), v.partial_of(v.A.basis(t[1])));
    axpy(rhs, Rational(1), v.act_of(v.A.basis(t[1]), v.partial_of(v.A.basis(t[0]))));
    return sub(lhs, rhs);
  });
  if (!rep.ok()) {
    rep.sort();
    throw std::invalid_argument("to_tca: supplementary identity failed: " +
                                rep.items.front().axiom);
  }
  return c;
}

VecQ LieAlgebroidData::bracket_of(const VecQ& u, const VecQ& v) const {
  VecQ out(dimG);
  bilinear(out, bracket, u, v);
  return out;
}
VecQ LieAlgebroidData::act_of(const VecQ& a, const VecQ& u) const {
  VecQ out(dimG);
  bilinear(out, act, a, u);
  return out;
}
VecQ LieAlgebroidData::anchor_of(const VecQ& u, const VecQ& a) const {
  VecQ out(A.dim);
  bilinear(out, anchor, u, a);
  return out;
}

ViolationReport check_lie_algebroid(const LieAlgebroidData& g) {
  ViolationReport rep = check_comm_algebra(g.A);
  const std::size_t nA = g.A.dim, nG = g.dimG;
  auto gb = [&](std::size_t i) { return ebasis(nG, i); };

  run_vec_family(rep, "antisymmetry", index_tuples({nG, nG}), [&](const IndexTuple& t) {
    return add(g.bracket[t[0]][t[1]], g.bracket[t[1]][t[0]]);
  });
  run_vec_family(rep, "jacobi", index_tuples({nG, nG, nG}), [&](const IndexTuple& t) {
    VecQ lhs = g.bracket_of(gb(t[0]), g.bracket[t[1]][t[2]]);
    axpy(lhs, Rational(-1), g.bracket_of(gb(t[1]), g.bracket[t[0]][t[2]]));
    axpy(lhs, Rational(-1), g.bracket_of(g.bracket[t[0]][t[1]], gb(t[2])));
    return lhs;
  });
  run_vec_family(rep, "act-unital", index_tuples({nG}), [&](const IndexTuple& t) {
    return sub(g.act_of(g.A.unit, gb(t[0])), gb(t[0]));
  });
  run_vec_family(rep, "act-associative", index_tuples({nA, nA, nG}), [&](const IndexTuple& t) {
    VecQ lhs = g.act_of(g.A.basis(t[0]), g.act[t[1]][t[2]]);
    return sub(lhs, g.act_of(g.A.mult[t[0]][t[1]], gb(t[2])));
  });
  run_vec_family(rep, "anchor-derivation", index_tuples({nG, nA, nA}), [&](const IndexTuple& t) {
    VecQ lhs = g.anchor_of(gb(t[0]), g.A.mult[t[1]][t[2]]);
    VecQ rhs = g.A.multiply(g.A.basis(t[1]), g.anchor[t[0]][t[2]]);
    axpy(rhs, Rational(1), g.A.multiply(g.anchor[t[0]][t[1]], g.A.basis(t[2])));
    return sub(lhs, rhs);
  });
  run_vec_family(rep, "anchor-lie-hom", index_tuples({nG, nG, nA}), [&](const IndexTuple& t) {
    VecQ lhs = g.anchor_of(g.bracket[t[0]][t[1]], g.A.basis(t[2]));
    VecQ rhs = g.anchor_of(gb(t[0]), g.anchor[t[1]][t[2]]);
    axpy(rhs, Rational(-1), g.anchor_of(gb(t[1]), g.anchor[t[0]][t[2]]));
    return sub(lhs, rhs);
  });
  // [u, a v] = a[u,v] + (anchor(u) a) v
  run_vec_family(rep, "bracket-act", index_tuples({nG, nA, nG}), [&](const IndexTuple& t) {
    VecQ lhs = g.bracket_of(gb(t[0]), g.act[t[1]][t[2]]);
    VecQ rhs = g.act_of(g.A.basis(t[1]), g.bracket[t[0]][t[2]]);
    axpy(rhs, Rational(1), g.act_of(g.anchor[t[0]][t[1]], gb(t[2])));
    return sub(lhs, rhs);
  });
  // a(anchor(u) b) = anchor(a u)(b)
  run_vec_family(rep, "anchor-act", index_tuples({nA, nG, nA}), [&](const IndexTuple& t) {
    VecQ lhs = g.A.multiply(g.A.basis(t[0]), g.anchor[t[1]][t[2]]);
    return sub(lhs, g.anchor_of(g.act[t[0]][t[1]], g.A.basis(t[2])));
  });
  rep.sort();
  return rep;
}

AlgebroidQuotient lie_algebroid_quotient(const VertexAlgebroidData& v) {
  AlgebroidQuotient q;
  const std::size_t nA = v.A.dim, nB = v.dimB;

  std::vector<VecQ> gens;
  for (std::size_t i = 0; i < nA; ++i)
    for (std::size_t j = 0; j < nA; ++j)
      gens.push_back(v.act_of(v.A.basis(i), v.partial_of(v.A.basis(j))));
  q.a_partial_a = SubspaceQ::span(gens, nB);

  auto comp = q.a_partial_a.non_pivots();
  const std::size_t nG = comp.size();
  q.projection = MatrixQ(nG, nB);
  for (std::size_t j = 0; j < nB; ++j) {
    VecQ r = q.a_partial_a.reduce(ebasis(nB, j));
    for (std::size_t k = 0; k < nG; ++k) q.projection.set(k, j, r[comp[k]]);
  }
  q.embedding = MatrixQ(nB, nG);
  for (std::size_t k = 0; k < nG; ++k) q.embedding.set(comp[k], k, Rational(1));

  LieAlgebroidData& g = q.lie;
  g.A = v.A;
  g.dimG = nG;
  g.bracket = zero_tensor(nG, nG, nG);
  g.act = zero_tensor(nA, nG, nG);
  g.anchor = zero_tensor(nG, nA, nA);
  for (std::size_t k = 0; k < nG; ++k) {
    VecQ rep_k = v.basisB(comp[k]);
    for (std::size_t l = 0; l < nG; ++l)
      g.bracket[k][l] = q.projection.apply(v.bracket_of(rep_k, v.basisB(comp[l])));
    for (std::size_t j = 0; j < nA; ++j) g.anchor[k][j] = v.pi[comp[k]][j];
  }
  for (std::size_t i = 0; i < nA; ++i)
    for (std::size_t l = 0; l < nG; ++l)
      g.act[i][l] = q.projection.apply(v.act_of(v.A.basis(i), v.basisB(comp[l])));

  ViolationReport& rep = q.report;
  // well-definedness: A partial(A) is closed under bracketing with B,
  // the A-action, and has zero anchor
  run_vec_family(rep, "quotient-bracket-left", index_tuples({gens.size(), nB}),
                 [&](const IndexTuple& t) {
                   return q.projection.apply(v.bracket_of(gens[t[0]], v.basisB(t[1])));
                 });
  run_vec_family(rep, "quotient-bracket-right", index_tuples({gens.size(), nB}),
                 [&](const IndexTuple& t) {
                   return q.projection.apply(v.bracket_of(v.basisB(t[1]), gens[t[0]]));
                 });
  run_vec_family(rep, "quotient-act", index_tuples({nA, gens.size()}),
                 [&](const IndexTuple& t) {
                   return q.projection.apply(v.act_of(v.A.basis(t[0]), gens[t[1]]));
                 });
  run_vec_family(rep, "quotient-anchor", index_tuples({gens.size(), nA}),
                 [&](const IndexTuple& t) { return v.pi_of(gens[t[0]], v.A.basis(t[1])); });

  rep.merge(check_lie_algebroid(g));
  rep.sort();
  return q;
}

ViolationReport check_la_module(const LieAlgebroidData& g, const LAModule& m) {
  ViolationReport rep;
  const std::size_t nA = g.A.dim, nG = g.dimG, nW = m.dimW;
  if (m.aAct.size() != nA || m.gAct.size() != nG)
    throw std::invalid_argument("la-module: action count mismatch");

  auto combo = [&](const std::vector<MatrixQ>& acts, const VecQ& coeffs) {
    MatrixQ out(nW, nW);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      for (std::size_t r = 0; r < nW; ++r)
        for (const auto& [c, val] : acts[i].row(r)) out.add_to(r, c, coeffs[i] * val);
    }
    return out;
  };
  auto mat_residual = [&](const MatrixQ& x) {
    VecQ flat;
    flat.reserve(nW * nW);
    for (std::size_t r = 0; r < nW; ++r) {
      VecQ row = x.row_dense(r);
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  };

  run_vec_family(rep, "module-unit", index_tuples({std::size_t(1)}), [&](const IndexTuple&) {
    MatrixQ u = combo(m.aAct, g.A.unit);
    MatrixQ d = MatrixQ::identity(nW);
    VecQ r1 = mat_residual(u), r2 = mat_residual(d);
    return sub(r1, r2);
  });
  run_vec_family(rep, "module-a-assoc", index_tuples({nA, nA}), [&](const IndexTuple& t) {
    MatrixQ lhs = m.aAct[t[0]].multiply(m.aAct[t[1]]);
    MatrixQ rhs = combo(m.aAct, g.A.mult[t[0]][t[1]]);
    return sub(mat_residual(lhs), mat_residual(rhs));
  });
  run_vec_family(rep, "module-g-rep", index_tuples({nG, nG}), [&](const IndexTuple& t) {
    MatrixQ lhs = m.gAct[t[0]].multiply(m.gAct[t[1]]);
    MatrixQ rhs = m.gAct[t[1]].multiply(m.gAct[t[0]]);
    MatrixQ br = combo(m.gAct, g.bracket[t[0]][t[1]]);
    return sub(sub(mat_residual(lhs), mat_residual(rhs)), mat_residual(br));
  });
  run_vec_family(rep, "module-a-action", index_tuples({nA, nG}), [&](const IndexTuple& t) {
    MatrixQ lhs = m.aAct[t[0]].multiply(m.gAct[t[1]]);
    MatrixQ rhs = combo(m.gAct, g.act[t[0]][t[1]]);
    return sub(mat_residual(lhs), mat_residual(rhs));
  });
  run_vec_family(rep, "module-mixed", index_tuples({nG, nA}), [&](const IndexTuple& t) {
    MatrixQ lhs = m.gAct[t[0]].multiply(m.aAct[t[1]]);
    MatrixQ rhs = m.aAct[t[1]].multiply(m.gAct[t[0]]);
    MatrixQ anc = combo(m.aAct, g.anchor[t[0]][t[1]]);
    return sub(sub(mat_residual(lhs), mat_residual(rhs)), mat_residual(anc));
  });
  rep.sort();
  return rep;
}

namespace {

SubspaceQ cyclic_closure(const LAModule& m, const VecQ& seed) {
  SubspaceQ s = SubspaceQ::span({seed}, m.dimW);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VecQ> images;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      VecQ b = s.basis().row_dense(i);
      for (const auto& op : m.aAct) images.push_back(op.apply(b));
      for (const auto& op : m.gAct) images.push_back(op.apply(b));
    }
    for (const auto& img : images)
      if (s.grow(img)) grew = true;
  }
  return s;
}

std::vector<VecQ> probe_vectors(std::size_t n) {
  std::vector<VecQ> probes;
  for (std::size_t i = 0; i < n; ++i) {
    VecQ e(n);
    e[i] = Rational(1);
    probes.push_back(e);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      VecQ p(n), q(n);
      p[i] = Rational(1);
      p[j] = Rational(1);
      q[i] = Rational(1);
      q[j] = Rational(-1);
      probes.push_back(p);
      probes.push_back(q);
    }
  return probes;
}

}  // namespace

SubspaceQ invariant_subspace_witness(const LAModule& m) {
  for (const auto& p : probe_vectors(m.dimW)) {
    SubspaceQ s = cyclic_closure(m, p);
    if (s.dim() > 0 && s.dim() < m.dimW) return s;
  }
  return SubspaceQ(m.dimW);
}

bool simple_la_modules_check(const LieAlgebroidData& g, const LAModule& m) {
  if (m.dimW == 0) return false;
  (void)g;
  return invariant_subspace_witness(m).dim() == 0;
}

LAModule direct_sum(const LAModule& m1, const LAModule& m2) {
  LAModule m;
  m.dimW = m1.dimW + m2.dimW;
  auto block = [&](const MatrixQ& a, const MatrixQ& b) {
    MatrixQ out(m.dimW, m.dimW);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (const auto& [c, val] : a.row(r)) out.set(r, c, val);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (const auto& [c, val] : b.row(r)) out.set(m1.dimW + r, m1.dimW + c, val);
    return out;
  };
  for (std::size_t i = 0; i < m1.aAct.size(); ++i) m.aAct.push_back(block(m1.aAct[i], m2.aAct[i]));
  for (std::size_t i = 0; i < m1.gAct.size(); ++i) m.gAct.push_back(block(m1.gAct[i], m2.gAct[i]));
  return m;
}

VertexAlgebroidData algebroid_direct_sum(const VertexAlgebroidData& v1,
                                         const VertexAlgebroidData& v2) {
  const std::size_t a1 = v1.A.dim, a2 = v2.A.dim, b1 = v1.dimB, b2 = v2.dimB;
  CommAlgebra A;
  A.dim = a1 + a2;
  A.mult = zero_tensor(A.dim, A.dim, A.dim);
  A.unit = VecQ(A.dim);
  auto place_vec = [](VecQ& dst, const VecQ& src, std::size_t off) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[off + i] = src[i];
  };
  for (std::size_t i = 0; i < a1; ++i)
    for (std::size_t j = 0; j < a1; ++j) place_vec(A.mult[i][j], v1.A.mult[i][j], 0);
  for (std::size_t i = 0; i < a2; ++i)
    for (std::size_t j = 0; j < a2; ++j) place_vec(A.mult[a1 + i][a1 + j], v2.A.mult[i][j], a1);
  place_vec(A.unit, v1.A.unit, 0);
  place_vec(A.unit, v2.A.unit, a1);

  VertexAlgebroidData v = VertexAlgebroidData::zero(A, b1 + b2);
  auto place_t = [&](Tensor2& dst, const Tensor2& src, std::size_t o1, std::size_t o2,
                     std::size_t oo) {
    for (std::size_t i = 0; i < src.size(); ++i)
      for (std::size_t j = 0; j < src[i].size(); ++j) place_vec(dst[o1 + i][o2 + j], src[i][j], oo);
  };
  place_t(v.act, v1.act, 0, 0, 0);
  place_t(v.act, v2.act, a1, b1, b1);
  place_t(v.bracket, v1.bracket, 0, 0, 0);
  place_t(v.bracket, v2.bracket, b1, b1, b1);
  place_t(v.pi, v1.pi, 0, 0, 0);
  place_t(v.pi, v2.pi, b1, a1, a1);
  place_t(v.pair, v1.pair, 0, 0, 0);
  place_t(v.pair, v2.pair, b1, b1, a1);
  for (std::size_t i = 0; i < b1; ++i)
    for (std::size_t j = 0; j < a1; ++j) v.partial.set(i, j, v1.partial.at(i, j));
  for (std::size_t i = 0; i < b2; ++i)
    for (std::size_t j = 0; j < a2; ++j) v.partial.set(b1 + i, a1 + j, v2.partial.at(i, j));
  return v;
}

}  // namespace vab
