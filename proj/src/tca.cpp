#include "vab/tca.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "vab/parallel.hpp"

namespace vab {

Tensor2 zero_tensor(std::size_t n1, std::size_t n2, std::size_t out_dim) {
  return Tensor2(n1, std::vector<VecQ>(n2, VecQ(out_dim)));
}

namespace {

/// result += tensor(x, y), bilinear extension over basis coordinates.
void accumulate(VecQ& result, const Tensor2& t, const VecQ& x, const VecQ& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(result, x[i] * y[j], t[i][j]);
    }
  }
}

using IndexTuple = std::vector<long>;

void run_family(ViolationReport& rep, const std::string& axiom,
                const std::vector<IndexTuple>& tuples,
                const std::function<TcaElement(const IndexTuple&)>& residual) {
  std::vector<std::string> text(tuples.size());
  std::vector<char> bad(tuples.size(), 0);
  parallel_for(tuples.size(), [&](std::size_t t) {
    TcaElement r = residual(tuples[t]);
    if (!is_zero(r.a) || !is_zero(r.b)) {
      bad[t] = 1;
      text[t] = element_str(r);
    }
  });
  for (std::size_t t = 0; t < tuples.size(); ++t)
    if (bad[t]) rep.add(axiom, tuples[t], text[t]);
}

std::vector<IndexTuple> tuples1(std::size_t n) {
  std::vector<IndexTuple> out;
  for (long i = 0; i < (long)n; ++i) out.push_back({i});
  return out;
}

std::vector<IndexTuple> tuples2(std::size_t n1, std::size_t n2) {
  std::vector<IndexTuple> out;
  for (long i = 0; i < (long)n1; ++i)
    for (long j = 0; j < (long)n2; ++j) out.push_back({i, j});
  return out;
}

std::vector<IndexTuple> tuples3(std::size_t n1, std::size_t n2, std::size_t n3) {
  std::vector<IndexTuple> out;
  for (long i = 0; i < (long)n1; ++i)
    for (long j = 0; j < (long)n2; ++j)
      for (long k = 0; k < (long)n3; ++k) out.push_back({i, j, k});
  return out;
}

}  // namespace

Tca Tca::zero(std::size_t d0, std::size_t d1) {
  Tca c;
  c.dim0 = d0;
  c.dim1 = d1;
  c.partial = MatrixQ(d1, d0);
  c.t0_ab = zero_tensor(d0, d1, d0);
  c.t0_ba = zero_tensor(d1, d0, d0);
  c.t0_bb = zero_tensor(d1, d1, d1);
  c.t1_bb = zero_tensor(d1, d1, d0);
  return c;
}

TcaElement Tca::basis0(std::size_t i) const {
  TcaElement e = zero_element();
  e.a[i] = Rational(1);
  return e;
}

TcaElement Tca::basis1(std::size_t i) const {
  TcaElement e = zero_element();
  e.b[i] = Rational(1);
  return e;
}

VecQ Tca::partial_apply(const VecQ& a) const { return partial.apply(a); }

TcaElement Tca::prod0(const TcaElement& x, const TcaElement& y) const {
  TcaElement out = zero_element();
  accumulate(out.a, t0_ab, x.a, y.b);
  accumulate(out.a, t0_ba, x.b, y.a);
  accumulate(out.b, t0_bb, x.b, y.b);
  return out;
}

TcaElement Tca::prod1(const TcaElement& x, const TcaElement& y) const {
  TcaElement out = zero_element();
  accumulate(out.a, t1_bb, x.b, y.b);
  return out;
}

TcaElement Tca::prod(int i, const TcaElement& x, const TcaElement& y) const {
  return i == 0 ? prod0(x, y) : prod1(x, y);
}

bool Tca::dims_consistent() const {
  if (partial.rows() != dim1 || partial.cols() != dim0) return false;
  auto shape = [](const Tensor2& t, std::size_t n1, std::size_t n2, std::size_t out) {
    if (t.size() != n1) return false;
    for (const auto& row : t) {
      if (row.size() != n2) return false;
      for (const auto& v : row)
        if (v.size() != out) return false;
    }
    return true;
  };
  return shape(t0_ab, dim0, dim1, dim0) && shape(t0_ba, dim1, dim0, dim0) &&
         shape(t0_bb, dim1, dim1, dim1) && shape(t1_bb, dim1, dim1, dim0);
}

std::string element_str(const TcaElement& e) {
  std::ostringstream os;
  os << "a=[";
  for (std::size_t i = 0; i < e.a.size(); ++i) os << (i ? " " : "") << e.a[i].str();
  os << "] b=[";
  for (std::size_t i = 0; i < e.b.size(); ++i) os << (i ? " " : "") << e.b[i].str();
  os << "]";
  return os.str();
}

namespace {

/// Basis element of C0 (+) C1 by combined index (C0 block first).
TcaElement combined_basis(const Tca& c, long idx) {
  return idx < (long)c.dim0 ? c.basis0(idx) : c.basis1(idx - c.dim0);
}

void check_derivation_and_commutativity(const Tca& c, ViolationReport& rep) {
  const std::size_t d0 = c.dim0, d1 = c.dim1, dtot = d0 + d1;

  // (partial a)_0 x = 0 for every x in C0 u C1
  run_family(rep, "derivation-partial-0", tuples2(d0, dtot), [&](const IndexTuple& t) {
    TcaElement pa = c.zero_element();
    pa.b = c.partial.apply(c.basis0(t[0]).a);
    return c.prod0(pa, combined_basis(c, t[1]));
  });

  // (partial a)_1 u = -a_0 u
  run_family(rep, "derivation-partial-1", tuples2(d0, d1), [&](const IndexTuple& t) {
    TcaElement pa = c.zero_element();
    pa.b = c.partial.apply(c.basis0(t[0]).a);
    TcaElement r = c.prod1(pa, c.basis1(t[1]));
    TcaElement s = c.prod0(c.basis0(t[0]), c.basis1(t[1]));
    r.a = add(r.a, s.a);
    r.b = add(r.b, s.b);
    return r;
  });

  // partial(u_0 a) = u_0 partial(a)
  run_family(rep, "derivation-equivariance", tuples2(d1, d0), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]);
    TcaElement a = c.basis0(t[1]);
    VecQ lhs = c.partial.apply(c.prod0(u, a).a);
    TcaElement pa = c.zero_element();
    pa.b = c.partial.apply(a.a);
    TcaElement r = c.zero_element();
    r.b = sub(lhs, c.prod0(u, pa).b);
    return r;
  });

  // u_0 a = -a_0 u
  run_family(rep, "commutativity-ab", tuples2(d1, d0), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]);
    TcaElement a = c.basis0(t[1]);
    TcaElement r = c.prod0(u, a);
    TcaElement s = c.prod0(a, u);
    r.a = add(r.a, s.a);
    r.b = add(r.b, s.b);
    return r;
  });

  // u_0 v = -v_0 u + partial(v_1 u)
  run_family(rep, "commutativity-bb", tuples2(d1, d1), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]);
    TcaElement v = c.basis1(t[1]);
    TcaElement r = c.prod0(u, v);
    TcaElement s = c.prod0(v, u);
    r.a = add(r.a, s.a);
    r.b = add(r.b, s.b);
    r.b = sub(r.b, c.partial.apply(c.prod1(v, u).a));
    return r;
  });

  // u_1 v = v_1 u
  run_family(rep, "commutativity-pairing", tuples2(d1, d1), [&](const IndexTuple& t) {
    TcaElement r = c.prod1(c.basis1(t[0]), c.basis1(t[1]));
    TcaElement s = c.prod1(c.basis1(t[1]), c.basis1(t[0]));
    r.a = sub(r.a, s.a);
    return r;
  });
}

TcaElement associativity_residual(const Tca& c, int i, const TcaElement& alpha,
                                  const TcaElement& beta, const TcaElement& gamma) {
  // alpha_0 (beta_i gamma) - beta_i (alpha_0 gamma) - (alpha_0 beta)_i gamma
  TcaElement r = c.prod0(alpha, c.prod(i, beta, gamma));
  TcaElement s = c.prod(i, beta, c.prod0(alpha, gamma));
  TcaElement q = c.prod(i, c.prod0(alpha, beta), gamma);
  r.a = sub(sub(r.a, s.a), q.a);
  r.b = sub(sub(r.b, s.b), q.b);
  return r;
}

}  // namespace

ViolationReport check_tca(const Tca& c) {
  if (!c.dims_consistent()) throw std::invalid_argument("tca: inconsistent tensor dimensions");
  ViolationReport rep;
  check_derivation_and_commutativity(c, rep);

  const std::size_t dtot = c.dim0 + c.dim1;
  for (int i = 0; i <= 1; ++i) {
    run_family(rep, i == 0 ? "associativity-0" : "associativity-1",
               tuples3(dtot, dtot, dtot), [&, i](const IndexTuple& t) {
                 return associativity_residual(c, i, combined_basis(c, t[0]),
                                               combined_basis(c, t[1]), combined_basis(c, t[2]));
               });
  }
  rep.sort();
  return rep;
}

ViolationReport check_tca_reduced(const Tca& c) {
  if (!c.dims_consistent()) throw std::invalid_argument("tca: inconsistent tensor dimensions");
  ViolationReport rep;
  check_derivation_and_commutativity(c, rep);

  const long d0 = (long)c.dim0, d1 = (long)c.dim1;
  // all-C1 triples, both products
  for (int i = 0; i <= 1; ++i) {
    run_family(rep, i == 0 ? "associativity-0" : "associativity-1",
               tuples3(d1, d1, d1), [&, i](const IndexTuple& t) {
                 return associativity_residual(c, i, c.basis1(t[0]), c.basis1(t[1]),
                                               c.basis1(t[2]));
               });
  }
  // (C0, C1, C1) triples, 0-product; indices offset to the combined
  // numbering so the family id lines up with check_tca.
  run_family(rep, "associativity-0", tuples3(d0, d1, d1), [&](const IndexTuple& t) {
    return associativity_residual(c, 0, c.basis0(t[0]), c.basis1(t[1]), c.basis1(t[2]));
  });
  rep.sort();
  return rep;
}

LeibnizDecomposition decompose_leibniz(const Tca& c) {
  LeibnizDecomposition d;
  d.bracket = c.t0_bb;
  d.action = c.t0_ba;
  d.pairing = c.t1_bb;
  ViolationReport& rep = d.report;
  const std::size_t d0 = c.dim0, d1 = c.dim1;

  // item 1: [u,[v,w]] = [[u,v],w] + [v,[u,w]]
  run_family(rep, "leibniz", tuples3(d1, d1, d1), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]), v = c.basis1(t[1]), w = c.basis1(t[2]);
    TcaElement r = c.zero_element();
    r.b = c.prod0(u, c.prod0(v, w)).b;
    r.b = sub(r.b, c.prod0(c.prod0(u, v), w).b);
    r.b = sub(r.b, c.prod0(v, c.prod0(u, w)).b);
    return r;
  });

  // item 2: C0 is a C1-module
  run_family(rep, "c0-module", tuples3(d1, d1, d0), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]), v = c.basis1(t[1]), a = c.basis0(t[2]);
    TcaElement r = c.zero_element();
    r.a = c.prod0(u, c.prod0(v, a)).a;
    r.a = sub(r.a, c.prod0(v, c.prod0(u, a)).a);
    r.a = sub(r.a, c.prod0(c.prod0(u, v), a).a);
    return r;
  });

  // item 3: partial intertwines the C1-actions
  run_family(rep, "partial-equivariance", tuples2(d1, d0), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]), a = c.basis0(t[1]);
    TcaElement pa = c.zero_element();
    pa.b = c.partial.apply(a.a);
    TcaElement r = c.zero_element();
    r.b = sub(c.partial.apply(c.prod0(u, a).a), c.prod0(u, pa).b);
    return r;
  });

  // item 4: partial(C0) annihilates C0 (+) C1
  run_family(rep, "partial-annihilation", tuples2(d0, d0 + d1), [&](const IndexTuple& t) {
    TcaElement pa = c.zero_element();
    pa.b = c.partial.apply(c.basis0(t[0]).a);
    return c.prod0(pa, combined_basis(c, t[1]));
  });

  // item 5: the pairing is a C1-module homomorphism
  run_family(rep, "pairing-equivariance", tuples3(d1, d1, d1), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]), v = c.basis1(t[1]), w = c.basis1(t[2]);
    TcaElement r = c.zero_element();
    r.a = c.prod0(u, c.prod1(v, w)).a;
    r.a = sub(r.a, c.prod1(c.prod0(u, v), w).a);
    r.a = sub(r.a, c.prod1(v, c.prod0(u, w)).a);
    return r;
  });

  // companion relations of item 5
  run_family(rep, "compat-action", tuples2(d1, d0), [&](const IndexTuple& t) {
    TcaElement r = c.prod0(c.basis1(t[0]), c.basis0(t[1]));
    TcaElement s = c.prod0(c.basis0(t[1]), c.basis1(t[0]));
    r.a = add(r.a, s.a);
    return r;
  });
  run_family(rep, "compat-pairing-partial", tuples2(d0, d1), [&](const IndexTuple& t) {
    TcaElement pa = c.zero_element();
    pa.b = c.partial.apply(c.basis0(t[0]).a);
    TcaElement r = c.prod1(pa, c.basis1(t[1]));
    r.a = add(r.a, c.prod0(c.basis0(t[0]), c.basis1(t[1])).a);
    return r;
  });
  run_family(rep, "compat-skew", tuples2(d1, d1), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]), v = c.basis1(t[1]);
    TcaElement r = c.zero_element();
    r.b = add(c.prod0(u, v).b, c.prod0(v, u).b);
    r.b = sub(r.b, c.partial.apply(c.prod1(u, v).a));
    return r;
  });
  run_family(rep, "compat-symmetric", tuples2(d1, d1), [&](const IndexTuple& t) {
    TcaElement r = c.prod1(c.basis1(t[0]), c.basis1(t[1]));
    r.a = sub(r.a, c.prod1(c.basis1(t[1]), c.basis1(t[0])).a);
    return r;
  });

  rep.sort();
  return d;
}

QuotientLie lie_quotient(const Tca& c) {
  QuotientLie q;
  q.dim_module = c.dim0;
  q.partial_image = SubspaceQ::row_space(c.partial.transpose());
  auto comp = q.partial_image.non_pivots();
  q.complement_coords = comp;
  q.dim = comp.size();

  q.projection = MatrixQ(q.dim, c.dim1);
  for (std::size_t j = 0; j < c.dim1; ++j) {
    VecQ e(c.dim1);
    e[j] = Rational(1);
    VecQ r = q.partial_image.reduce(e);
    for (std::size_t k = 0; k < q.dim; ++k) q.projection.set(k, j, r[comp[k]]);
  }
  q.embedding = MatrixQ(c.dim1, q.dim);
  for (std::size_t k = 0; k < q.dim; ++k) q.embedding.set(comp[k], k, Rational(1));

  // bracket and action through chosen representatives
  q.bracket = zero_tensor(q.dim, q.dim, q.dim);
  q.action = zero_tensor(q.dim, c.dim0, c.dim0);
  for (std::size_t k = 0; k < q.dim; ++k) {
    TcaElement u = c.basis1(comp[k]);
    for (std::size_t l = 0; l < q.dim; ++l)
      q.bracket[k][l] = q.projection.apply(c.prod0(u, c.basis1(comp[l])).b);
    for (std::size_t j = 0; j < c.dim0; ++j) q.action[k][j] = c.prod0(u, c.basis0(j)).a;
  }

  ViolationReport& rep = q.report;
  // well-definedness: partial(C0) must bracket into partial(C0) and act as 0
  run_family(rep, "quotient-well-defined-left", tuples2(c.dim0, c.dim1),
             [&](const IndexTuple& t) {
               TcaElement pa = c.zero_element();
               pa.b = c.partial.apply(c.basis0(t[0]).a);
               TcaElement r = c.zero_element();
               r.b = q.embedding.apply(q.projection.apply(c.prod0(pa, c.basis1(t[1])).b));
               return r;
             });
  run_family(rep, "quotient-well-defined-right", tuples2(c.dim0, c.dim1),
             [&](const IndexTuple& t) {
               TcaElement pa = c.zero_element();
               pa.b = c.partial.apply(c.basis0(t[0]).a);
               TcaElement r = c.zero_element();
               r.b = q.embedding.apply(q.projection.apply(c.prod0(c.basis1(t[1]), pa).b));
               return r;
             });
  run_family(rep, "quotient-action-well-defined", tuples2(c.dim0, c.dim0),
             [&](const IndexTuple& t) {
               TcaElement pa = c.zero_element();
               pa.b = c.partial.apply(c.basis0(t[0]).a);
               return c.prod0(pa, c.basis0(t[1]));
             });

  // antisymmetry and Jacobi on quotient coordinates
  auto qb = [&](std::size_t k, std::size_t l) { return q.bracket[k][l]; };
  auto qb_vec = [&](const VecQ& x, std::size_t l) {
    VecQ out(q.dim);
    for (std::size_t k = 0; k < q.dim; ++k)
      if (!x[k].is_zero()) axpy(out, x[k], qb(k, l));
    return out;
  };
  run_family(rep, "quotient-antisymmetry", tuples2(q.dim, q.dim), [&](const IndexTuple& t) {
    TcaElement r = c.zero_element();
    VecQ s = add(qb(t[0], t[1]), qb(t[1], t[0]));
    if (!is_zero(s)) r.b = q.embedding.apply(s);
    return r;
  });
  run_family(rep, "quotient-jacobi", tuples3(q.dim, q.dim, q.dim), [&](const IndexTuple& t) {
    // [x,[y,z]] - [y,[x,z]] - [[x,y],z]
    VecQ term1(q.dim), term2(q.dim);
    const VecQ yz = qb(t[1], t[2]);
    const VecQ xz = qb(t[0], t[2]);
    for (std::size_t k = 0; k < q.dim; ++k) {
      if (!yz[k].is_zero()) axpy(term1, yz[k], qb(t[0], k));
      if (!xz[k].is_zero()) axpy(term2, xz[k], qb(t[1], k));
    }
    VecQ term3 = qb_vec(qb(t[0], t[1]), t[2]);
    TcaElement res = c.zero_element();
    VecQ total = sub(sub(term1, term2), term3);
    if (!is_zero(total)) res.b = q.embedding.apply(total);
    return res;
  });

  rep.sort();
  return q;
}

Tca from_quadratic_lie(const Tensor2& bracket, const MatrixQ& form) {
  const std::size_t n = bracket.size();
  if (form.rows() != n || form.cols() != n)
    throw std::invalid_argument("from_quadratic_lie: form shape mismatch");
  auto br = [&](std::size_t i, std::size_t j) -> const VecQ& { return bracket[i][j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(add(br(i, j), br(j, i))))
        throw std::invalid_argument("from_quadratic_lie: bracket not antisymmetric");
      if (form.at(i, j) != form.at(j, i))
        throw std::invalid_argument("from_quadratic_lie: form not symmetric");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        VecQ jac(n);
        for (std::size_t l = 0; l < n; ++l) {
          if (!br(j, k)[l].is_zero()) axpy(jac, br(j, k)[l], br(i, l));
          if (!br(i, k)[l].is_zero()) axpy(jac, -br(i, k)[l], br(j, l));
          if (!br(i, j)[l].is_zero()) axpy(jac, -br(i, j)[l], br(l, k));
        }
        if (!is_zero(jac)) throw std::invalid_argument("from_quadratic_lie: Jacobi fails");
        // invariance <[x_i,x_j],x_k> = <x_i,[x_j,x_k]>
        Rational lhs, rhs;
        for (std::size_t l = 0; l < n; ++l) {
          lhs += br(i, j)[l] * form.at(l, k);
          rhs += br(j, k)[l] * form.at(i, l);
        }
        if (lhs != rhs) throw std::invalid_argument("from_quadratic_lie: form not invariant");
      }

  Tca c = Tca::zero(1, n);
  c.t0_bb = bracket;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.t1_bb[i][j][0] = form.at(i, j);
  return c;
}

Tca direct_sum(const Tca& c1, const Tca& c2) {
  Tca c = Tca::zero(c1.dim0 + c2.dim0, c1.dim1 + c2.dim1);
  auto place_vec = [](VecQ& dst, const VecQ& src, std::size_t off) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[off + i] = src[i];
  };
  auto place = [&](Tensor2& dst, const Tensor2& src, std::size_t off1, std::size_t off2,
                   std::size_t off_out) {
    for (std::size_t i = 0; i < src.size(); ++i)
      for (std::size_t j = 0; j < src[i].size(); ++j)
        place_vec(dst[off1 + i][off2 + j], src[i][j], off_out);
  };
  place(c.t0_ab, c1.t0_ab, 0, 0, 0);
  place(c.t0_ab, c2.t0_ab, c1.dim0, c1.dim1, c1.dim0);
  place(c.t0_ba, c1.t0_ba, 0, 0, 0);
  place(c.t0_ba, c2.t0_ba, c1.dim1, c1.dim0, c1.dim0);
  place(c.t0_bb, c1.t0_bb, 0, 0, 0);
  place(c.t0_bb, c2.t0_bb, c1.dim1, c1.dim1, c1.dim1);
  place(c.t1_bb, c1.t1_bb, 0, 0, 0);
  place(c.t1_bb, c2.t1_bb, c1.dim1, c1.dim1, c1.dim0);
  for (std::size_t i = 0; i < c1.dim1; ++i)
    for (std::size_t j = 0; j < c1.dim0; ++j) c.partial.set(i, j, c1.partial.at(i, j));
  for (std::size_t i = 0; i < c2.dim1; ++i)
    for (std::size_t j = 0; j < c2.dim0; ++j)
      c.partial.set(c1.dim1 + i, c1.dim0 + j, c2.partial.at(i, j));
  return c;
}

}  // namespace vab
