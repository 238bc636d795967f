#include "vab/looplie.hpp"

#include <sstream>
#include <stdexcept>

#include "sweep.hpp"

namespace vab {

using detail::IndexTuple;
using detail::index_tuples;
using detail::run_vec_family;

RawLoopElement hat_partial(const Tca& c, const VecQ& a, long n) {
  // hat_partial(a t^n) = partial(a) t^n + n a t^{n-1}, degree -n
  RawLoopElement r;
  r.degree = -n;
  r.bPart = c.partial.apply(a);
  r.aPart = scaled(a, Rational(n));
  return r;
}

RawLoopElement raw_loop_basis(const Tca& c, bool a_kind, std::size_t idx, long t_exp) {
  RawLoopElement r;
  r.aPart = VecQ(c.dim0);
  r.bPart = VecQ(c.dim1);
  if (a_kind) {
    r.degree = -t_exp - 1;
    r.aPart[idx] = Rational(1);
  } else {
    r.degree = -t_exp;
    r.bPart[idx] = Rational(1);
  }
  return r;
}

RawLoopElement raw_bracket(const Tca& c, const RawLoopElement& x, const RawLoopElement& y) {
  RawLoopElement r;
  r.degree = x.degree + y.degree;
  r.aPart = VecQ(c.dim0);
  r.bPart = VecQ(c.dim1);
  TcaElement xe{x.aPart, x.bPart}, ye{y.aPart, y.bPart};
  TcaElement p0 = c.prod0(xe, ye);
  r.aPart = p0.a;
  r.bPart = p0.b;
  // the b t^m factor contributes m (b_1 b') t^{m+n-1} with m = -deg(x)
  TcaElement p1 = c.prod1(xe, ye);
  axpy(r.aPart, Rational(-x.degree), p1.a);
  return r;
}

SubspaceQ hat_partial_subspace(const Tca& c, long degree) {
  std::vector<VecQ> rows;
  for (std::size_t i = 0; i < c.dim0; ++i) {
    VecQ a(c.dim0);
    a[i] = Rational(1);
    RawLoopElement g = hat_partial(c, a, -degree);
    VecQ row(c.dim0 + c.dim1);
    for (std::size_t k = 0; k < c.dim0; ++k) row[k] = g.aPart[k];
    for (std::size_t k = 0; k < c.dim1; ++k) row[c.dim0 + k] = g.bPart[k];
    rows.push_back(std::move(row));
  }
  return SubspaceQ::span(rows, c.dim0 + c.dim1);
}

ViolationReport check_ideal_conditions(const Tca& c) {
  ViolationReport rep;
  const std::size_t d0 = c.dim0, d1 = c.dim1;
  auto pcol = [&](long j) { return c.partial.apply(c.basis0(j).a); };

  run_vec_family(rep, "ideal-a0-partial", index_tuples({d0, d0}), [&](const IndexTuple& t) {
    TcaElement pa = c.zero_element();
    pa.b = pcol(t[1]);
    return c.prod0(c.basis0(t[0]), pa).a;
  });
  run_vec_family(rep, "ideal-b0-partial", index_tuples({d1, d0}), [&](const IndexTuple& t) {
    TcaElement pa = c.zero_element();
    pa.b = pcol(t[1]);
    VecQ lhs = c.prod0(c.basis1(t[0]), pa).b;
    return sub(lhs, c.partial.apply(c.prod0(c.basis1(t[0]), c.basis0(t[1])).a));
  });
  run_vec_family(rep, "ideal-b1-partial", index_tuples({d1, d0}), [&](const IndexTuple& t) {
    TcaElement pa = c.zero_element();
    pa.b = pcol(t[1]);
    VecQ lhs = c.prod1(c.basis1(t[0]), pa).a;
    return sub(lhs, c.prod0(c.basis1(t[0]), c.basis0(t[1])).a);
  });
  run_vec_family(rep, "ideal-partial-0a", index_tuples({d0, d0}), [&](const IndexTuple& t) {
    TcaElement pa = c.zero_element();
    pa.b = pcol(t[0]);
    return c.prod0(pa, c.basis0(t[1])).a;
  });
  run_vec_family(rep, "ideal-partial-0b", index_tuples({d0, d1}), [&](const IndexTuple& t) {
    TcaElement pa = c.zero_element();
    pa.b = pcol(t[0]);
    return c.prod0(pa, c.basis1(t[1])).b;
  });
  run_vec_family(rep, "ideal-partial-1b", index_tuples({d0, d1}), [&](const IndexTuple& t) {
    TcaElement pa = c.zero_element();
    pa.b = pcol(t[0]);
    VecQ lhs = c.prod1(pa, c.basis1(t[1])).a;
    return add(lhs, c.prod0(c.basis0(t[0]), c.basis1(t[1])).a);
  });
  rep.sort();
  return rep;
}

ViolationReport check_skew_conditions(const Tca& c) {
  ViolationReport rep;
  const std::size_t d0 = c.dim0, d1 = c.dim1;
  run_vec_family(rep, "skew-ab", index_tuples({d0, d1}), [&](const IndexTuple& t) {
    VecQ lhs = c.prod0(c.basis0(t[0]), c.basis1(t[1])).a;
    return add(lhs, c.prod0(c.basis1(t[1]), c.basis0(t[0])).a);
  });
  run_vec_family(rep, "skew-pairing", index_tuples({d1, d1}), [&](const IndexTuple& t) {
    VecQ lhs = c.prod1(c.basis1(t[0]), c.basis1(t[1])).a;
    return sub(lhs, c.prod1(c.basis1(t[1]), c.basis1(t[0])).a);
  });
  run_vec_family(rep, "skew-bb", index_tuples({d1, d1}), [&](const IndexTuple& t) {
    VecQ lhs = add(c.prod0(c.basis1(t[0]), c.basis1(t[1])).b,
                   c.prod0(c.basis1(t[1]), c.basis1(t[0])).b);
    return sub(lhs, c.partial.apply(c.prod1(c.basis1(t[1]), c.basis1(t[0])).a));
  });
  rep.sort();
  return rep;
}

ViolationReport check_jacobi_conditions(const Tca& c) {
  ViolationReport rep;
  const std::size_t d0 = c.dim0, d1 = c.dim1;
  run_vec_family(rep, "jacobi-abb", index_tuples({d0, d1, d1}), [&](const IndexTuple& t) {
    TcaElement a = c.basis0(t[0]), u = c.basis1(t[1]), v = c.basis1(t[2]);
    VecQ lhs = c.prod0(a, c.prod0(u, v)).a;
    lhs = sub(lhs, c.prod0(u, c.prod0(a, v)).a);
    return sub(lhs, c.prod0(c.prod0(a, u), v).a);
  });
  run_vec_family(rep, "jacobi-bbb0", index_tuples({d1, d1, d1}), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]), v = c.basis1(t[1]), w = c.basis1(t[2]);
    VecQ lhs = c.prod0(u, c.prod0(v, w)).b;
    lhs = sub(lhs, c.prod0(v, c.prod0(u, w)).b);
    return sub(lhs, c.prod0(c.prod0(u, v), w).b);
  });
  run_vec_family(rep, "jacobi-bbb1", index_tuples({d1, d1, d1}), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]), v = c.basis1(t[1]), w = c.basis1(t[2]);
    VecQ lhs = c.prod0(u, c.prod1(v, w)).a;
    lhs = sub(lhs, c.prod1(v, c.prod0(u, w)).a);
    return sub(lhs, c.prod1(c.prod0(u, v), w).a);
  });
  run_vec_family(rep, "jacobi-mixed", index_tuples({d1, d1, d1}), [&](const IndexTuple& t) {
    TcaElement u = c.basis1(t[0]), v = c.basis1(t[1]), w = c.basis1(t[2]);
    VecQ lhs = c.prod1(u, c.prod0(v, w)).a;
    lhs = sub(lhs, c.prod0(v, c.prod1(u, w)).a);
    lhs = sub(lhs, c.prod1(c.prod0(u, v), w).a);
    return sub(lhs, c.prod0(c.prod1(u, v), w).a);
  });
  rep.sort();
  return rep;
}

namespace {

bool raw_in_hat_partial(const Tca& c, const RawLoopElement& x, const SubspaceQ& slice) {
  VecQ row(c.dim0 + c.dim1);
  for (std::size_t k = 0; k < c.dim0; ++k) row[k] = x.aPart[k];
  for (std::size_t k = 0; k < c.dim1; ++k) row[c.dim0 + k] = x.bPart[k];
  return slice.contains(row);
}

}  // namespace

LoopMembershipVerdict loop_membership_oracle(const Tca& c, long exp_range) {
  LoopMembershipVerdict v;
  const long R = exp_range;
  std::map<long, SubspaceQ> slices;
  auto slice_at = [&](long d) -> const SubspaceQ& {
    auto it = slices.find(d);
    if (it == slices.end()) it = slices.emplace(d, hat_partial_subspace(c, d)).first;
    return it->second;
  };
  std::vector<RawLoopElement> gens;  // all generators at all exponents
  for (long p = -R; p <= R; ++p) {
    for (std::size_t i = 0; i < c.dim0; ++i) gens.push_back(raw_loop_basis(c, true, i, p));
    for (std::size_t i = 0; i < c.dim1; ++i) gens.push_back(raw_loop_basis(c, false, i, p));
  }

  v.ideal_ok = true;
  for (long n = -R; n <= R && v.ideal_ok; ++n)
    for (std::size_t i = 0; i < c.dim0 && v.ideal_ok; ++i) {
      VecQ a(c.dim0);
      a[i] = Rational(1);
      RawLoopElement g = hat_partial(c, a, n);
      for (const auto& x : gens) {
        RawLoopElement l = raw_bracket(c, x, g);
        RawLoopElement r = raw_bracket(c, g, x);
        if (!raw_in_hat_partial(c, l, slice_at(l.degree)) ||
            !raw_in_hat_partial(c, r, slice_at(r.degree))) {
          v.ideal_ok = false;
          break;
        }
      }
    }

  v.skew_ok = true;
  for (std::size_t i = 0; i < gens.size() && v.skew_ok; ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      RawLoopElement s = raw_bracket(c, gens[i], gens[j]);
      RawLoopElement t = raw_bracket(c, gens[j], gens[i]);
      s.aPart = add(s.aPart, t.aPart);
      s.bPart = add(s.bPart, t.bPart);
      if (!raw_in_hat_partial(c, s, slice_at(s.degree))) {
        v.skew_ok = false;
        break;
      }
    }

  v.jacobi_ok = true;
  for (std::size_t i = 0; i < gens.size() && v.jacobi_ok; ++i)
    for (std::size_t j = 0; j < gens.size() && v.jacobi_ok; ++j)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        RawLoopElement xyz = raw_bracket(c, gens[i], raw_bracket(c, gens[j], gens[k]));
        RawLoopElement yxz = raw_bracket(c, gens[j], raw_bracket(c, gens[i], gens[k]));
        RawLoopElement xy_z = raw_bracket(c, raw_bracket(c, gens[i], gens[j]), gens[k]);
        xyz.aPart = sub(sub(xyz.aPart, yxz.aPart), xy_z.aPart);
        xyz.bPart = sub(sub(xyz.bPart, yxz.bPart), xy_z.bPart);
        if (!raw_in_hat_partial(c, xyz, slice_at(xyz.degree))) {
          v.jacobi_ok = false;
          break;
        }
      }
  return v;
}

WindowedLieAlgebra::WindowedLieAlgebra(Tca source, long window)
    : source_(std::move(source)), window_(window) {
  if (window_ < 1) throw std::invalid_argument("loop-lie: window must be >= 1");
  partial_image_ = SubspaceQ::row_space(source_.partial.transpose());
  complement_ = partial_image_.non_pivots();
  build_tables();
  verify();
}

std::size_t WindowedLieAlgebra::dim_at(long degree) const {
  return degree == 0 ? source_.dim0 + complement_.size() : source_.dim1;
}

NormalLoopElement WindowedLieAlgebra::zero_at(long degree) const {
  NormalLoopElement e;
  e.degree = degree;
  e.b = VecQ(source_.dim1);
  if (degree == 0) e.a = VecQ(source_.dim0);
  return e;
}

NormalLoopElement WindowedLieAlgebra::basis_element(long degree, std::size_t idx) const {
  NormalLoopElement e = zero_at(degree);
  if (degree == 0) {
    if (idx < source_.dim0)
      e.a[idx] = Rational(1);
    else
      e.b[complement_[idx - source_.dim0]] = Rational(1);
  } else {
    e.b[idx] = Rational(1);
  }
  return e;
}

std::vector<std::pair<Rational, std::size_t>> WindowedLieAlgebra::coordinates(
    const NormalLoopElement& x) const {
  std::vector<std::pair<Rational, std::size_t>> out;
  if (x.degree == 0) {
    for (std::size_t i = 0; i < source_.dim0; ++i)
      if (!x.a[i].is_zero()) out.emplace_back(x.a[i], i);
    for (std::size_t j = 0; j < complement_.size(); ++j)
      if (!x.b[complement_[j]].is_zero()) out.emplace_back(x.b[complement_[j]], source_.dim0 + j);
  } else {
    for (std::size_t i = 0; i < source_.dim1; ++i)
      if (!x.b[i].is_zero()) out.emplace_back(x.b[i], i);
  }
  return out;
}

NormalLoopElement WindowedLieAlgebra::normal_form(const RawLoopElement& x) const {
  NormalLoopElement e = zero_at(x.degree);
  if (x.degree != 0) {
    e.b = x.bPart;
    if (!is_zero(x.aPart))
      axpy(e.b, Rational(1, x.degree), source_.partial.apply(x.aPart));
  } else {
    e.a = x.aPart;
    e.b = partial_image_.reduce(x.bPart);
  }
  return e;
}

const NormalLoopElement& WindowedLieAlgebra::bracket(long m, std::size_t i, long n,
                                                     std::size_t j) const {
  auto it = table_.find({m, n});
  if (it == table_.end()) {
    std::ostringstream os;
    os << "loop-lie: bracket (" << m << "," << n << ") outside window " << window_;
    throw std::out_of_range(os.str());
  }
  return it->second[i][j];
}

NormalLoopElement WindowedLieAlgebra::bracket_elems(const NormalLoopElement& x,
                                                    const NormalLoopElement& y) const {
  NormalLoopElement out = zero_at(x.degree + y.degree);
  for (const auto& [cx, i] : coordinates(x))
    for (const auto& [cy, j] : coordinates(y)) {
      const NormalLoopElement& t = bracket(x.degree, i, y.degree, j);
      Rational coef = cx * cy;
      if (!t.a.empty()) axpy(out.a, coef, t.a);
      axpy(out.b, coef, t.b);
    }
  return out;
}

NormalLoopElement WindowedLieAlgebra::add_elems(const NormalLoopElement& x,
                                                const NormalLoopElement& y) {
  NormalLoopElement out = x;
  if (!y.a.empty()) {
    if (out.a.empty()) out.a = VecQ(y.a.size());
    out.a = add(out.a, y.a);
  }
  out.b = add(out.b, y.b);
  return out;
}

NormalLoopElement WindowedLieAlgebra::scale_elem(const NormalLoopElement& x, const Rational& c) {
  NormalLoopElement out = x;
  if (!out.a.empty()) out.a = scaled(out.a, c);
  out.b = scaled(out.b, c);
  return out;
}

bool WindowedLieAlgebra::is_zero_elem(const NormalLoopElement& x) {
  return (x.a.empty() || is_zero(x.a)) && is_zero(x.b);
}

namespace {

RawLoopElement representative(const Tca& c, const std::vector<std::size_t>& comp, long degree,
                              std::size_t idx) {
  if (degree == 0) {
    if (idx < c.dim0) return raw_loop_basis(c, true, idx, -1);
    return raw_loop_basis(c, false, comp[idx - c.dim0], 0);
  }
  return raw_loop_basis(c, false, idx, -degree);
}

}  // namespace

void WindowedLieAlgebra::build_tables() {
  const long N = window_;
  for (long m = -N; m <= N; ++m)
    for (long n = -N; n <= N; ++n) {
      if (std::abs(m + n) > N) continue;
      const std::size_t dm = dim_at(m), dn = dim_at(n);
      std::vector<std::vector<NormalLoopElement>> block(
          dm, std::vector<NormalLoopElement>(dn));
      parallel_for(dm * dn, [&](std::size_t f) {
        std::size_t i = f / dn, j = f % dn;
        RawLoopElement xi = representative(source_, complement_, m, i);
        RawLoopElement yj = representative(source_, complement_, n, j);
        block[i][j] = normal_form(raw_bracket(source_, xi, yj));
      });
      table_[{m, n}] = std::move(block);
    }
}

void WindowedLieAlgebra::verify() {
  const long N = window_;
  // brackets of hat_partial generators reduce to zero, and hat_partial
  // generators themselves have zero normal form
  for (long n = -N; n <= N; ++n)
    for (std::size_t i = 0; i < source_.dim0; ++i) {
      VecQ a(source_.dim0);
      a[i] = Rational(1);
      RawLoopElement g = hat_partial(source_, a, n);
      if (std::abs(g.degree) <= N && !is_zero_elem(normal_form(g)))
        throw std::logic_error("loop-lie: hat_partial generator has nonzero normal form");
      for (long m = -N; m <= N; ++m) {
        if (std::abs(m + g.degree) > N) continue;
        for (std::size_t k = 0; k < dim_at(m); ++k) {
          RawLoopElement x = representative(source_, complement_, m, k);
          if (!is_zero_elem(normal_form(raw_bracket(source_, x, g))) ||
              !is_zero_elem(normal_form(raw_bracket(source_, g, x))))
            throw std::logic_error("loop-lie: hat_partial(L(A)) is not an ideal");
        }
      }
    }

  // antisymmetry
  for (const auto& [key, block] : table_) {
    auto [m, n] = key;
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block[i].size(); ++j) {
        NormalLoopElement s = add_elems(block[i][j], bracket(n, j, m, i));
        if (!is_zero_elem(s)) throw std::logic_error("loop-lie: antisymmetry fails");
      }
  }

  // Jacobi on all in-window triples
  std::vector<std::array<long, 3>> degree_triples;
  for (long m = -N; m <= N; ++m)
    for (long n = -N; n <= N; ++n)
      for (long k = -N; k <= N; ++k) {
        if (std::abs(m + n) > N || std::abs(m + k) > N || std::abs(n + k) > N ||
            std::abs(m + n + k) > N)
          continue;
        degree_triples.push_back({m, n, k});
      }
  std::vector<char> fail(degree_triples.size(), 0);
  parallel_for(degree_triples.size(), [&](std::size_t t) {
    auto [m, n, k] = degree_triples[t];
    for (std::size_t i = 0; i < dim_at(m) && !fail[t]; ++i)
      for (std::size_t j = 0; j < dim_at(n) && !fail[t]; ++j)
        for (std::size_t l = 0; l < dim_at(k); ++l) {
          NormalLoopElement x = basis_element(m, i);
          NormalLoopElement jac = bracket_elems(x, bracket(n, j, k, l));
          NormalLoopElement y = basis_element(n, j);
          jac = add_elems(jac, scale_elem(bracket_elems(y, bracket(m, i, k, l)), Rational(-1)));
          jac = add_elems(jac, scale_elem(bracket_elems(bracket(m, i, n, j), basis_element(k, l)),
                                          Rational(-1)));
          if (!is_zero_elem(jac)) {
            fail[t] = 1;
            break;
          }
        }
  });
  for (char f : fail)
    if (f) throw std::logic_error("loop-lie: Jacobi fails inside the window");
}

DegreeZeroAlgebra degree_zero_algebra(const WindowedLieAlgebra& w) {
  DegreeZeroAlgebra out;
  out.dimA = w.dimA();
  out.dimG = w.dim_at(0) - w.dimA();
  const std::size_t d = w.dim_at(0);
  out.bracket = zero_tensor(d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const NormalLoopElement& t = w.bracket(0, i, 0, j);
      for (const auto& [coef, idx] : w.coordinates(t)) out.bracket[i][j][idx] = coef;
    }
  out.quotient = lie_quotient(w.source());
  ViolationReport& rep = out.report;
  out.quotient.report.sort();
  rep.merge(out.quotient.report);

  // A(-1) is an abelian ideal: [a,a']=0 and [c,a] lands in the A block
  run_vec_family(rep, "semidirect-abelian", index_tuples({out.dimA, out.dimA}),
                 [&](const IndexTuple& t) { return out.bracket[t[0]][t[1]]; });
  run_vec_family(rep, "semidirect-ideal", index_tuples({out.dimG, out.dimA}),
                 [&](const IndexTuple& t) {
                   VecQ v = out.bracket[out.dimA + t[0]][t[1]];
                   VecQ gpart(out.dimG);
                   for (std::size_t k = 0; k < out.dimG; ++k) gpart[k] = v[out.dimA + k];
                   return gpart;
                 });
  // the action block matches the quotient action, the g block its bracket
  run_vec_family(rep, "semidirect-action", index_tuples({out.dimG, out.dimA}),
                 [&](const IndexTuple& t) {
                   VecQ v = out.bracket[out.dimA + t[0]][t[1]];
                   VecQ apart(out.dimA);
                   for (std::size_t k = 0; k < out.dimA; ++k) apart[k] = v[k];
                   return sub(apart, out.quotient.action[t[0]][t[1]]);
                 });
  run_vec_family(rep, "semidirect-gblock", index_tuples({out.dimG, out.dimG}),
                 [&](const IndexTuple& t) {
                   VecQ v = out.bracket[out.dimA + t[0]][out.dimA + t[1]];
                   VecQ gpart(out.dimG);
                   for (std::size_t k = 0; k < out.dimG; ++k) gpart[k] = v[out.dimA + k];
                   return sub(gpart, out.quotient.bracket[t[0]][t[1]]);
                 });
  rep.sort();
  return out;
}

CentralElements central_elements(const WindowedLieAlgebra& w) {
  CentralElements out;
  const Tca& c = w.source();
  SubspaceQ ker = kernel(c.partial);
  const long N = w.window();
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    VecQ a = ker.basis().row_dense(r);
    bool central = true;
    // a(n) = 0 in normal form for n != -1
    for (long n = -N - 1; n <= N - 1 && central; ++n) {
      if (n == -1) continue;
      RawLoopElement raw;
      raw.degree = -n - 1;
      raw.aPart = a;
      raw.bPart = VecQ(c.dim1);
      if (std::abs(raw.degree) > N) continue;
      if (!WindowedLieAlgebra::is_zero_elem(w.normal_form(raw))) central = false;
    }
    // [a(-1), x] = 0 for every basis element in the window
    NormalLoopElement am1 = w.zero_at(0);
    am1.a = a;
    for (long m = -N; m <= N && central; ++m)
      for (std::size_t j = 0; j < w.dim_at(m); ++j)
        if (!WindowedLieAlgebra::is_zero_elem(w.bracket_elems(am1, w.basis_element(m, j)))) {
          central = false;
          break;
        }
    if (central)
      out.central.push_back(a);
    else
      out.report.add("central-element", {(long)r}, "kernel vector is not central");
  }
  return out;
}

bool commutator_series_check(const WindowedLieAlgebra& w) {
  const Tca& c = w.source();
  const long N = w.window();
  for (int kind_u = 0; kind_u <= 1; ++kind_u)
    for (int kind_v = 0; kind_v <= 1; ++kind_v) {
      std::size_t du = kind_u == 0 ? c.dim0 : c.dim1;
      std::size_t dv = kind_v == 0 ? c.dim0 : c.dim1;
      for (std::size_t i = 0; i < du; ++i)
        for (std::size_t j = 0; j < dv; ++j)
          for (long p = -N - 1; p <= N; ++p)
            for (long q = -N - 1; q <= N; ++q) {
              RawLoopElement x = raw_loop_basis(c, kind_u == 0, i, p);
              RawLoopElement y = raw_loop_basis(c, kind_v == 0, j, q);
              if (std::abs(x.degree) > N || std::abs(y.degree) > N ||
                  std::abs(x.degree + y.degree) > N)
                continue;
              NormalLoopElement lhs = w.bracket_elems(w.normal_form(x), w.normal_form(y));
              NormalLoopElement rhs = w.normal_form(raw_bracket(c, x, y));
              NormalLoopElement diff =
                  WindowedLieAlgebra::add_elems(lhs, WindowedLieAlgebra::scale_elem(rhs, Rational(-1)));
              if (!WindowedLieAlgebra::is_zero_elem(diff)) return false;
            }
    }
  return true;
}

}  // namespace vab
