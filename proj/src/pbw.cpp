#include "vab/pbw.hpp"

#include <algorithm>

#include "vab/parallel.hpp"

namespace vab {

int factor_rank_cmp(const PbwFactor& f, const PbwFactor& g) {
  long fe = -f.exp, ge = -g.exp;  // |exp|, exponents are negative
  if (fe != ge) return fe > ge ? -1 : 1;
  if (f.a_kind != g.a_kind) return f.a_kind ? -1 : 1;
  if (f.idx != g.idx) return f.idx < g.idx ? -1 : 1;
  return 0;
}

long PbwMonomial::degree() const {
  long d = 0;
  for (const auto& f : factors) d += f.contribution();
  return d;
}

std::size_t PbwMonomial::a_weight() const {
  std::size_t w = 0;
  for (const auto& f : factors)
    if (f.a_kind) ++w;
  return w;
}

bool PbwMonomial::sorted() const {
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factor_rank_cmp(factors[i - 1], factors[i]) > 0) return false;
  return true;
}

bool monomial_less(const PbwMonomial& m1, const PbwMonomial& m2) {
  std::size_t w1 = m1.a_weight(), w2 = m2.a_weight();
  if (w1 != w2) return w1 < w2;
  std::size_t n = std::min(m1.factors.size(), m2.factors.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = factor_rank_cmp(m1.factors[i], m2.factors[i]);
    if (c != 0) return c < 0;
  }
  if (m1.factors.size() != m2.factors.size()) return m1.factors.size() < m2.factors.size();
  return m1.tail < m2.tail;
}

namespace {

/// All non-increasing B-factor sequences of total contribution `degree`.
void enumerate_b_factors(std::size_t dimB, long degree, long max_part, std::size_t max_idx,
                         std::vector<PbwFactor>& current, std::vector<std::vector<PbwFactor>>& out) {
  if (degree == 0) {
    out.push_back(current);
    return;
  }
  for (long part = std::min<long>(max_part, degree); part >= 1; --part) {
    std::size_t idx_start = part == max_part ? max_idx : 0;
    for (std::size_t i = idx_start; i < dimB; ++i) {
      current.push_back({false, i, -part});
      enumerate_b_factors(dimB, degree - part, part, i, current, out);
      current.pop_back();
    }
  }
}

/// All non-decreasing index multisets of size exactly `count`.
void enumerate_a_multisets(std::size_t dimA, std::size_t count, std::size_t min_idx,
                           std::vector<std::size_t>& current,
                           std::vector<std::vector<std::size_t>>& out) {
  if (count == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = min_idx; i < dimA; ++i) {
    current.push_back(i);
    enumerate_a_multisets(dimA, count - 1, i, current, out);
    current.pop_back();
  }
}

}  // namespace

GradedModule GradedModule::build_VL(const WindowedLieAlgebra& w, long max_degree,
                                    std::size_t a_cap) {
  GradedModule g;
  g.lie_ = &w;
  g.max_degree_ = max_degree;
  g.a_factors_ = true;
  g.a_cap_ = a_cap;
  g.base_.dim = 1;
  if (max_degree > w.window())
    throw std::invalid_argument("pbw: module degree range exceeds the bracket window");
  g.enumerate_pieces();
  return g;
}

GradedModule GradedModule::induce(const WindowedLieAlgebra& w, BaseActions base, long max_degree) {
  GradedModule g;
  g.lie_ = &w;
  g.max_degree_ = max_degree;
  g.a_factors_ = false;
  g.base_ = std::move(base);
  if (max_degree > w.window())
    throw std::invalid_argument("pbw: module degree range exceeds the bracket window");
  if (g.base_.aAct.size() != w.dimA() || g.base_.bAct.size() != w.dimB())
    throw std::invalid_argument("pbw: base action count mismatch");
  // b(0) must kill partial(A): the action of partial(a) columns must vanish
  for (std::size_t j = 0; j < w.dimA(); ++j) {
    MatrixQ acc(g.base_.dim, g.base_.dim);
    for (std::size_t i = 0; i < w.dimB(); ++i) {
      const Rational& coef = w.source().partial.at(i, j);
      if (coef.is_zero()) continue;
      for (std::size_t r = 0; r < g.base_.dim; ++r)
        for (const auto& [cc, val] : g.base_.bAct[i].row(r)) acc.add_to(r, cc, coef * val);
    }
    if (acc.nnz() != 0)
      throw std::invalid_argument("pbw: base action does not kill partial(A)");
  }
  g.enumerate_pieces();
  return g;
}

void GradedModule::enumerate_pieces() {
  pieces_.assign(max_degree_ + 1, {});
  index_.assign(max_degree_ + 1,
                std::map<PbwMonomial, std::size_t, bool (*)(const PbwMonomial&, const PbwMonomial&)>(
                    monomial_less));
  const std::size_t dimB = lie_->dimB();
  const std::size_t dimA = lie_->dimA();
  for (long n = 0; n <= max_degree_; ++n) {
    std::vector<std::vector<PbwFactor>> b_parts;
    std::vector<PbwFactor> cur;
    enumerate_b_factors(dimB, n, n == 0 ? 1 : n, 0, cur, b_parts);
    std::vector<std::vector<std::size_t>> a_parts;
    if (a_factors_) {
      std::vector<std::size_t> acur;
      for (std::size_t k = 0; k <= a_cap_; ++k) enumerate_a_multisets(dimA, k, 0, acur, a_parts);
    } else {
      a_parts.push_back({});
    }
    std::vector<PbwMonomial>& piece = pieces_[n];
    for (const auto& bp : b_parts)
      for (const auto& ap : a_parts)
        for (std::size_t t = 0; t < base_.dim; ++t) {
          PbwMonomial m;
          m.factors = bp;
          // a(-1) factors slot in at |exp| = 1, A kind before B kind
          std::vector<PbwFactor> afac;
          for (std::size_t i : ap) afac.push_back({true, i, -1});
          auto pos = std::find_if(m.factors.begin(), m.factors.end(),
                                  [](const PbwFactor& f) { return f.exp == -1; });
          m.factors.insert(pos, afac.begin(), afac.end());
          m.tail = t;
          piece.push_back(std::move(m));
        }
    std::sort(piece.begin(), piece.end(), monomial_less);
    for (std::size_t i = 0; i < piece.size(); ++i) index_[n].emplace(piece[i], i);
  }
}

const std::vector<PbwMonomial>& GradedModule::basis(long degree) const {
  if (degree < 0 || degree > max_degree_) throw WindowExceeded(degree);
  return pieces_[degree];
}

std::size_t GradedModule::index_of(long degree, const PbwMonomial& m) const {
  auto it = index_[degree].find(m);
  if (it == index_[degree].end()) throw std::logic_error("pbw: monomial not in basis");
  return it->second;
}

std::size_t GradedModule::dim_capped(long degree, std::size_t cap) const {
  const auto& piece = basis(degree);
  std::size_t n = 0;
  while (n < piece.size() && piece[n].a_weight() <= cap) ++n;
  return n;
}

std::size_t GradedModule::b_only_count(long degree) const { return dim_capped(degree, 0); }

std::map<PbwMonomial, Rational, bool (*)(const PbwMonomial&, const PbwMonomial&)>
GradedModule::new_accum() const {
  return std::map<PbwMonomial, Rational, bool (*)(const PbwMonomial&, const PbwMonomial&)>(
      monomial_less);
}

void GradedModule::tail_action(
    long gdeg, std::size_t gidx, std::size_t tail, const Rational& coeff,
    std::map<PbwMonomial, Rational, bool (*)(const PbwMonomial&, const PbwMonomial&)>& out) const {
  const std::size_t dimA = lie_->dimA();
  if (gdeg < 0) return;  // strictly lowering generators kill the base
  if (gdeg > 0) {
    // raising b(-gdeg): becomes the sole factor
    PbwMonomial m;
    m.factors.push_back({false, gidx, -gdeg});
    m.tail = tail;
    out[m] += coeff;
    return;
  }
  // degree 0
  if (gidx < dimA) {
    if (a_factors_) {
      if (a_cap_ == 0) throw CapExceeded(a_cap_);
      PbwMonomial m;
      m.factors.push_back({true, gidx, -1});
      m.tail = tail;
      out[m] += coeff;
    } else {
      const MatrixQ& op = base_.aAct[gidx];
      for (std::size_t r = 0; r < op.rows(); ++r) {
        const Rational& val = op.at(r, tail);
        if (!val.is_zero()) {
          PbwMonomial m;
          m.tail = r;
          out[m] += coeff * val;
        }
      }
    }
    return;
  }
  // complement class c(0): acts by b(0) through the base, zero on vacuum
  std::size_t bidx = lie_->complement()[gidx - dimA];
  if (a_factors_) return;
  const MatrixQ& op = base_.bAct[bidx];
  for (std::size_t r = 0; r < op.rows(); ++r) {
    const Rational& val = op.at(r, tail);
    if (!val.is_zero()) {
      PbwMonomial m;
      m.tail = r;
      out[m] += coeff * val;
    }
  }
}

void GradedModule::apply_gen(
    long gdeg, std::size_t gidx, const PbwMonomial& mono, const Rational& coeff,
    std::map<PbwMonomial, Rational, bool (*)(const PbwMonomial&, const PbwMonomial&)>& out) const {
  if (coeff.is_zero()) return;
  if (mono.factors.empty()) {
    tail_action(gdeg, gidx, mono.tail, coeff, out);
    return;
  }
  const std::size_t dimA = lie_->dimA();
  // generator as a candidate factor, when it is one
  std::optional<PbwFactor> as_factor;
  if (gdeg > 0)
    as_factor = PbwFactor{false, gidx, -gdeg};
  else if (gdeg == 0 && gidx < dimA && a_factors_)
    as_factor = PbwFactor{true, gidx, -1};

  const PbwFactor& head = mono.factors.front();
  if (as_factor && factor_rank_cmp(*as_factor, head) <= 0) {
    PbwMonomial m = mono;
    m.factors.insert(m.factors.begin(), *as_factor);
    if (a_factors_ && m.a_weight() > a_cap_) throw CapExceeded(a_cap_);
    out[m] += coeff;
    return;
  }

  // commute past the head: g (f rest) = f (g rest) + [g, f] rest
  PbwMonomial rest = mono;
  rest.factors.erase(rest.factors.begin());

  auto inner = new_accum();
  apply_gen(gdeg, gidx, rest, coeff, inner);
  // head as a normal-form generator: a(-1) factors are the degree-0
  // generators with index idx < dimA; b(-n) factors are degree-n ones
  long head_deg = head.contribution();
  std::size_t head_gen_idx = head.idx;
  for (const auto& [m, c] : inner) apply_gen(head_deg, head_gen_idx, m, c, out);

  const NormalLoopElement& br = lie_->bracket(gdeg, gidx, head_deg, head_gen_idx);
  for (const auto& [bc, bidx2] : lie_->coordinates(br))
    apply_gen(br.degree, bidx2, rest, coeff * bc, out);
}

std::size_t GradedModule::action_col_limit(long gdeg, long from) const {
  // On the capped vacuum module, generators of non-positive degree can
  // raise the A-weight by one (a(-1) directly; lowering generators via
  // brackets whose degree-0 part has an A component), so their action is
  // only defined on the columns with weight headroom. apply_gen still
  // throws if a path would overflow, so this prefix is a guarantee, not
  // a truncation.
  if (!a_factors_ || gdeg > 0 || a_cap_ == 0) return dim(from);
  return dim_capped(from, a_cap_ - 1);
}

const MatrixQ& GradedModule::action(long gdeg, std::size_t gidx, long from) const {
  long to = from + gdeg;
  if (from < 0 || from > max_degree_) throw WindowExceeded(from);
  auto key = std::make_tuple(gdeg, gidx, from);
  auto it = action_cache_.find(key);
  if (it != action_cache_.end()) return it->second;
  if (to < 0) {
    // N-grading: everything below degree 0 is zero
    return action_cache_.emplace(key, MatrixQ(0, action_col_limit(gdeg, from))).first->second;
  }
  if (to > max_degree_) throw WindowExceeded(to);

  const auto& src = basis(from);
  const auto& dst = basis(to);
  const std::size_t ncols = action_col_limit(gdeg, from);
  MatrixQ m(dst.size(), ncols);
  std::vector<std::map<PbwMonomial, Rational, bool (*)(const PbwMonomial&, const PbwMonomial&)>>
      cols(ncols, new_accum());
  parallel_for(ncols, [&](std::size_t j) {
    apply_gen(gdeg, gidx, src[j], Rational(1), cols[j]);
  });
  for (std::size_t j = 0; j < ncols; ++j)
    for (const auto& [mono, c] : cols[j]) {
      if (c.is_zero()) continue;
      m.set(index_of(to, mono), j, c);
    }
  return action_cache_.emplace(key, std::move(m)).first->second;
}

VecQ GradedModule::act(long gdeg, std::size_t gidx, long from, const VecQ& v) const {
  long to = from + gdeg;
  if (to < 0) return VecQ();
  const MatrixQ& m = action(gdeg, gidx, from);
  if (v.size() == m.cols()) return m.apply(v);
  if (v.size() != dim(from)) throw std::invalid_argument("pbw: act size mismatch");
  for (std::size_t j = m.cols(); j < v.size(); ++j)
    if (!v[j].is_zero()) throw CapExceeded(a_cap_);
  VecQ sliced(v.begin(), v.begin() + m.cols());
  return m.apply(sliced);
}

VecQ GradedModule::act_elem(const NormalLoopElement& g, long from, const VecQ& v) const {
  long to = from + g.degree;
  if (to < 0) return VecQ();
  VecQ out(dim(to));
  for (const auto& [c, idx] : lie_->coordinates(g)) {
    VecQ part = act(g.degree, idx, from, v);
    if (!part.empty()) axpy(out, c, part);
  }
  return out;
}

VecQ GradedModule::act_loop(bool a_kind, std::size_t idx, long p, long from, const VecQ& v) const {
  const Tca& c = lie_->source();
  RawLoopElement raw = raw_loop_basis(c, a_kind, idx, p);
  if (from + raw.degree < 0) return VecQ();
  if (std::abs(raw.degree) > lie_->window()) throw WindowExceeded(raw.degree);
  return act_elem(lie_->normal_form(raw), from, v);
}

VecQ GradedModule::d_operator(long from, const VecQ& v) const {
  if (!a_factors_)
    throw std::logic_error("pbw: the translation operator lives on the vacuum module shape");
  long to = from + 1;
  if (to > max_degree_) throw WindowExceeded(to);
  VecQ out(dim(to));
  const auto& src = basis(from);
  for (std::size_t j = 0; j < src.size(); ++j) {
    if (v[j].is_zero()) continue;
    const PbwMonomial& mono = src[j];
    // D(f1 ... fk 1) = sum_i f1 ... [D, fi] ... fk 1, with
    // [D, y(m)] = -m y(m-1)
    for (std::size_t i = 0; i < mono.factors.size(); ++i) {
      const PbwFactor& f = mono.factors[i];
      // shifted factor as a loop generator
      RawLoopElement raw = raw_loop_basis(lie_->source(), f.a_kind, f.idx, f.exp - 1);
      NormalLoopElement shifted = lie_->normal_form(raw);
      Rational coef = v[j] * Rational(-f.exp);

      // apply: left factors as generators, then shifted, then the rest
      PbwMonomial rest;
      rest.factors.assign(mono.factors.begin() + i + 1, mono.factors.end());
      rest.tail = mono.tail;
      auto acc = new_accum();
      for (const auto& [bc, bidx] : lie_->coordinates(shifted))
        apply_gen(shifted.degree, bidx, rest, coef * bc, acc);
      for (std::size_t k = i; k-- > 0;) {
        auto next = new_accum();
        const PbwFactor& lf = mono.factors[k];
        for (const auto& [m, cc] : acc) apply_gen(lf.contribution(), lf.idx, m, cc, next);
        acc = std::move(next);
      }
      for (const auto& [m, cc] : acc) {
        if (cc.is_zero()) continue;
        out[index_of(to, m)] += cc;
      }
    }
  }
  return out;
}

VecQ GradedModule::iterate_action(bool u_a, std::size_t ui, bool v_a, std::size_t vi, long n,
                                  long from, const VecQ& w) const {
  // (u(-1)v)_n has operator degree wt - n - 1 with wt = wt(u) + wt(v)
  long wt = (u_a ? 0 : 1) + (v_a ? 0 : 1);
  long target = from + wt - n - 1;
  if (target < 0) return VecQ();
  if (target > max_degree_) throw WindowExceeded(target);
  VecQ out(dim(target));

  long i_max = from + std::abs(n) + 2;
  for (long i = 0; i <= i_max; ++i) {
    // term u(-1-i) v(n+i) w
    long d_v = loop_op_degree(v_a, n + i);
    if (from + d_v >= 0) {
      VecQ t1 = act_loop(v_a, vi, n + i, from, w);
      if (!t1.empty() && !is_zero(t1)) {
        VecQ t2 = act_loop(u_a, ui, -1 - i, from + d_v, t1);
        if (!t2.empty()) axpy(out, Rational(1), t2);
      }
    }
    // term v(n-1-i) u(i) w
    long d_u = loop_op_degree(u_a, i);
    if (from + d_u >= 0) {
      VecQ t1 = act_loop(u_a, ui, i, from, w);
      if (!t1.empty() && !is_zero(t1)) {
        VecQ t2 = act_loop(v_a, vi, n - 1 - i, from + d_u, t1);
        if (!t2.empty()) axpy(out, Rational(1), t2);
      }
    }
  }
  return out;
}

VecQ GradedModule::embed_A(std::size_t idx) const {
  if (!a_factors_) throw std::logic_error("pbw: embed_A requires the vacuum module shape");
  PbwMonomial m;
  m.factors.push_back({true, idx, -1});
  VecQ v(dim(0));
  v[index_of(0, m)] = Rational(1);
  return v;
}

VecQ GradedModule::embed_B(std::size_t idx) const {
  if (!a_factors_) throw std::logic_error("pbw: embed_B requires the vacuum module shape");
  PbwMonomial m;
  m.factors.push_back({false, idx, -1});
  VecQ v(dim(1));
  v[index_of(1, m)] = Rational(1);
  return v;
}

std::size_t GradedModule::sweep_col_limit(long from) const {
  if (!a_factors_) return dim(from);
  return dim_capped(from, a_cap_ >= 2 ? a_cap_ - 2 : 0);
}

bool GradedModule::representation_property_check() const {
  const long N = lie_->window();
  for (long gd1 = -N; gd1 <= N; ++gd1)
    for (long gd2 = -N; gd2 <= N; ++gd2) {
      if (std::abs(gd1 + gd2) > N) continue;
      for (std::size_t i = 0; i < lie_->dim_at(gd1); ++i)
        for (std::size_t j = 0; j < lie_->dim_at(gd2); ++j)
          for (long from = 0; from <= max_degree_; ++from) {
            long mid1 = from + gd2, to = from + gd1 + gd2;
            if (to > max_degree_ || to < 0) continue;
            if (mid1 > max_degree_ || from + gd1 > max_degree_) continue;
            for (std::size_t col = 0; col < sweep_col_limit(from); ++col) {
              VecQ e(dim(from));
              e[col] = Rational(1);
              VecQ lhs1 = mid1 < 0 ? VecQ(dim(to)) : act(gd1, i, mid1, act(gd2, j, from, e));
              if (lhs1.empty()) lhs1 = VecQ(dim(to));
              long mid2 = from + gd1;
              VecQ lhs2 = mid2 < 0 ? VecQ(dim(to)) : act(gd2, j, mid2, act(gd1, i, from, e));
              if (lhs2.empty()) lhs2 = VecQ(dim(to));
              VecQ rhs = act_elem(lie_->bracket(gd1, i, gd2, j), from, e);
              if (rhs.empty()) rhs = VecQ(dim(to));
              VecQ res = sub(sub(lhs1, lhs2), rhs);
              if (!is_zero(res)) return false;
            }
          }
    }
  return true;
}

bool GradedModule::commutator_consistency() const {
  const Tca& c = lie_->source();
  const long N = lie_->window();
  for (int ka = 0; ka <= 1; ++ka)
    for (int kb = 0; kb <= 1; ++kb) {
      std::size_t du = ka ? c.dim0 : c.dim1;
      std::size_t dv = kb ? c.dim0 : c.dim1;
      for (std::size_t i = 0; i < du; ++i)
        for (std::size_t j = 0; j < dv; ++j)
          for (long p = -N - 1; p <= N; ++p)
            for (long q = -N - 1; q <= N; ++q) {
              RawLoopElement x = raw_loop_basis(c, ka, i, p);
              RawLoopElement y = raw_loop_basis(c, kb, j, q);
              if (std::abs(x.degree) > N || std::abs(y.degree) > N) continue;
              if (std::abs(x.degree + y.degree) > N) continue;
              RawLoopElement br = raw_bracket(c, x, y);
              for (long from = 0; from <= max_degree_; ++from) {
                long to = from + x.degree + y.degree;
                if (to < 0 || to > max_degree_) continue;
                if (from + x.degree > max_degree_ || from + y.degree > max_degree_) continue;
                for (std::size_t col = 0; col < sweep_col_limit(from); ++col) {
                  VecQ e(dim(from));
                  e[col] = Rational(1);
                  VecQ vy = act_loop(kb, j, q, from, e);
                  VecQ lhs1 = vy.empty() ? VecQ(dim(to)) : act_loop(ka, i, p, from + y.degree, vy);
                  if (lhs1.empty()) lhs1 = VecQ(dim(to));
                  VecQ vx = act_loop(ka, i, p, from, e);
                  VecQ lhs2 = vx.empty() ? VecQ(dim(to)) : act_loop(kb, j, q, from + x.degree, vx);
                  if (lhs2.empty()) lhs2 = VecQ(dim(to));
                  VecQ rhs = act_elem(lie_->normal_form(br), from, e);
                  if (rhs.empty()) rhs = VecQ(dim(to));
                  if (!is_zero(sub(sub(lhs1, lhs2), rhs))) return false;
                }
              }
            }
    }
  return true;
}

bool GradedModule::d_bracket_check() const {
  const Tca& c = lie_->source();
  const long N = lie_->window();
  for (int ka = 0; ka <= 1; ++ka) {
    std::size_t du = ka ? c.dim0 : c.dim1;
    for (std::size_t i = 0; i < du; ++i)
      for (long p = -N; p <= N - 1; ++p) {
        RawLoopElement x = raw_loop_basis(c, ka, i, p);
        RawLoopElement xm = raw_loop_basis(c, ka, i, p - 1);
        if (std::abs(x.degree) > N || std::abs(xm.degree) > N) continue;
        for (long from = 0; from <= max_degree_; ++from) {
          long to = from + x.degree + 1;
          if (to < 0 || to > max_degree_) continue;
          if (from + x.degree < 0) continue;
          if (from + 1 > max_degree_ || from + x.degree > max_degree_) continue;
          for (std::size_t col = 0; col < sweep_col_limit(from); ++col) {
            VecQ e(dim(from));
            e[col] = Rational(1);
            VecQ lhs1 = d_operator(from + x.degree, act_loop(ka, i, p, from, e));
            VecQ dv = d_operator(from, e);
            VecQ lhs2 = act_loop(ka, i, p, from + 1, dv);
            if (lhs2.empty()) lhs2 = VecQ(dim(to));
            VecQ rhs = scaled(act_loop(ka, i, p - 1, from, e), Rational(-p));
            if (rhs.empty()) rhs = VecQ(dim(to));
            if (!is_zero(sub(sub(lhs1, lhs2), rhs))) return false;
          }
        }
      }
  }
  return true;
}

}  // namespace vab
