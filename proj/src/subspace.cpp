#include "vab/subspace.hpp"

#include <stdexcept>

namespace vab {

SubspaceQ SubspaceQ::span(const std::vector<VecQ>& vectors, std::size_t ambient_dim) {
  SubspaceQ s(ambient_dim);
  MatrixQ m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(i, vectors[i]);
  s.pivots_ = rref_inplace(m);
  s.basis_ = std::move(m);
  return s;
}

SubspaceQ SubspaceQ::row_space(const MatrixQ& m) {
  SubspaceQ s(m.cols());
  MatrixQ r = m;
  s.pivots_ = rref_inplace(r);
  s.basis_ = std::move(r);
  return s;
}

SubspaceQ SubspaceQ::full(std::size_t ambient_dim) {
  SubspaceQ s(ambient_dim);
  s.basis_ = MatrixQ::identity(ambient_dim);
  s.pivots_.resize(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
  return s;
}

VecQ SubspaceQ::reduce(const VecQ& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("subspace: ambient-dimension mismatch");
  VecQ r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Rational& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    Rational coef = c;  // pivot entries are 1
    for (const auto& [col, x] : basis_.row(i)) r[col] -= coef * x;
  }
  return r;
}

bool SubspaceQ::contains(const VecQ& v) const { return is_zero(reduce(v)); }

bool SubspaceQ::contains(const SubspaceQ& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("subspace: ambient-dimension mismatch");
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row_dense(i))) return false;
  return true;
}

std::vector<std::size_t> SubspaceQ::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c)
      ++p;
    else
      out.push_back(c);
  }
  return out;
}

SubspaceQ SubspaceQ::complement() const {
  std::vector<VecQ> rows;
  for (std::size_t c : non_pivots()) {
    VecQ e(ambient_);
    e[c] = Rational(1);
    rows.push_back(std::move(e));
  }
  return SubspaceQ::span(rows, ambient_);
}

SubspaceQ sum(const SubspaceQ& a, const SubspaceQ& b) {
  if (a.ambient_ != b.ambient_)
    throw std::invalid_argument("subspace: ambient-dimension mismatch");
  SubspaceQ s(a.ambient_);
  MatrixQ m = a.basis_.vstack(b.basis_);
  s.pivots_ = rref_inplace(m);
  s.basis_ = std::move(m);
  return s;
}

SubspaceQ intersect(const SubspaceQ& a, const SubspaceQ& b) {
  if (a.ambient_ != b.ambient_)
    throw std::invalid_argument("subspace: ambient-dimension mismatch");
  // Row combinations of a's basis that also lie in b: y such that
  // (y * A) reduces to zero mod b.  Equivalently kernel of R^T where
  // R[i] = reduce_b(a_i).
  if (a.dim() == 0 || b.dim() == 0) return SubspaceQ(a.ambient_);
  MatrixQ resid(a.dim(), a.ambient_);
  for (std::size_t i = 0; i < a.dim(); ++i) resid.set_row(i, b.reduce(a.basis_.row_dense(i)));
  SubspaceQ combos = kernel(resid.transpose());
  std::vector<VecQ> rows;
  for (std::size_t i = 0; i < combos.dim(); ++i)
    rows.push_back(a.basis_.apply_left(combos.basis().row_dense(i)));
  return SubspaceQ::span(rows, a.ambient_);
}

bool SubspaceQ::grow(const VecQ& v) {
  VecQ r = reduce(v);
  if (is_zero(r)) return false;
  basis_.append_row(r);
  pivots_ = rref_inplace(basis_);
  return true;
}

SubspaceQ kernel(const MatrixQ& m) {
  auto [r, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<VecQ> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    VecQ v(m.cols());
    v[f] = Rational(1);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      const Rational& entry = r.at(i, f);
      if (!entry.is_zero()) v[piv[i]] = -entry;
    }
    rows.push_back(std::move(v));
  }
  return SubspaceQ::span(rows, m.cols());
}

}  // namespace vab
