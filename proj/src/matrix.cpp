#include "vab/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vab {

namespace {
const Rational kZero;
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<VecQ>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

const Rational& MatrixQ::at(std::size_t r, std::size_t c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? kZero : it->second;
}

void MatrixQ::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix: index out of range");
  if (v.is_zero())
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void MatrixQ::add_to(std::size_t r, std::size_t c, const Rational& v) {
  if (v.is_zero()) return;
  auto it = data_[r].find(c);
  if (it == data_[r].end()) {
    data_[r][c] = v;
  } else {
    it->second += v;
    if (it->second.is_zero()) data_[r].erase(it);
  }
}

VecQ MatrixQ::row_dense(std::size_t r) const {
  VecQ v(cols_);
  for (const auto& [c, x] : data_[r]) v[c] = x;
  return v;
}

void MatrixQ::set_row(std::size_t r, const VecQ& v) {
  if (v.size() != cols_) throw std::invalid_argument("matrix: row length mismatch");
  data_[r].clear();
  for (std::size_t c = 0; c < cols_; ++c)
    if (!v[c].is_zero()) data_[r][c] = v[c];
}

void MatrixQ::append_row(const VecQ& v) {
  data_.emplace_back();
  ++rows_;
  set_row(rows_ - 1, v);
}

VecQ MatrixQ::apply(const VecQ& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix: apply size mismatch");
  VecQ y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (const auto& [c, v] : data_[r])
      if (!x[c].is_zero()) acc += v * x[c];
    y[r] = acc;
  }
  return y;
}

VecQ MatrixQ::apply_left(const VecQ& x) const {
  if (x.size() != rows_) throw std::invalid_argument("matrix: apply_left size mismatch");
  VecQ y(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r].is_zero()) continue;
    for (const auto& [c, v] : data_[r]) y[c] += x[r] * v;
  }
  return y;
}

MatrixQ MatrixQ::multiply(const MatrixQ& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix: multiply shape mismatch");
  MatrixQ out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, v] : data_[r]) {
      for (const auto& [c, w] : other.data_[k]) acc[c] += v * w;
    }
    for (auto& [c, v] : acc)
      if (!v.is_zero()) out.data_[r][c] = std::move(v);
  }
  return out;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[c][r] = v;
  return out;
}

MatrixQ MatrixQ::vstack(const MatrixQ& below) const {
  if (cols_ != below.cols_) throw std::invalid_argument("matrix: vstack width mismatch");
  MatrixQ out(rows_ + below.rows_, cols_);
  out.data_ = data_;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  return out;
}

std::size_t MatrixQ::nnz() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

std::string MatrixQ::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).str();
    os << "]\n";
  }
  return os.str();
}

std::vector<std::size_t> rref_inplace(MatrixQ& m) {
  std::vector<std::map<std::size_t, Rational>> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    if (!row.empty()) work.push_back(std::move(row));
  }

  // pivot column -> reduced row with leading 1 there.  Invariant: every
  // stored row is zero at all other pivot columns, so subtracting a
  // stored row never introduces an entry at a pivot column.
  std::map<std::size_t, std::map<std::size_t, Rational>> reduced;
  auto subtract_scaled = [](std::map<std::size_t, Rational>& row, const Rational& c,
                            const std::map<std::size_t, Rational>& src) {
    for (const auto& [col, v] : src) {
      auto it = row.find(col);
      if (it == row.end()) {
        Rational nv = -(c * v);
        if (!nv.is_zero()) row[col] = nv;
      } else {
        it->second -= c * v;
        if (it->second.is_zero()) row.erase(it);
      }
    }
  };
  for (auto& row : work) {
    // fully reduce against existing pivots (ascending column scan)
    for (auto it = row.begin(); it != row.end();) {
      auto hit = reduced.find(it->first);
      if (hit == reduced.end()) {
        ++it;
        continue;
      }
      Rational c = it->second;
      subtract_scaled(row, c, hit->second);
      it = row.upper_bound(hit->first);
    }
    if (row.empty()) continue;
    auto lead = row.begin()->first;
    Rational inv = row.begin()->second.inverse();
    if (!inv.is_one())
      for (auto& [col, v] : row) v *= inv;
    // back-substitute the new pivot into earlier rows
    for (auto& [pc, prow] : reduced) {
      auto it = prow.find(lead);
      if (it == prow.end()) continue;
      Rational c = it->second;
      subtract_scaled(prow, c, row);
    }
    reduced[lead] = std::move(row);
  }

  MatrixQ out(reduced.size(), m.cols());
  std::vector<std::size_t> pivots;
  pivots.reserve(reduced.size());
  std::size_t r = 0;
  for (auto& [pc, row] : reduced) {
    pivots.push_back(pc);
    for (const auto& [col, v] : row) out.set(r, col, v);
    ++r;
  }
  m = std::move(out);
  return pivots;
}

std::size_t rank(const MatrixQ& m) {
  MatrixQ r = m;
  return rref_inplace(r).size();
}

}  // namespace vab
