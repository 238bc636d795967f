#ifndef VAB_MATRIX_HPP
#define VAB_MATRIX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vab/rational.hpp"

namespace vab {

/// Sparse rational matrix. Rows are ordered column->value maps; zero
/// entries are never stored.
class MatrixQ {
public:
  MatrixQ() : rows_(0), cols_(0) {}
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_rows(const std::vector<VecQ>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add_to(std::size_t r, std::size_t c, const Rational& v);

  const std::map<std::size_t, Rational>& row(std::size_t r) const { return data_[r]; }

  VecQ row_dense(std::size_t r) const;
  void set_row(std::size_t r, const VecQ& v);
  void append_row(const VecQ& v);

  /// Matrix * column vector.
  VecQ apply(const VecQ& x) const;
  /// Row vector * matrix.
  VecQ apply_left(const VecQ& x) const;

  MatrixQ multiply(const MatrixQ& other) const;
  MatrixQ transpose() const;
  MatrixQ vstack(const MatrixQ& below) const;

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::size_t nnz() const;
  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<std::map<std::size_t, Rational>> data_;
};

/// In-place reduced row echelon form. Returns the pivot columns in
/// increasing order. Deterministic: pivots are the leftmost nonzero
/// columns, selected in row-scan order; pivot entries normalized to 1;
/// zero rows dropped; rows sorted by pivot column.
std::vector<std::size_t> rref_inplace(MatrixQ& m);

inline std::pair<MatrixQ, std::vector<std::size_t>> rref(const MatrixQ& m) {
  MatrixQ r = m;
  auto piv = rref_inplace(r);
  return {std::move(r), std::move(piv)};
}

std::size_t rank(const MatrixQ& m);

}  // namespace vab

#endif
