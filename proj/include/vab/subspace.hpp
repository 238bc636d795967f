#ifndef VAB_SUBSPACE_HPP
#define VAB_SUBSPACE_HPP

#include <vector>

#include "vab/matrix.hpp"

namespace vab {

/// Subspace of Q^n held as an RREF basis (rows are basis vectors, pivot
/// columns strictly increasing, pivots equal to 1). Two SubspaceQ compare
/// equal iff they are the same subspace, since RREF is canonical.
class SubspaceQ {
public:
  SubspaceQ() : ambient_(0) {}
  explicit SubspaceQ(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static SubspaceQ span(const std::vector<VecQ>& vectors, std::size_t ambient_dim);
  static SubspaceQ row_space(const MatrixQ& m);
  static SubspaceQ full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixQ& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const VecQ& v) const;
  bool contains(const SubspaceQ& other) const;

  /// Residue of v modulo this subspace: v minus its pivot-elimination
  /// against the RREF basis. Zero iff contains(v).
  VecQ reduce(const VecQ& v) const;

  /// Deterministic complement: the standard basis vectors at the
  /// non-pivot coordinates.
  SubspaceQ complement() const;
  std::vector<std::size_t> non_pivots() const;

  friend SubspaceQ sum(const SubspaceQ& a, const SubspaceQ& b);
  friend SubspaceQ intersect(const SubspaceQ& a, const SubspaceQ& b);

  /// Adds a vector to the spanning set; returns true if the dimension grew.
  bool grow(const VecQ& v);

  friend bool operator==(const SubspaceQ& a, const SubspaceQ& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_;
  MatrixQ basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0} as a canonical SubspaceQ of Q^cols.
SubspaceQ kernel(const MatrixQ& m);

}  // namespace vab

#endif
