#ifndef VAB_TCA_HPP
#define VAB_TCA_HPP

#include <string>
#include <vector>

#include "vab/matrix.hpp"
#include "vab/subspace.hpp"
#include "vab/violation.hpp"

namespace vab {

/// Tensor indexed by two basis positions with vector values.
using Tensor2 = std::vector<std::vector<VecQ>>;

Tensor2 zero_tensor(std::size_t n1, std::size_t n2, std::size_t out_dim);

/// Element of C = C0 (+) C1 in basis coordinates.
struct TcaElement {
  VecQ a;  // C0 part
  VecQ b;  // C1 part
};

/// Structure constants of a two-graded algebra C0 (+) C1 with a map
/// partial: C0 -> C1 and products u_0 v, u_1 v of degree -1 and -2.
/// The degree rule forces every product of two C0 elements, and every
/// 1-product with a C0 factor, to vanish; those tensors are not stored.
struct Tca {
  std::size_t dim0 = 0;
  std::size_t dim1 = 0;
  MatrixQ partial;  // dim1 x dim0, column j = partial(a_j)
  Tensor2 t0_ab;    // C0 x C1 -> C0 : a_0 u
  Tensor2 t0_ba;    // C1 x C0 -> C0 : u_0 a
  Tensor2 t0_bb;    // C1 x C1 -> C1 : u_0 v
  Tensor2 t1_bb;    // C1 x C1 -> C0 : u_1 v

  static Tca zero(std::size_t dim0, std::size_t dim1);

  TcaElement zero_element() const { return {VecQ(dim0), VecQ(dim1)}; }
  TcaElement basis0(std::size_t i) const;
  TcaElement basis1(std::size_t i) const;

  VecQ partial_apply(const VecQ& a) const;  // in C1
  /// x_0 y with full bilinear extension across both grades.
  TcaElement prod0(const TcaElement& x, const TcaElement& y) const;
  /// x_1 y (only the C1 x C1 component survives the grading).
  TcaElement prod1(const TcaElement& x, const TcaElement& y) const;
  TcaElement prod(int i, const TcaElement& x, const TcaElement& y) const;

  bool dims_consistent() const;
};

std::string element_str(const TcaElement& e);

/// Full axiom sweep: derivation, commutativity, and associativity over
/// every basis triple and both products. Empty report iff valid.
ViolationReport check_tca(const Tca& c);

/// Reduced sweep: first two derivation relations, commutativity, and
/// associativity only for all-C1 triples (both products) and
/// (C0,C1,C1) triples with the 0-product. Agrees with check_tca on
/// validity; the agreement itself is covered by the fuzz suite.
ViolationReport check_tca_reduced(const Tca& c);

/// The Leibniz-algebra shadow of a valid Tca: bracket on C1, C1-action
/// on C0, and the symmetric pairing, together with the verification of
/// the five structure properties and their companion relations.
struct LeibnizDecomposition {
  Tensor2 bracket;  // C1 x C1 -> C1
  Tensor2 action;   // C1 x C0 -> C0
  Tensor2 pairing;  // C1 x C1 -> C0
  ViolationReport report;
};

LeibnizDecomposition decompose_leibniz(const Tca& c);

/// Plain Lie algebra with a module action on a fixed space.
struct QuotientLie {
  std::size_t dim = 0;        // dim of C1/partial(C0)
  std::size_t dim_module = 0; // dim of C0
  Tensor2 bracket;            // quotient x quotient -> quotient
  Tensor2 action;             // quotient x C0 -> C0
  SubspaceQ partial_image;    // partial(C0) inside C1
  /// Indices of the complement coordinates (non-pivot rule) in C1.
  std::vector<std::size_t> complement_coords;
  /// dim x dim1 matrix expressing the reduction C1 -> quotient coords.
  MatrixQ projection;
  /// dim1 x dim matrix embedding quotient basis vectors back into C1.
  MatrixQ embedding;
  ViolationReport report;  // well-definedness, antisymmetry, Jacobi
};

QuotientLie lie_quotient(const Tca& c);

/// C0 = Q, C1 = g, partial = 0, u_0 v = [u,v], u_1 v = <u,v> e.
/// Throws std::invalid_argument if the bracket is not Lie or the form
/// is not symmetric invariant.
Tca from_quadratic_lie(const Tensor2& bracket, const MatrixQ& form);

Tca direct_sum(const Tca& c1, const Tca& c2);

}  // namespace vab

#endif
