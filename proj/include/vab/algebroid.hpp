#ifndef VAB_ALGEBROID_HPP
#define VAB_ALGEBROID_HPP

#include <vector>

#include "vab/matrix.hpp"
#include "vab/subspace.hpp"
#include "vab/tca.hpp"
#include "vab/violation.hpp"

namespace vab {

/// Unital commutative associative algebra given by structure constants.
struct CommAlgebra {
  std::size_t dim = 0;
  Tensor2 mult;  // A x A -> A
  VecQ unit;

  static CommAlgebra rational_line();  // Q e

  VecQ multiply(const VecQ& x, const VecQ& y) const;
  VecQ basis(std::size_t i) const;
};

ViolationReport check_comm_algebra(const CommAlgebra& a);

/// Which sign the twisted associativity axiom (the first displayed
/// identity below) is evaluated with.  `Paper` is the convention this
/// library treats as correct; `Br12` negates the right-hand side and
/// exists so the regression fixture can demonstrate that the two
/// conventions genuinely differ on a valid instance.
enum class SignConvention { Paper, Br12 };

/// Vertex algebroid over A: a Leibniz algebra B with a unital
/// (non-associative) A-action, an anchor pi into derivations of A, a
/// symmetric A-valued pairing and partial: A -> B, subject to the nine
/// coupling identities checked by check_vertex_algebroid:
///   va1: a*(a'*v) - (aa')*v = pi(v)(a)*partial(a') + pi(v)(a')*partial(a)
///   va2: [u, a*v] = pi(u)(a)*v + a*[u,v]
///   va3: [u,v] + [v,u] = partial(<u,v>)
///   va4: pi(a*v) = a pi(v)
///   va5: <a*u, v> = a<u,v> - pi(u)(pi(v)(a))
///   va6: pi(v)(<v1,v2>) = <[v,v1],v2> + <v1,[v,v2]>
///   va7: partial(aa') = a*partial(a') + a'*partial(a)
///   va8: [v, partial(a)] = partial(pi(v)(a))
///   va9: <v, partial(a)> = pi(v)(a)
struct VertexAlgebroidData {
  CommAlgebra A;
  std::size_t dimB = 0;
  Tensor2 act;      // A x B -> B  : a * v
  Tensor2 bracket;  // B x B -> B  : [u, v]
  Tensor2 pi;       // B x A -> A  : pi(u)(a)
  Tensor2 pair;     // B x B -> A  : <u, v>
  MatrixQ partial;  // dimB x dimA, column j = partial(a_j)

  static VertexAlgebroidData zero(CommAlgebra A, std::size_t dimB);

  VecQ act_of(const VecQ& a, const VecQ& v) const;
  VecQ bracket_of(const VecQ& u, const VecQ& v) const;
  VecQ pi_of(const VecQ& u, const VecQ& a) const;
  VecQ pair_of(const VecQ& u, const VecQ& v) const;
  VecQ partial_of(const VecQ& a) const;
  VecQ basisB(std::size_t i) const;
};

ViolationReport check_vertex_algebroid(const VertexAlgebroidData& v,
                                       SignConvention sign = SignConvention::Paper);

/// Transcribes a valid vertex algebroid into the two-graded structure on
/// A (+) B, re-verifying the six supplementary identities that couple
/// the A-action to the products. Throws std::invalid_argument when one
/// fails (the input was not a valid algebroid).
Tca to_tca(const VertexAlgebroidData& v);

/// Lie algebroid: Lie algebra g with an A-module structure and an anchor
/// acting on A by derivations, with [u,av] = a[u,v] + (anchor(u)a)v and
/// a(anchor(u)b) = anchor(a*u)(b).
struct LieAlgebroidData {
  CommAlgebra A;
  std::size_t dimG = 0;
  Tensor2 bracket;  // g x g -> g
  Tensor2 act;      // A x g -> g
  Tensor2 anchor;   // g x A -> A

  VecQ bracket_of(const VecQ& u, const VecQ& v) const;
  VecQ act_of(const VecQ& a, const VecQ& u) const;
  VecQ anchor_of(const VecQ& u, const VecQ& a) const;
};

ViolationReport check_lie_algebroid(const LieAlgebroidData& g);

/// B / A.partial(A) with the pivot-rule complement. `projection` maps
/// B-coordinates to quotient coordinates, `embedding` picks the standard
/// representatives.
struct AlgebroidQuotient {
  LieAlgebroidData lie;
  SubspaceQ a_partial_a;  // the subspace A*partial(A) of B
  MatrixQ projection;     // dimG x dimB
  MatrixQ embedding;      // dimB x dimG
  ViolationReport report;
};

AlgebroidQuotient lie_algebroid_quotient(const VertexAlgebroidData& v);

/// Finite-dimensional module for a Lie algebroid: W with commuting-in-
/// the-right-way actions of A and g.
struct LAModule {
  std::size_t dimW = 0;
  std::vector<MatrixQ> aAct;  // per A basis element
  std::vector<MatrixQ> gAct;  // per g basis element
};

/// The five module relations: unit, A-associativity, g-representation,
/// A-action compatibility psi(a u) = psi(a) psi(u), and the mixed
/// commutator [psi(u), psi(a)] = psi(u a).
ViolationReport check_la_module(const LieAlgebroidData& g, const LAModule& m);

/// True iff no proper nonzero subspace invariant under all aAct and gAct
/// operators is found by closing the cyclic subspaces of a deterministic
/// probe set (basis vectors and pairwise sums/differences).
bool simple_la_modules_check(const LieAlgebroidData& g, const LAModule& m);

/// An invariant proper nonzero subspace if one is found by the probe
/// closure, else the zero subspace.
SubspaceQ invariant_subspace_witness(const LAModule& m);

LAModule direct_sum(const LAModule& m1, const LAModule& m2);

VertexAlgebroidData algebroid_direct_sum(const VertexAlgebroidData& v1,
                                         const VertexAlgebroidData& v2);

}  // namespace vab

#endif
