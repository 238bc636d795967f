#ifndef VAB_LOOPLIE_HPP
#define VAB_LOOPLIE_HPP

#include <map>
#include <utility>
#include <vector>

#include "vab/subspace.hpp"
#include "vab/tca.hpp"
#include "vab/violation.hpp"

namespace vab {

/// Homogeneous element of the loop space (A (+) B) tensor Laurent
/// polynomials, in the grading deg(a t^n) = -n-1, deg(b t^n) = -n:
/// aPart is the coefficient of t^{-degree-1}, bPart of t^{-degree}.
struct RawLoopElement {
  long degree = 0;
  VecQ aPart;
  VecQ bPart;
};

/// Canonical coordinates on the quotient by the image of
/// hat_partial = partial (x) 1 + 1 (x) d/dt.  At degree m != 0 the
/// A-part folds into B via a t^{-m-1} == (1/m) partial(a) t^{-m}; at
/// degree 0 the coordinates are (A, B reduced mod partial(A)).
struct NormalLoopElement {
  long degree = 0;
  VecQ a;  // nonempty only at degree 0
  VecQ b;  // B coordinates; at degree 0 reduced into the fixed complement
};

RawLoopElement hat_partial(const Tca& c, const VecQ& a, long n);
RawLoopElement raw_loop_basis(const Tca& c, bool a_kind, std::size_t idx, long t_exp);
RawLoopElement raw_bracket(const Tca& c, const RawLoopElement& x, const RawLoopElement& y);

/// The degree-d slice of hat_partial(L(A)) inside the raw degree-d piece,
/// in concatenated (aPart, bPart) coordinates.
SubspaceQ hat_partial_subspace(const Tca& c, long degree);

/// Conditions for hat_partial(L(A)) to be a two-sided ideal:
///   a_0 partial(a') = 0, b_0 partial(a') = partial(b_0 a'),
///   b_1 partial(a') = b_0 a', (partial a)_0 a' = 0,
///   (partial a)_0 b = 0, (partial a)_1 b = -a_0 b.
ViolationReport check_ideal_conditions(const Tca& c);

/// Conditions for the quotient product to be skew:
///   a_0 b = -b_0 a, b_1 b' = b'_1 b, b_0 b' = -b'_0 b + partial(b'_1 b).
ViolationReport check_skew_conditions(const Tca& c);

/// Conditions for the quotient to satisfy Jacobi; the mixed family is
/// implied by the others, which the fuzz suite asserts separately.
ViolationReport check_jacobi_conditions(const Tca& c);

/// The same three condition sets decided by brute force on the loop
/// side: raw brackets (and the jacobiator) swept over generators with
/// t-exponents in [-exp_range, exp_range], tested for membership in
/// hat_partial(L(A)) degree by degree.
struct LoopMembershipVerdict {
  bool ideal_ok = false;
  bool skew_ok = false;
  bool jacobi_ok = false;
};
LoopMembershipVerdict loop_membership_oracle(const Tca& c, long exp_range);

/// Bracket tables of L(A (+) B)/hat_partial L(A) over the degree window
/// [-N, N], on normal-form bases:
///   degree m != 0:  b_i(-m), i < dimB
///   degree 0:       a_i(-1), i < dimA, then the complement classes
///                   c_j(0) of partial(A) in B.
/// Construction verifies that brackets of hat_partial generators vanish,
/// antisymmetry, and the Jacobi identity on every triple whose degrees,
/// pairwise sums and triple sum stay in the window; a failure throws
/// std::logic_error (impossible for a valid Tca).
class WindowedLieAlgebra {
public:
  WindowedLieAlgebra(Tca source, long window);

  const Tca& source() const { return source_; }
  long window() const { return window_; }
  std::size_t dimA() const { return source_.dim0; }
  std::size_t dimB() const { return source_.dim1; }

  std::size_t dim_at(long degree) const;
  NormalLoopElement basis_element(long degree, std::size_t idx) const;
  NormalLoopElement zero_at(long degree) const;

  /// (coefficient, basis index) decomposition of a normal form.
  std::vector<std::pair<Rational, std::size_t>> coordinates(const NormalLoopElement& x) const;

  NormalLoopElement normal_form(const RawLoopElement& x) const;
  /// Table lookup; requires |m|, |n|, |m+n| <= window.
  const NormalLoopElement& bracket(long m, std::size_t i, long n, std::size_t j) const;
  NormalLoopElement bracket_elems(const NormalLoopElement& x, const NormalLoopElement& y) const;

  const SubspaceQ& partial_image() const { return partial_image_; }
  const std::vector<std::size_t>& complement() const { return complement_; }

  static NormalLoopElement add_elems(const NormalLoopElement& x, const NormalLoopElement& y);
  static NormalLoopElement scale_elem(const NormalLoopElement& x, const Rational& c);
  static bool is_zero_elem(const NormalLoopElement& x);

private:
  void build_tables();
  void verify();

  Tca source_;
  long window_;
  SubspaceQ partial_image_;
  std::vector<std::size_t> complement_;
  std::map<std::pair<long, long>, std::vector<std::vector<NormalLoopElement>>> table_;
};

/// Degree-0 subalgebra together with the cross-check against the
/// abstract quotient: A(-1) is an abelian ideal, the complement block
/// reproduces lie_quotient's bracket and action.
struct DegreeZeroAlgebra {
  std::size_t dimA = 0;
  std::size_t dimG = 0;
  Tensor2 bracket;  // (dimA+dimG)^2 table in (a(-1), c(0)) coordinates
  QuotientLie quotient;
  ViolationReport report;
};
DegreeZeroAlgebra degree_zero_algebra(const WindowedLieAlgebra& w);

/// Kernel vectors a of partial whose a(-1) class is central; verified by
/// a bracket sweep over the window.
struct CentralElements {
  std::vector<VecQ> central;  // coordinates in A
  ViolationReport report;
};
CentralElements central_elements(const WindowedLieAlgebra& w);

/// Coefficient-wise check of the generating-function commutators: the
/// table bracket of the normal forms of u t^p, v t^q agrees with the
/// normal form of the defining raw bracket, for all generators and all
/// exponents whose degrees and sum stay in the window.
bool commutator_series_check(const WindowedLieAlgebra& w);

}  // namespace vab

#endif
