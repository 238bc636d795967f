#ifndef VAB_PBW_HPP
#define VAB_PBW_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vab/looplie.hpp"
#include "vab/matrix.hpp"

namespace vab {

/// Raised by the action machinery when a result would leave the stored
/// degree window or exceed the A-weight cap.
struct WindowExceeded : std::runtime_error {
  long degree;
  explicit WindowExceeded(long d)
      : std::runtime_error("pbw: degree " + std::to_string(d) + " outside the stored window"),
        degree(d) {}
};
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("pbw: A-weight cap " + std::to_string(cap) + " exceeded") {}
};

/// One PBW factor: a(-1) (a_kind, exp always -1) or b(-n), n >= 1.
/// Module-degree contribution: 0 for a(-1), n for b(-n).
struct PbwFactor {
  bool a_kind = false;
  std::size_t idx = 0;
  long exp = -1;

  long contribution() const { return a_kind ? 0 : -exp; }
  friend bool operator==(const PbwFactor&, const PbwFactor&) = default;
};

/// Canonical left-to-right rank: largest |exp| leftmost, A kind before
/// B kind on ties, index ascending.
int factor_rank_cmp(const PbwFactor& f, const PbwFactor& g);

/// Ordered product of PBW factors applied to a base-module basis vector.
struct PbwMonomial {
  std::vector<PbwFactor> factors;
  std::size_t tail = 0;

  long degree() const;
  std::size_t a_weight() const;
  bool sorted() const;
  friend bool operator==(const PbwMonomial&, const PbwMonomial&) = default;
};

/// Piece order: A-weight ascending first (so weight-capped sub-bases are
/// prefixes), then factor sequence, then tail.
bool monomial_less(const PbwMonomial& m1, const PbwMonomial& m2);

/// Degree-0 actions that define the base module of an induction: a(-1)
/// acts by aAct, b(0) by bAct (which must kill partial(A)); every
/// strictly lowering generator acts as zero.
struct BaseActions {
  std::size_t dim = 1;
  std::vector<MatrixQ> aAct;  // per A basis index
  std::vector<MatrixQ> bAct;  // per B basis index
};

/// N-graded module with explicit PBW monomial bases per degree and
/// generator actions computed by commutation against the windowed
/// bracket table.
///
/// Two shapes are supported:
///  - V_L: trivial one-dimensional base, a(-1) allowed as a PBW factor
///    with at most `a_cap` occurrences per monomial (the pieces are
///    infinite-dimensional without the cap; the cap is explicit and
///    surfaced, never silent);
///  - M(U): base given by BaseActions, B-type factors only.
class GradedModule {
public:
  static GradedModule build_VL(const WindowedLieAlgebra& w, long max_degree, std::size_t a_cap);
  static GradedModule induce(const WindowedLieAlgebra& w, BaseActions base, long max_degree);

  const WindowedLieAlgebra& lie() const { return *lie_; }
  long max_degree() const { return max_degree_; }
  bool has_a_factors() const { return a_factors_; }
  std::size_t a_cap() const { return a_cap_; }
  std::size_t base_dim() const { return base_.dim; }

  const std::vector<PbwMonomial>& basis(long degree) const;
  std::size_t dim(long degree) const { return basis(degree).size(); }
  std::size_t index_of(long degree, const PbwMonomial& m) const;
  /// Number of basis monomials of the given degree with A-weight <= cap.
  std::size_t dim_capped(long degree, std::size_t cap) const;
  /// Count of B-only monomials (the spanning-set size of the quotient).
  std::size_t b_only_count(long degree) const;

  /// Action matrix of the normal-form basis generator (gdeg, gidx) from
  /// piece(from) to piece(from + gdeg); cached after first computation.
  /// On the capped vacuum shape the matrix of a non-raising generator
  /// covers only the columns with A-weight headroom (action_col_limit).
  const MatrixQ& action(long gdeg, std::size_t gidx, long from) const;
  std::size_t action_col_limit(long gdeg, long from) const;
  VecQ act(long gdeg, std::size_t gidx, long from, const VecQ& v) const;
  VecQ act_elem(const NormalLoopElement& g, long from, const VecQ& v) const;
  /// Action of the loop generator u t^p (u a basis vector of A or B).
  VecQ act_loop(bool a_kind, std::size_t idx, long p, long from, const VecQ& v) const;
  /// Operator degree of u t^p as it acts on the module.
  static long loop_op_degree(bool a_kind, long p) { return a_kind ? -p - 1 : -p; }

  /// v at piece(from) -> piece(from+1), via [D, u(m)] = -m u(m-1) and
  /// D(vacuum) = 0. Only defined on the V_L shape.
  VecQ d_operator(long from, const VecQ& v) const;

  /// Coefficient action of the quadratic vector u(-1)v (u, v basis
  /// elements of A or B): (u(-1)v)_n w = sum_i ( u(-1-i) v(n+i) w
  /// + v(n-1-i) u(i) w ).
  VecQ iterate_action(bool u_a, std::size_t ui, bool v_a, std::size_t vi, long n, long from,
                      const VecQ& w) const;

  /// a |-> a(-1)1 at degree 0 (V_L only), b |-> b(-1)1 at degree 1.
  VecQ embed_A(std::size_t idx) const;
  VecQ embed_B(std::size_t idx) const;

  /// act(x)act(y) - act(y)act(x) = act([x,y]) for every pair of stored
  /// normal-form basis generators, on every stored piece.
  bool representation_property_check() const;
  /// Same identity swept over loop generators u t^p, v t^q; the right
  /// side is the normal form of the defining raw bracket, which is the
  /// binomial commutator expansion written out.
  bool commutator_consistency() const;
  /// [D, v(n)] = -n v(n-1) as matrices on every stored piece (V_L only).
  bool d_bracket_check() const;
  /// Columns the consistency sweeps may compose two operators on.
  std::size_t sweep_col_limit(long from) const;

private:
  GradedModule() = default;
  void enumerate_pieces();
  std::map<PbwMonomial, Rational, bool (*)(const PbwMonomial&, const PbwMonomial&)> new_accum()
      const;
  void apply_gen(long gdeg, std::size_t gidx, const PbwMonomial& mono, const Rational& coeff,
                 std::map<PbwMonomial, Rational, bool (*)(const PbwMonomial&, const PbwMonomial&)>&
                     out) const;
  void tail_action(long gdeg, std::size_t gidx, std::size_t tail, const Rational& coeff,
                   std::map<PbwMonomial, Rational, bool (*)(const PbwMonomial&, const PbwMonomial&)>&
                       out) const;

  const WindowedLieAlgebra* lie_ = nullptr;
  long max_degree_ = 0;
  bool a_factors_ = false;
  std::size_t a_cap_ = 0;
  BaseActions base_;
  std::vector<std::vector<PbwMonomial>> pieces_;
  std::vector<std::map<PbwMonomial, std::size_t, bool (*)(const PbwMonomial&, const PbwMonomial&)>>
      index_;
  mutable std::map<std::tuple<long, std::size_t, long>, MatrixQ> action_cache_;
};

}  // namespace vab

#endif
