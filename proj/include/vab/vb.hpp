#ifndef VAB_VB_HPP
#define VAB_VB_HPP

#include <vector>

#include "vab/algebroid.hpp"
#include "vab/pbw.hpp"

namespace vab {

/// Symbolic generator of the ideal-defining space E:
///   UnitMinusVacuum: e - 1
///   QuadAA:          a_i(-1)a_j - (a_i a_j)      (degree 0)
///   QuadAB:          a_i(-1)b_j - (a_i b_j)      (degree 1)
struct EGen {
  enum Kind { UnitMinusVacuum, QuadAA, QuadAB };
  Kind kind = UnitMinusVacuum;
  std::size_t i = 0;
  std::size_t j = 0;

  long degree() const { return kind == QuadAB ? 1 : 0; }
};

std::vector<EGen> e_generator_list(const VertexAlgebroidData& alg);

/// Coefficient action of the n-th mode of an E generator on any graded
/// module over the same loop algebra (the quadratic modes expand through
/// the iterate formula; e - 1 through the unit's loop modes).
VecQ e_gen_mode(const VertexAlgebroidData& alg, const GradedModule& g, const EGen& gen, long n,
                long from, const VecQ& w);

/// E-generator vectors realized inside V_L, with the closure facts:
/// v(n)E c E for n >= 0, D E0 c E1, B(-1)E0 c A(-1)E1 + E1.
struct EGenerators {
  std::vector<VecQ> e0;  // in piece(0)
  std::vector<VecQ> e1;  // in piece(1)
  SubspaceQ span0;
  SubspaceQ span1;
  ViolationReport report;
};

/// Requires an A-weight cap of at least 3 on vl so the closure sweeps
/// have headroom.
EGenerators build_E(const VertexAlgebroidData& alg, const GradedModule& vl);

/// Degreewise span of U(L^{<0}) C[D] E inside the internally-capped V_L:
/// seeds D^j c, closed under the raising generators (and a(-1) wherever
/// weight headroom remains). Coordinates are the full internal pieces.
std::vector<SubspaceQ> build_IB_spans(const GradedModule& vl, const EGenerators& eg, long n_max);

/// The slice of the ideal span visible below A-weight W, in the
/// coordinates of the weight-W prefix of piece(n). stabilized means the
/// visible quotient dimension did not move from cap W-1 to W.
struct IdealSlice {
  long degree = 0;
  std::size_t weight_cap = 0;
  SubspaceQ subspace;
  bool stabilized = false;
};

IdealSlice build_IB_slice(const GradedModule& vl, const std::vector<SubspaceQ>& spans, long n,
                          std::size_t W);

/// Exactness at the bottom: slice(0) (+) A = piece(0) and
/// slice(1) (+) B = piece(1), inside the weight-W prefix.
ViolationReport check_degree01_decomposition(const VertexAlgebroidData& alg, const GradedModule& vl,
                                             const std::vector<SubspaceQ>& spans, std::size_t W);

/// True iff every capped basis monomial lies in span(B-only monomials) +
/// slice(n, W).
bool spanning_check(const GradedModule& vl, const std::vector<SubspaceQ>& spans, long n,
                    std::size_t W);

struct VbDimRow {
  long degree = 0;
  std::size_t dim = 0;         // dim piece_{<=W}(n) - dim slice(n, W)
  bool stabilized = false;
  std::size_t upper_bound = 0; // B-only spanning count
};

std::vector<VbDimRow> vb_graded_dims(const GradedModule& vl, const std::vector<SubspaceQ>& spans,
                                     long n_max, std::size_t W);

/// Convenience driver: builds the loop algebra at the given window, V_L
/// at internal cap W + margin + 2, the E space and the ideal spans.
struct VbTower {
  WindowedLieAlgebra lie;
  GradedModule vl;
  EGenerators eg;
  std::vector<SubspaceQ> spans;
  std::size_t weight_cap;
  std::size_t margin;

  VbTower(const VertexAlgebroidData& alg, long window, long n_max, std::size_t W,
          std::size_t margin);
  // vl keeps a pointer into lie
  VbTower(const VbTower&) = delete;
  VbTower& operator=(const VbTower&) = delete;
};

}  // namespace vab

#endif
