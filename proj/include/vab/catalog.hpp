#ifndef VAB_CATALOG_HPP
#define VAB_CATALOG_HPP

#include "vab/algebroid.hpp"
#include "vab/tca.hpp"

namespace vab {
namespace catalog {

/// A = Q e, B = Q b, all products zero except <b,b> = e.
VertexAlgebroidData heisenberg();

/// A = Q e, B = sl2 with basis {h, x, y}, bracket [h,x]=2x, [h,y]=-2y,
/// [x,y]=h; pairing = `level` times the trace form of the defining
/// representation (<h,h>=2, <x,y>=1). level = 0 gives the zero form.
VertexAlgebroidData sl2(const Rational& level);

/// A = Q[x]/(x^2), B spanned by {u, xu, dx}: the Euler current u with
/// anchor u(x) = x, the exact 1-form dx = partial(x), and lambda = <u,u>.
VertexAlgebroidData trunc_poly2(const Rational& lambda);

/// A = Q[x]/(x^3), B spanned by {u, xu, x^2 u, dx, x dx}. The A-action
/// is genuinely non-associative: x*(x*u) - x^2*u = 2 x dx, which makes
/// this the smallest shipped instance where the sign of the twisted
/// associativity axiom (va1) is observable.
VertexAlgebroidData trunc_poly3(const Rational& lambda);

/// A = Q[x]/(x^2), B = Q dx with partial(x) = dx and everything else
/// zero. Minimal instance with partial != 0.
VertexAlgebroidData kaehler_x2();

/// dim-1 character module over the Heisenberg algebroid quotient:
/// e acts as 1, b acts as lambda.
LAModule heisenberg_character(const Rational& lambda);

/// Trivial and adjoint modules over the sl2 algebroid quotient.
LAModule sl2_trivial();
LAModule sl2_adjoint();

/// sl2 bracket tensor and trace form on {h, x, y}, for from_quadratic_lie.
Tensor2 sl2_bracket();
MatrixQ sl2_trace_form();

}  // namespace catalog
}  // namespace vab

#endif
