#include "vab/catalog.hpp"

namespace vab {
namespace catalog {

namespace {

CommAlgebra truncated_poly(std::size_t order) {
  // Q[x]/(x^order), basis 1, x, ..., x^{order-1}
  CommAlgebra A;
  A.dim = order;
  A.mult = zero_tensor(order, order, order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      if (i + j < order) A.mult[i][j][i + j] = Rational(1);
  A.unit = VecQ(order);
  A.unit[0] = Rational(1);
  return A;
}

void scalar_unit_action(VertexAlgebroidData& v) {
  for (std::size_t j = 0; j < v.dimB; ++j) v.act[0][j][j] = Rational(1);
}

}  // namespace

VertexAlgebroidData heisenberg() {
  VertexAlgebroidData v = VertexAlgebroidData::zero(CommAlgebra::rational_line(), 1);
  scalar_unit_action(v);
  v.pair[0][0][0] = Rational(1);
  return v;
}

Tensor2 sl2_bracket() {
  // basis order: h=0, x=1, y=2
  Tensor2 br = zero_tensor(3, 3, 3);
  br[0][1][1] = Rational(2);   // [h,x] = 2x
  br[1][0][1] = Rational(-2);
  br[0][2][2] = Rational(-2);  // [h,y] = -2y
  br[2][0][2] = Rational(2);
  br[1][2][0] = Rational(1);   // [x,y] = h
  br[2][1][0] = Rational(-1);
  return br;
}

MatrixQ sl2_trace_form() {
  MatrixQ f(3, 3);
  f.set(0, 0, Rational(2));
  f.set(1, 2, Rational(1));
  f.set(2, 1, Rational(1));
  return f;
}

VertexAlgebroidData sl2(const Rational& level) {
  VertexAlgebroidData v = VertexAlgebroidData::zero(CommAlgebra::rational_line(), 3);
  scalar_unit_action(v);
  v.bracket = sl2_bracket();
  MatrixQ f = sl2_trace_form();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!f.at(i, j).is_zero()) v.pair[i][j][0] = level * f.at(i, j);
  return v;
}

VertexAlgebroidData trunc_poly2(const Rational& lambda) {
  // A basis: e=0, x=1.  B basis: u=0, xu=1, dx=2.
  VertexAlgebroidData v = VertexAlgebroidData::zero(truncated_poly(2), 3);
  scalar_unit_action(v);
  // x * u = xu; x * xu = 0; x * dx = x dx = 0 in Omega(Q[x]/(x^2))
  v.act[1][0][1] = Rational(1);
  // partial(e) = 0, partial(x) = dx
  v.partial.set(2, 1, Rational(1));
  // anchor: pi(u) = x d/dx, pi(xu) = x^2 d/dx = 0, pi(dx) = 0
  v.pi[0][1][1] = Rational(1);
  // pairing: <u,u> = lambda e, <u,xu> = (lambda-1) x, <u,dx> = x
  v.pair[0][0][0] = lambda;
  v.pair[0][1][1] = lambda - Rational(1);
  v.pair[1][0][1] = lambda - Rational(1);
  v.pair[0][2][1] = Rational(1);
  v.pair[2][0][1] = Rational(1);
  // bracket: [u,xu] = xu, [xu,u] = -xu + (lambda-1) dx, [u,dx] = dx
  v.bracket[0][1][1] = Rational(1);
  v.bracket[1][0][1] = Rational(-1);
  v.bracket[1][0][2] = lambda - Rational(1);
  v.bracket[0][2][2] = Rational(1);
  return v;
}

VertexAlgebroidData trunc_poly3(const Rational& lambda) {
  // A basis: e=0, x=1, x^2=2.  B basis: u=0, xu=1, x^2u=2, dx=3, xdx=4.
  VertexAlgebroidData v = VertexAlgebroidData::zero(truncated_poly(3), 5);
  scalar_unit_action(v);
  const Rational one(1), two(2);

  // A-action. x * u = xu, x * xu = x^2u, x * dx = xdx; the twisted
  // associativity makes x^2 * u = x(xu) - 2 xdx.
  v.act[1][0][1] = one;
  v.act[1][1][2] = one;
  v.act[1][3][4] = one;
  v.act[2][0][2] = one;
  v.act[2][0][4] = -two;

  // partial: partial(x) = dx, partial(x^2) = 2 xdx
  v.partial.set(3, 1, one);
  v.partial.set(4, 2, two);

  // anchor: pi(u) = x d/dx (Euler), pi(xu) = x^2 d/dx
  v.pi[0][1][1] = one;
  v.pi[0][2][2] = two;
  v.pi[1][1][2] = one;

  // pairing
  v.pair[0][0][0] = lambda;                       // <u,u> = lambda e
  v.pair[0][1][1] = lambda - one;                 // <u,xu> = (lambda-1) x
  v.pair[1][0][1] = lambda - one;
  v.pair[0][2][2] = lambda - two;                 // <u,x^2u> = (lambda-2) x^2
  v.pair[2][0][2] = lambda - two;
  v.pair[1][1][2] = lambda - Rational(3);         // <xu,xu> = (lambda-3) x^2
  v.pair[0][3][1] = one;                          // <u,dx> = x
  v.pair[3][0][1] = one;
  v.pair[0][4][2] = one;                          // <u,xdx> = x^2
  v.pair[4][0][2] = one;
  v.pair[1][3][2] = one;                          // <xu,dx> = x^2
  v.pair[3][1][2] = one;

  // bracket
  v.bracket[0][1][1] = one;                       // [u,xu] = xu
  v.bracket[1][0][1] = -one;                      // [xu,u] = -xu + (lambda-1) dx
  v.bracket[1][0][3] = lambda - one;
  v.bracket[0][2][2] = two;                       // [u,x^2u] = 2 x^2u
  v.bracket[2][0][2] = -two;                      // [x^2u,u] = -2x^2u + 2(lambda-2) xdx
  v.bracket[2][0][4] = two * (lambda - two);
  v.bracket[1][1][4] = lambda - Rational(3);      // [xu,xu] = (lambda-3) xdx
  v.bracket[0][3][3] = one;                       // [u,dx] = dx
  v.bracket[0][4][4] = two;                       // [u,xdx] = 2 xdx
  v.bracket[1][3][4] = two;                       // [xu,dx] = 2 xdx
  return v;
}

VertexAlgebroidData kaehler_x2() {
  VertexAlgebroidData v = VertexAlgebroidData::zero(truncated_poly(2), 1);
  scalar_unit_action(v);
  // x * dx = 0, partial(x) = dx, everything else zero
  v.partial.set(0, 1, Rational(1));
  return v;
}

LAModule heisenberg_character(const Rational& lambda) {
  LAModule m;
  m.dimW = 1;
  m.aAct.push_back(MatrixQ::identity(1));
  MatrixQ b(1, 1);
  b.set(0, 0, lambda);
  m.gAct.push_back(b);
  return m;
}

LAModule sl2_trivial() {
  LAModule m;
  m.dimW = 1;
  m.aAct.push_back(MatrixQ::identity(1));
  for (int i = 0; i < 3; ++i) m.gAct.push_back(MatrixQ(1, 1));
  return m;
}

LAModule sl2_adjoint() {
  LAModule m;
  m.dimW = 3;
  m.aAct.push_back(MatrixQ::identity(3));
  Tensor2 br = sl2_bracket();
  for (std::size_t i = 0; i < 3; ++i) {
    MatrixQ op(3, 3);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        if (!br[i][j][k].is_zero()) op.set(k, j, br[i][j][k]);
    m.gAct.push_back(op);
  }
  return m;
}

}  // namespace catalog
}  // namespace vab
