#include "rbl/fixtures.hpp"

namespace rbl::fixtures {

LieAlgebra abelian2() { return LieAlgebra(2); }

LieAlgebra aff1() {
  return LieAlgebra::from_triples(2, {{0, 1, 1, Rational(1)}});
}

LieAlgebra sl2() {
  return LieAlgebra::from_triples(3, {{0, 1, 1, Rational(2)},
                                      {0, 2, 2, Rational(-2)},
                                      {1, 2, 0, Rational(1)}});
}

AssociativeAlgebra assoc2() {
  return AssociativeAlgebra::from_triples(2, {{0, 0, 0, Rational(1)},
                                              {0, 1, 1, Rational(1)}});
}

AssociativeAlgebra dual_numbers() {
  return AssociativeAlgebra::from_triples(2, {{0, 0, 0, Rational(1)},
                                              {0, 1, 1, Rational(1)},
                                              {1, 0, 1, Rational(1)}});
}

Matrix split_diag(std::size_t dim, const Rational& weight) {
  Matrix t(dim, dim);
  t(0, 0) = -weight;
  return t;
}

WeightedRBLie rb_aff1(const Rational& weight) {
  return {aff1(), weight, split_diag(2, weight)};
}

RBLieRepresentation rb_aff1_adjoint(const Rational& weight) {
  return {adjoint_rep(aff1()), split_diag(2, weight)};
}

WeightedRBLie rb_identity(const LieAlgebra& g) {
  return {g, Rational(-1), Matrix::identity(g.dim())};
}

}  // namespace rbl::fixtures
