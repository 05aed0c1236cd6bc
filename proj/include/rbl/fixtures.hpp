#ifndef RBL_FIXTURES_HPP
#define RBL_FIXTURES_HPP

#include "rbl/rota_baxter.hpp"

namespace rbl::fixtures {

/// Abelian Lie algebra of dimension 2.
LieAlgebra abelian2();

/// aff(1): [e0, e1] = e1.
LieAlgebra aff1();

/// sl2 in the (h, e, f) basis: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();

/// Dimension-2 associative algebra: e.e = e, e.f = f, f.e = f.f = 0.
/// Its skew-symmetrization is aff(1).
AssociativeAlgebra assoc2();

/// k[x]/(x^2) in the basis (1, x).
AssociativeAlgebra dual_numbers();

/// diag(-weight, 0, ..., 0) - the splitting operator of the span of e0.
Matrix split_diag(std::size_t dim, const Rational& weight);

/// (g, weight, diag(-weight,0,...)) - valid for aff1/abelian2/assoc2.
WeightedRBLie rb_aff1(const Rational& weight);
RBLieRepresentation rb_aff1_adjoint(const Rational& weight);

/// Every Lie algebra with T = id is Rota-Baxter at weight -1.
WeightedRBLie rb_identity(const LieAlgebra& g);

}  // namespace rbl::fixtures

#endif
