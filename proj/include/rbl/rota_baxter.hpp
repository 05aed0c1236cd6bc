#ifndef RBL_ROTA_BAXTER_HPP
#define RBL_ROTA_BAXTER_HPP

#include <optional>

#include "rbl/algebra.hpp"

namespace rbl {

/// Lie algebra with a weighted Rota-Baxter operator:
/// [Tx, Ty] = T([Tx,y] + [x,Ty] + weight.[x,y]).
struct WeightedRBLie {
  LieAlgebra g;
  Rational weight;
  Matrix T;
};

/// Representation (V, rho) together with an operator on V satisfying
/// rho(Tx)(Cu) = C(rho(Tx)u + rho(x)Cu + weight.rho(x)u).
struct RBLieRepresentation {
  LieRepresentation rep;
  Matrix calT;
};

struct WeightedRBAssoc {
  AssociativeAlgebra a;
  Rational weight;
  Matrix R;
};

struct RBBimodule {
  Bimodule bim;
  Matrix calR;
};

Certificate check_rb_lie(const LieAlgebra& g, const Rational& weight,
                         const Matrix& T);
inline Certificate check_rb_lie(const WeightedRBLie& rb) {
  return check_rb_lie(rb.g, rb.weight, rb.T);
}

Certificate check_rb_rep(const WeightedRBLie& rb, const LieRepresentation& rep,
                         const Matrix& calT);
inline Certificate check_rb_rep(const WeightedRBLie& rb,
                                const RBLieRepresentation& r) {
  return check_rb_rep(rb, r.rep, r.calT);
}

/// (g, -weight.id - T); applying twice gives back the original operator.
WeightedRBLie dual_operator(const WeightedRBLie& rb);
RBLieRepresentation dual_representation(const WeightedRBLie& rb,
                                        const RBLieRepresentation& r);

/// (g, mu.T) at weight mu*lambda.
WeightedRBLie scale_operator(const WeightedRBLie& rb, const Rational& mu);

/// (g, psi^-1 T psi); psi must be an invertible Lie automorphism.
WeightedRBLie conjugate_operator(const WeightedRBLie& rb, const Matrix& psi);

/// Basis-index blocks presenting g as a direct sum of subalgebras. With an
/// empty middle block the operator is 0 on `minus` and -weight.id on `plus`;
/// otherwise the middle block carries the supplied operator and the outer
/// blocks must be stable under it.
struct SplitSpec {
  std::vector<std::size_t> minus;
  std::vector<std::size_t> zero;
  std::vector<std::size_t> plus;
  std::optional<Matrix> T0;  // operator on the middle block, |zero| x |zero|
};
WeightedRBLie splitting_operator(const LieAlgebra& g, const Rational& weight,
                                 const SplitSpec& split);

/// phi must be a Lie homomorphism with phi.T = T'.phi; weights must agree.
Certificate morphism_check(const WeightedRBLie& rb, const WeightedRBLie& rb2,
                           const Matrix& phi);

/// The induced Lie algebra g_T with [x,y]_T = [Tx,y] + [x,Ty] + weight.[x,y].
LieAlgebra deformed_bracket(const WeightedRBLie& rb);

/// rho_bar(x)u = rho(Tx)u + rho(x)Cu + weight.rho(x)u, a representation of
/// (g_T, T).
RBLieRepresentation rep_bar(const WeightedRBLie& rb, const RBLieRepresentation& r);

/// rho_tilde(x)u = rho(Tx)u - C(rho(x)u), a representation of (g_T, T).
RBLieRepresentation rep_tilde(const WeightedRBLie& rb,
                              const RBLieRepresentation& r);

/// Representation on End(V): (x.f)u = -f(rho(x)u) with operator
/// f -> -weight.f - f.C.
RBLieRepresentation rep_end(const WeightedRBLie& rb, const RBLieRepresentation& r);

/// Semidirect product RB Lie algebra on g + V with operator T + C.
WeightedRBLie semidirect(const WeightedRBLie& rb, const RBLieRepresentation& r);

Certificate check_rb_assoc(const AssociativeAlgebra& a, const Rational& weight,
                           const Matrix& R);
inline Certificate check_rb_assoc(const WeightedRBAssoc& rba) {
  return check_rb_assoc(rba.a, rba.weight, rba.R);
}

Certificate check_rb_bimodule(const WeightedRBAssoc& rba, const Bimodule& bim,
                              const Matrix& calR);
inline Certificate check_rb_bimodule(const WeightedRBAssoc& rba,
                                     const RBBimodule& m) {
  return check_rb_bimodule(rba, m.bim, m.calR);
}

/// a *_R b = R(a).b + a.R(b) + weight.a.b.
AssociativeAlgebra assoc_deformed_product(const WeightedRBAssoc& rba);

/// Bimodule over A_R: a ~. m = R(a).m - calR(a.m) and mirrored on the right.
Bimodule bimodule_tilde(const WeightedRBAssoc& rba, const RBBimodule& m);

/// (A_c)_R = (A_R)_c as structure constants, and the two induced
/// representations on the module coincide.
Certificate compatibility_skew(const WeightedRBAssoc& rba, const RBBimodule& m);

}  // namespace rbl

#endif
