#ifndef RBL_EXT_DEFORM_HPP
#define RBL_EXT_DEFORM_HPP

#include "rbl/cohomology.hpp"

namespace rbl {

/// Abelian extension 0 -> V -> total -> g -> 0 of RB Lie algebras, with the
/// maps stored as matrices over the standard bases and a chosen section.
struct AbelianExtension {
  WeightedRBLie total;  // dimension g + v
  Matrix incl;          // V -> total
  Matrix proj;          // total -> g
  Matrix section;       // g -> total, proj * section = id
};

/// Structural invariants of an extension over (rb, rrep): exactness, both
/// legs morphisms, abelian image of incl, section splits proj.
Certificate validate_extension(const WeightedRBLie& rb,
                               const RBLieRepresentation& rrep,
                               const AbelianExtension& ext);

/// Builds g + V with bracket twisted by psi and operator twisted by chi.
/// (psi, chi) must be a 2-cocycle of the RB complex; rejects otherwise.
AbelianExtension extension_from_cocycle(const WeightedRBLie& rb,
                                        const RBLieRepresentation& rrep,
                                        const CECochain& psi,
                                        const CECochain& chi);

/// psi(x,y) = [s(x),s(y)] - s[x,y] and chi(x) = T_hat(s(x)) - s(Tx), pulled
/// back through incl; always lands in the 2-cocycles.
std::pair<CECochain, CECochain> cocycle_from_extension(
    const WeightedRBLie& rb, const RBLieRepresentation& rrep,
    const AbelianExtension& ext);

/// Decides isomorphism by comparing extracted cocycles; on success returns
/// the verified isomorphism matrix commuting with both legs.
std::optional<Matrix> extensions_isomorphic(const WeightedRBLie& rb,
                                            const RBLieRepresentation& rrep,
                                            const AbelianExtension& e1,
                                            const AbelianExtension& e2);

/// Truncated formal deformation: mu[i], T[i] are the t^i coefficients, with
/// mu[0] and T[0] the base structure.
struct TruncatedDeformation {
  std::size_t order = 0;          // N; lists have N+1 entries
  std::vector<CECochain> mu;      // degree-2 cochains valued in g
  std::vector<Matrix> T;
};

/// Formal isomorphism phi_t = id + phi_1 t + ...; phi[0] must be id.
struct GaugeTransform {
  std::size_t order = 0;
  std::vector<Matrix> phi;

  static GaugeTransform identity(std::size_t order, std::size_t dim);
};

/// Power-series composition (a o b), truncated at the smaller order.
GaugeTransform compose_gauge(const GaugeTransform& a, const GaugeTransform& b);
/// Order-by-order series inverse.
GaugeTransform inverse_gauge(const GaugeTransform& a);

/// Checks the order-by-order Jacobi and Rota-Baxter systems for 0 <= n <= N.
Certificate check_deformation(const WeightedRBLie& rb,
                              const TruncatedDeformation& d);

/// (mu_1, T_1) as a degree-2 pair cochain plus its cocycle verdict.
std::pair<RBCochain, bool> infinitesimal(const WeightedRBLie& rb,
                                         const TruncatedDeformation& d);

/// phi^-1 o mu o (phi x phi) and phi^-1 o T o phi, truncated; the output is
/// re-verified and the equivalence systems against d are asserted.
TruncatedDeformation apply_gauge(const WeightedRBLie& rb,
                                 const TruncatedDeformation& d,
                                 const GaugeTransform& gauge);

struct TrivializationResult {
  std::optional<GaugeTransform> gauge;
  // On failure: the order whose term is not a coboundary and the
  // image-reduced representative of its class.
  std::size_t blocking_order = 0;
  Vec blocking_class;
};

/// Gauges away the lowest nonzero order while it is a coboundary; returns
/// the composite gauge or the first obstructing cohomology class.
TrivializationResult trivialize(const WeightedRBLie& rb,
                                const TruncatedDeformation& d);

}  // namespace rbl

#endif
