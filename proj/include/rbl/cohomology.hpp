#ifndef RBL_COHOMOLOGY_HPP
#define RBL_COHOMOLOGY_HPP

#include <memory>

#include "rbl/cochain.hpp"

namespace rbl {

/// A cochain complex over canonical flat coordinates. Every differential in
/// the library materializes through this one interface, so ranks, kernels,
/// representatives and membership tests share a single code path.
class CochainComplex {
 public:
  virtual ~CochainComplex() = default;
  virtual std::size_t dim(std::size_t degree) const = 0;
  /// Applies the degree-n differential to flat coordinates.
  virtual Vec apply(std::size_t degree, const Vec& flat) const = 0;
  /// Matrix of the differential C^n -> C^{n+1} in the canonical bases.
  Matrix differential_matrix(std::size_t degree) const;
};

class CEComplex final : public CochainComplex {
 public:
  CEComplex(LieAlgebra g, LieRepresentation rep)
      : g_(std::move(g)), rep_(std::move(rep)) {}
  std::size_t dim(std::size_t degree) const override;
  Vec apply(std::size_t degree, const Vec& flat) const override;

 private:
  LieAlgebra g_;
  LieRepresentation rep_;
};

/// The twisted complex of the operator: CE over (g_T, rho_tilde).
CEComplex make_twisted_ce_complex(const WeightedRBLie& rb,
                                  const RBLieRepresentation& rrep);

class RBComplex final : public CochainComplex {
 public:
  RBComplex(WeightedRBLie rb, RBLieRepresentation rrep)
      : rb_(std::move(rb)), rrep_(std::move(rrep)) {}
  std::size_t dim(std::size_t degree) const override;
  Vec apply(std::size_t degree, const Vec& flat) const override;
  std::size_t g_dim() const { return rb_.g.dim(); }
  std::size_t v_dim() const { return rrep_.rep.module_dim; }

 private:
  WeightedRBLie rb_;
  RBLieRepresentation rrep_;
};

class HochschildComplex final : public CochainComplex {
 public:
  HochschildComplex(AssociativeAlgebra a, Bimodule m)
      : a_(std::move(a)), m_(std::move(m)) {}
  std::size_t dim(std::size_t degree) const override;
  Vec apply(std::size_t degree, const Vec& flat) const override;

 private:
  AssociativeAlgebra a_;
  Bimodule m_;
};

HochschildComplex make_twisted_hochschild_complex(const WeightedRBAssoc& rba,
                                                  const RBBimodule& m);

class RBAssocComplex final : public CochainComplex {
 public:
  RBAssocComplex(WeightedRBAssoc rba, RBBimodule m)
      : rba_(std::move(rba)), m_(std::move(m)) {}
  std::size_t dim(std::size_t degree) const override;
  Vec apply(std::size_t degree, const Vec& flat) const override;

 private:
  WeightedRBAssoc rba_;
  RBBimodule m_;
};

struct CohomologyReport {
  std::size_t degree = 0;
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t betti = 0;
  std::vector<Vec> representatives;  // flat coordinates, reduced mod image
};

/// Assembles the differentials at degrees n-1 and n, computes dimensions by
/// exact rank/kernel, and lists image-reduced cocycle representatives.
CohomologyReport cohomology(const CochainComplex& cx, std::size_t degree);

bool is_cocycle(const CochainComplex& cx, std::size_t degree, const Vec& flat);
/// Preimage under the previous differential, when one exists.
std::optional<Vec> is_coboundary(const CochainComplex& cx, std::size_t degree,
                                 const Vec& flat);
/// Primitive p with delta(p) = c1 - c2, when the classes agree.
std::optional<Vec> cohomologous(const CochainComplex& cx, std::size_t degree,
                                const Vec& c1, const Vec& c2);

/// Solution space of the two degree-one conditions: gamma is a CE cocycle and
/// gamma(Tx) - C(gamma x) = rho(Tx)v - C(rho(x)v). Coordinates are
/// [gamma columns | v].
std::vector<Vec> derivations(const WeightedRBLie& rb,
                             const RBLieRepresentation& rrep);

/// Span of (-delta_ce(v), v) over v in V, echelonized.
std::vector<Vec> inner_derivations(const WeightedRBLie& rb,
                                   const RBLieRepresentation& rrep);

/// Comparison map to the complex of the dual structure: (f,g) -> (f, +-g).
RBCochain xi_isomorphism(const RBCochain& c);

}  // namespace rbl

#endif
