#ifndef RBL_COCHAIN_HPP
#define RBL_COCHAIN_HPP

#include <optional>

#include "rbl/rota_baxter.hpp"

namespace rbl {

std::size_t binom(std::size_t n, std::size_t k);

/// Lexicographic rank of a strictly increasing tuple among the k-subsets
/// of {0..n-1}, and its inverse.
std::size_t wedge_rank(const std::vector<std::size_t>& idx, std::size_t n);
std::vector<std::size_t> wedge_unrank(std::size_t rank, std::size_t k,
                                      std::size_t n);

/// Sorts idx in place; returns the permutation sign, or 0 on a repeat.
int sort_sign(std::vector<std::size_t>& idx);

/// Alternating multilinear map wedge^n g -> V stored on the wedge basis.
struct CECochain {
  std::size_t degree = 0, g_dim = 0, v_dim = 0;
  std::vector<Vec> values;  // binom(g_dim, degree) vectors of length v_dim

  static CECochain zero(std::size_t degree, std::size_t g_dim, std::size_t v_dim);

  Vec& at(const std::vector<std::size_t>& sorted_idx);
  /// Value on an arbitrary basis tuple (sign of the sorting permutation,
  /// zero on repeats).
  Vec eval_basis(std::vector<std::size_t> idx) const;
  /// Full multilinear evaluation on coordinate vectors.
  Vec eval(const std::vector<Vec>& args) const;

  bool is_zero() const;
  std::size_t flat_dim() const { return values.size() * v_dim; }
  Vec to_flat() const;
  static CECochain from_flat(std::size_t degree, std::size_t g_dim,
                             std::size_t v_dim, const Vec& flat);

  CECochain operator+(const CECochain& o) const;
  CECochain operator-(const CECochain& o) const;
  friend CECochain operator*(const Rational& s, const CECochain& f);
  bool operator==(const CECochain& o) const = default;
};

/// Multilinear map A^{(x)n} -> M on all basis tuples (no symmetry).
struct HochschildCochain {
  std::size_t degree = 0, a_dim = 0, m_dim = 0;
  std::vector<Vec> values;  // a_dim^degree vectors of length m_dim

  static HochschildCochain zero(std::size_t degree, std::size_t a_dim,
                                std::size_t m_dim);
  std::size_t tuple_index(const std::vector<std::size_t>& idx) const;
  Vec& at(const std::vector<std::size_t>& idx);
  const Vec& at(const std::vector<std::size_t>& idx) const;
  Vec eval(const std::vector<Vec>& args) const;

  bool is_zero() const;
  std::size_t flat_dim() const { return values.size() * m_dim; }
  Vec to_flat() const;
  static HochschildCochain from_flat(std::size_t degree, std::size_t a_dim,
                                     std::size_t m_dim, const Vec& flat);

  HochschildCochain operator+(const HochschildCochain& o) const;
  HochschildCochain operator-(const HochschildCochain& o) const;
  friend HochschildCochain operator*(const Rational& s, const HochschildCochain& f);
  bool operator==(const HochschildCochain& o) const = default;
};

/// Element of C^n_RB: a degree-n cochain paired with a degree-(n-1) one
/// (absent at n = 0, where the cochain is a plain vector of V).
struct RBCochain {
  std::size_t n = 0;
  CECochain f;
  std::optional<CECochain> gpart;

  static RBCochain zero(std::size_t n, std::size_t g_dim, std::size_t v_dim);
  std::size_t flat_dim() const;
  Vec to_flat() const;
  static RBCochain from_flat(std::size_t n, std::size_t g_dim, std::size_t v_dim,
                             const Vec& flat);
  RBCochain operator-(const RBCochain& o) const;
  bool is_zero() const;
  bool operator==(const RBCochain& o) const = default;
};

/// Pair cochain on the associative side, mirroring RBCochain.
struct RBAssocCochain {
  std::size_t n = 0;
  HochschildCochain f;
  std::optional<HochschildCochain> gpart;

  static RBAssocCochain zero(std::size_t n, std::size_t a_dim, std::size_t m_dim);
  std::size_t flat_dim() const;
  Vec to_flat() const;
  static RBAssocCochain from_flat(std::size_t n, std::size_t a_dim,
                                  std::size_t m_dim, const Vec& flat);
  bool is_zero() const;
  bool operator==(const RBAssocCochain& o) const = default;
};

/// Chevalley-Eilenberg coboundary with signs (-1)^{i+n} / (-1)^{i+j+n+1};
/// at degree 0 this makes (delta v)(x) = -rho(x)v.
CECochain delta_ce(const LieAlgebra& g, const LieRepresentation& rep,
                   const CECochain& f);

/// delta_ce over the induced algebra g_T with the rho_tilde coefficients.
CECochain partial_ce(const WeightedRBLie& rb, const RBLieRepresentation& rrep,
                     const CECochain& f);

/// Chain map into the twisted complex: f(Tx_1,...,Tx_n) minus the
/// lambda-graded sum of calT-composites over partial T-insertions.
CECochain phi(const WeightedRBLie& rb, const RBLieRepresentation& rrep,
              const CECochain& f);

RBCochain delta_rb(const WeightedRBLie& rb, const RBLieRepresentation& rrep,
                   const RBCochain& c);

/// Hochschild coboundary carrying the same per-degree sign twist as
/// delta_ce, so the skew-symmetrization squares commute on the nose.
HochschildCochain delta_hochschild(const AssociativeAlgebra& a, const Bimodule& m,
                                   const HochschildCochain& f);

HochschildCochain partial_hochschild(const WeightedRBAssoc& rba,
                                     const RBBimodule& m,
                                     const HochschildCochain& f);

HochschildCochain psi(const WeightedRBAssoc& rba, const RBBimodule& m,
                      const HochschildCochain& f);

RBAssocCochain delta_rb_assoc(const WeightedRBAssoc& rba, const RBBimodule& m,
                              const RBAssocCochain& c);

/// S_n(f)(x_1,...,x_n) = sum over permutations of sign * f(permuted).
CECochain skew_symmetrize_cochain(const HochschildCochain& f);

/// (S_n, S_{n-1}) on pair cochains.
RBCochain skew_symmetrize_rb_cochain(const RBAssocCochain& c);

}  // namespace rbl

#endif
