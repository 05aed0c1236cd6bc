#ifndef RBL_GRADED_LIE_HPP
#define RBL_GRADED_LIE_HPP

#include "rbl/cohomology.hpp"

namespace rbl {

/// A pair of operators (T on g, calT on V) subject to the two defining
/// identities; equivalently (g,T) is Rota-Baxter and (V,calT) a
/// representation of it.
struct PairedOperators {
  LieAlgebra g;
  LieRepresentation rep;
  Rational weight;
  Matrix T;
  Matrix calT;
};

Certificate check_paired(const PairedOperators& p);

/// Lie algebra on g + g with [(x,x'),(y,y')] = ([x,y], [x,y']+[x',y]+w[x',y']).
LieAlgebra lambda_double(const LieAlgebra& g, const Rational& weight);

/// Action of the double on V + V.
LieRepresentation lambda_double_rep(const LieAlgebra& g,
                                    const LieRepresentation& rep,
                                    const Rational& weight);

/// Closure of {(Tx, x, Cu, u)} inside the four-block semidirect algebra;
/// holds iff check_paired does.
Certificate graph_subalgebra_check(const PairedOperators& p);

/// Alternating multilinear map wedge^m l -> l on the four-block space
/// l = g + g' + V + V', stored on strictly increasing tuples.
struct MultiMap {
  std::size_t arity = 0;
  std::size_t dim = 0;
  std::vector<Vec> values;  // binom(dim, arity) entries of length dim

  static MultiMap zero(std::size_t arity, std::size_t dim);
  const Vec& at(const std::vector<std::size_t>& sorted_idx) const;
  Vec& at(const std::vector<std::size_t>& sorted_idx);
  Vec eval_basis(std::vector<std::size_t> idx) const;

  bool is_zero() const;
  MultiMap operator+(const MultiMap& o) const;
  MultiMap operator-(const MultiMap& o) const;
  friend MultiMap operator*(const Rational& s, const MultiMap& f);
  bool operator==(const MultiMap& o) const = default;
};

/// Nijenhuis-Richardson bracket f o g - (-1)^{(m-1)(n-1)} g o f over the
/// unshuffle circle product.
MultiMap nr_bracket(const MultiMap& f, const MultiMap& h);

/// The block layout of l = g + g' + V + V' for a given (g, V).
struct BlockSpace {
  std::size_t g_dim = 0, v_dim = 0;
  std::size_t total() const { return 2 * g_dim + 2 * v_dim; }
  std::size_t g_at(std::size_t i) const { return i; }
  std::size_t gp_at(std::size_t i) const { return g_dim + i; }
  std::size_t v_at(std::size_t u) const { return 2 * g_dim + u; }
  std::size_t vp_at(std::size_t u) const { return 2 * g_dim + v_dim + u; }
};

/// theta = mu + ad' + rho + rho' + varrho; Maurer-Cartan, with the mixed
/// action g' x V valued in V' (the semidirect route fixes the display).
MultiMap build_theta(const LieAlgebra& g, const LieRepresentation& rep);

/// theta' = -(mu' + varrho'), the primed-block part of the lambda-structure.
MultiMap build_theta_prime(const LieAlgebra& g, const LieRepresentation& rep);

/// Pair cochain of the paired-operator complex:
/// part1 in Hom(wedge^n g, g), part2 in Hom(wedge^{n-1} g (x) V, V).
struct RBpCochain {
  std::size_t n = 0;
  std::size_t g_dim = 0, v_dim = 0;
  CECochain part1;         // degree n, valued in g
  std::vector<Vec> part2;  // binom(g,n-1)*v entries of length v

  static RBpCochain zero(std::size_t n, std::size_t g_dim, std::size_t v_dim);
  static RBpCochain from_pair(const PairedOperators& p);  // arity 1: (T, calT)
  Vec& part2_at(const std::vector<std::size_t>& sorted_g_idx, std::size_t u);

  std::size_t flat_dim() const;
  Vec to_flat() const;
  static RBpCochain from_flat(std::size_t n, std::size_t g_dim,
                              std::size_t v_dim, const Vec& flat);
  RBpCochain operator+(const RBpCochain& o) const;
  friend RBpCochain operator*(const Rational& s, const RBpCochain& c);
  bool is_zero() const;
  bool operator==(const RBpCochain& o) const = default;
};

/// Extension by zero onto the primed argument blocks of l.
MultiMap embed(const BlockSpace& bs, const RBpCochain& c);

/// Reads the primed-block components back; with verify_support it requires
/// the map to vanish outside them.
RBpCochain project(const BlockSpace& bs, const MultiMap& f, std::size_t n,
                   bool verify_support = true);

/// Derived bracket (-1)^m [[theta, P], Q] restricted to pair cochains.
RBpCochain derived_bracket(const LieAlgebra& g, const LieRepresentation& rep,
                           const RBpCochain& c1, const RBpCochain& c2);

/// Differential induced by theta' scaled by the weight; on arity 1 it takes
/// (T,C) to (w.T[x,y], w.C(rho(x)u)).
RBpCochain dd(const LieAlgebra& g, const LieRepresentation& rep,
              const Rational& weight, const RBpCochain& c);

/// Residual of dd(T) + 1/2 [[T,T]]; zero iff check_paired passes. Evaluates
/// the engine and the closed forms and insists they agree.
Certificate mc_check(const PairedOperators& p);

/// d_T = dd + [[T, -]]; requires a valid paired operator.
RBpCochain d_T(const PairedOperators& p, const RBpCochain& c);

class RBpComplex final : public CochainComplex {
 public:
  explicit RBpComplex(PairedOperators p);
  std::size_t dim(std::size_t degree) const override;
  Vec apply(std::size_t degree, const Vec& flat) const override;

 private:
  PairedOperators p_;
};

CohomologyReport rbp_cohomology(const PairedOperators& p, std::size_t degree);

/// Residual of d_T(T') + 1/2 [[T',T']]; zero iff T + T' is again paired.
Certificate mc_deformation_check(const PairedOperators& p, const Matrix& t_inc,
                                 const Matrix& calt_inc);

}  // namespace rbl

#endif
