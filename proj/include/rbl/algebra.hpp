#ifndef RBL_ALGEBRA_HPP
#define RBL_ALGEBRA_HPP

#include <cstddef>
#include <vector>

#include "rbl/certificate.hpp"
#include "rbl/matrix.hpp"

namespace rbl {

/// One structure-constant entry: the e_k coefficient of e_i * e_j.
struct ConstantEntry {
  std::size_t i, j, k;
  Rational c;
};

/// Finite-dimensional Lie algebra given by structure constants,
/// [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  /// Fills from sparse triples; the (j,i) mirror of each entry is filled with
  /// the opposite sign unless given explicitly.
  static LieAlgebra from_triples(std::size_t dim,
                                 const std::vector<ConstantEntry>& entries);

  std::size_t dim() const { return dim_; }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  bool operator==(const LieAlgebra& o) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Representation of a Lie algebra: one action matrix per basis element.
struct LieRepresentation {
  std::size_t module_dim = 0;
  std::vector<Matrix> rho;  // rho[i] = action of e_i

  Matrix act(const Vec& x) const;  // rho extended linearly
  Vec act_basis(std::size_t i, const Vec& u) const { return rho[i] * u; }
  bool operator==(const LieRepresentation& o) const = default;
};

class AssociativeAlgebra {
 public:
  AssociativeAlgebra() = default;
  explicit AssociativeAlgebra(std::size_t dim) : dim_(dim), m_(dim * dim * dim) {}
  static AssociativeAlgebra from_triples(std::size_t dim,
                                         const std::vector<ConstantEntry>& entries);

  std::size_t dim() const { return dim_; }
  Rational& m(std::size_t i, std::size_t j, std::size_t k) {
    return m_[(i * dim_ + j) * dim_ + k];
  }
  const Rational& m(std::size_t i, std::size_t j, std::size_t k) const {
    return m_[(i * dim_ + j) * dim_ + k];
  }

  Vec product_basis(std::size_t i, std::size_t j) const;
  Vec product(const Vec& a, const Vec& b) const;
  /// Left/right multiplication matrices of e_i.
  Matrix left_mult(std::size_t i) const;
  Matrix right_mult(std::size_t i) const;

  bool operator==(const AssociativeAlgebra& o) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> m_;
};

struct Bimodule {
  std::size_t module_dim = 0;
  std::vector<Matrix> left;   // left[i]  = e_i . (-)
  std::vector<Matrix> right;  // right[i] = (-) . e_i

  Matrix left_act(const Vec& a) const;
  Matrix right_act(const Vec& a) const;
  bool operator==(const Bimodule& o) const = default;
};

Certificate validate_lie(const LieAlgebra& g);
Certificate validate_representation(const LieAlgebra& g, const LieRepresentation& r);
Certificate validate_associative(const AssociativeAlgebra& a);
Certificate validate_bimodule(const AssociativeAlgebra& a, const Bimodule& m);

LieRepresentation adjoint_rep(const LieAlgebra& g);
/// Adjoint bimodule of an associative algebra (actions by multiplication).
Bimodule adjoint_bimodule(const AssociativeAlgebra& a);

LieAlgebra skew_symmetrize_algebra(const AssociativeAlgebra& a);
LieRepresentation skew_symmetrize_bimodule(const AssociativeAlgebra& a,
                                           const Bimodule& m);

/// Block-diagonal sum of representations, each carrying its own operator.
std::pair<LieRepresentation, Matrix> direct_sum_reps(
    const LieAlgebra& g,
    const std::vector<std::pair<LieRepresentation, Matrix>>& parts);

/// Semidirect-product Lie algebra on g + V with [(x,u),(y,v)] =
/// ([x,y], rho(x)v - rho(y)u).
LieAlgebra semidirect_lie(const LieAlgebra& g, const LieRepresentation& rep);

}  // namespace rbl

#endif
