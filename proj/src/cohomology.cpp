#include "rbl/cohomology.hpp"

namespace rbl {

Matrix CochainComplex::differential_matrix(std::size_t degree) const {
  std::size_t cols = dim(degree), rows = dim(degree + 1);
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Vec img = apply(degree, unit_vec(cols, j));
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = img[i];
  }
  return m;
}

std::size_t CEComplex::dim(std::size_t degree) const {
  return binom(g_.dim(), degree) * rep_.module_dim;
}

Vec CEComplex::apply(std::size_t degree, const Vec& flat) const {
  CECochain f = CECochain::from_flat(degree, g_.dim(), rep_.module_dim, flat);
  return delta_ce(g_, rep_, f).to_flat();
}

CEComplex make_twisted_ce_complex(const WeightedRBLie& rb,
                                  const RBLieRepresentation& rrep) {
  return CEComplex(deformed_bracket(rb), rep_tilde(rb, rrep).rep);
}

std::size_t RBComplex::dim(std::size_t degree) const {
  std::size_t g = rb_.g.dim(), v = rrep_.rep.module_dim;
  if (degree == 0) return v;
  return binom(g, degree) * v + binom(g, degree - 1) * v;
}

Vec RBComplex::apply(std::size_t degree, const Vec& flat) const {
  RBCochain c =
      RBCochain::from_flat(degree, rb_.g.dim(), rrep_.rep.module_dim, flat);
  return delta_rb(rb_, rrep_, c).to_flat();
}

std::size_t HochschildComplex::dim(std::size_t degree) const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) count *= a_.dim();
  return count * m_.module_dim;
}

Vec HochschildComplex::apply(std::size_t degree, const Vec& flat) const {
  HochschildCochain f =
      HochschildCochain::from_flat(degree, a_.dim(), m_.module_dim, flat);
  return delta_hochschild(a_, m_, f).to_flat();
}

HochschildComplex make_twisted_hochschild_complex(const WeightedRBAssoc& rba,
                                                  const RBBimodule& m) {
  return HochschildComplex(assoc_deformed_product(rba), bimodule_tilde(rba, m));
}

std::size_t RBAssocComplex::dim(std::size_t degree) const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) count *= rba_.a.dim();
  std::size_t prev = degree == 0 ? 0 : count / rba_.a.dim();
  return (count + prev) * m_.bim.module_dim;
}

Vec RBAssocComplex::apply(std::size_t degree, const Vec& flat) const {
  RBAssocCochain c = RBAssocCochain::from_flat(degree, rba_.a.dim(),
                                               m_.bim.module_dim, flat);
  return delta_rb_assoc(rba_, m_, c).to_flat();
}

CohomologyReport cohomology(const CochainComplex& cx, std::size_t degree) {
  CohomologyReport rep;
  rep.degree = degree;
  rep.dim_cochains = cx.dim(degree);
  Matrix mn = cx.differential_matrix(degree);
  std::vector<Vec> kernel = kernel_basis(mn);
  rep.dim_cocycles = kernel.size();
  if (rep.dim_cochains != rank(mn) + kernel.size())
    throw std::logic_error("cohomology: rank-nullity cross-check failed");
  Matrix mprev = degree == 0 ? Matrix(rep.dim_cochains, 0)
                             : cx.differential_matrix(degree - 1);
  rep.dim_coboundaries = rank(mprev);
  rep.betti = rep.dim_cocycles - rep.dim_coboundaries;
  ColumnSpace image(mprev);
  ColumnSpace seen(mprev);
  for (const Vec& k : kernel) {
    Vec reduced = image.reduce(k);
    if (is_zero(reduced)) continue;
    if (!seen.insert(k)) continue;
    if (!is_zero(cx.apply(degree, reduced)))
      throw std::logic_error("cohomology: representative is not a cocycle");
    rep.representatives.push_back(std::move(reduced));
  }
  if (rep.representatives.size() != rep.betti)
    throw std::logic_error("cohomology: representative count mismatch");
  return rep;
}

bool is_cocycle(const CochainComplex& cx, std::size_t degree, const Vec& flat) {
  return is_zero(cx.apply(degree, flat));
}

std::optional<Vec> is_coboundary(const CochainComplex& cx, std::size_t degree,
                                 const Vec& flat) {
  if (degree == 0) {
    if (is_zero(flat)) return Vec{};
    return std::nullopt;
  }
  return solve(cx.differential_matrix(degree - 1), flat);
}

std::optional<Vec> cohomologous(const CochainComplex& cx, std::size_t degree,
                                const Vec& c1, const Vec& c2) {
  return is_coboundary(cx, degree, c1 - c2);
}

std::vector<Vec> derivations(const WeightedRBLie& rb,
                             const RBLieRepresentation& rrep) {
  std::size_t g = rb.g.dim(), v = rrep.rep.module_dim;
  std::size_t vars = g * v + v;  // gamma(e_j) = sum_t gamma[j*v+t] f_t, then v
  std::vector<Vec> rows;
  // gamma([e_i,e_j]) - rho(e_i) gamma(e_j) + rho(e_j) gamma(e_i) = 0
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      Vec w = rb.g.bracket_basis(i, j);
      for (std::size_t t = 0; t < v; ++t) {
        Vec row(vars);
        for (std::size_t k = 0; k < g; ++k) row[k * v + t] += w[k];
        for (std::size_t s = 0; s < v; ++s) {
          row[j * v + s] -= rrep.rep.rho[i](t, s);
          row[i * v + s] += rrep.rep.rho[j](t, s);
        }
        rows.push_back(std::move(row));
      }
    }
  // gamma(T e_i) - C gamma(e_i) - rho(T e_i) v + C rho(e_i) v = 0
  for (std::size_t i = 0; i < g; ++i) {
    Matrix rti = rrep.rep.act(rb.T.column(i));
    Matrix crho = rrep.calT * rrep.rep.rho[i];
    for (std::size_t t = 0; t < v; ++t) {
      Vec row(vars);
      for (std::size_t k = 0; k < g; ++k) row[k * v + t] += rb.T(k, i);
      for (std::size_t s = 0; s < v; ++s) {
        row[i * v + s] -= rrep.calT(t, s);
        row[g * v + s] += crho(t, s) - rti(t, s);
      }
      rows.push_back(std::move(row));
    }
  }
  Matrix a(rows.size(), vars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t cidx = 0; cidx < vars; ++cidx) a(r, cidx) = rows[r][cidx];
  return kernel_basis(a);
}

std::vector<Vec> inner_derivations(const WeightedRBLie& rb,
                                   const RBLieRepresentation& rrep) {
  std::size_t g = rb.g.dim(), v = rrep.rep.module_dim;
  ColumnSpace span(g * v + v);
  std::vector<Vec> basis;
  for (std::size_t k = 0; k < v; ++k) {
    // (-delta_ce(e_k), e_k): gamma(e_j) = rho(e_j) e_k
    Vec w(g * v + v);
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t t = 0; t < v; ++t) w[j * v + t] = rrep.rep.rho[j](t, k);
    w[g * v + k] = 1;
    if (span.insert(w)) basis.push_back(std::move(w));
  }
  return basis;
}

RBCochain xi_isomorphism(const RBCochain& c) {
  RBCochain out(c);
  if (out.gpart && c.n % 2 == 0) *out.gpart = Rational(-1) * *out.gpart;
  return out;
}

}  // namespace rbl
