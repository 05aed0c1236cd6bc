#include "rbl/rota_baxter.hpp"

namespace rbl {

namespace {

Certificate first_bad_column(const char* law, std::size_t i, const Matrix& diff) {
  for (std::size_t col = 0; col < diff.cols(); ++col) {
    Vec rc = diff.column(col);
    if (!is_zero(rc)) return Certificate::fail(law, {i, col}, rc);
  }
  return Certificate::pass();
}

}  // namespace

Certificate check_rb_lie(const LieAlgebra& g, const Rational& weight,
                         const Matrix& T) {
  if (T.rows() != g.dim() || T.cols() != g.dim())
    throw std::invalid_argument("check_rb_lie: operator shape mismatch");
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec ti = T.column(i), tj = T.column(j);
      Vec lhs = g.bracket(ti, tj);
      Vec inner = g.bracket(ti, unit_vec(n, j)) + g.bracket(unit_vec(n, i), tj) +
                  weight * g.bracket_basis(i, j);
      Vec r = lhs - T * inner;
      if (!is_zero(r)) return Certificate::fail("rota-baxter", {i, j}, r);
    }
  return Certificate::pass();
}

Certificate check_rb_rep(const WeightedRBLie& rb, const LieRepresentation& rep,
                         const Matrix& calT) {
  if (rep.rho.size() != rb.g.dim())
    throw std::invalid_argument("check_rb_rep: representation dim mismatch");
  if (calT.rows() != rep.module_dim || calT.cols() != rep.module_dim)
    throw std::invalid_argument("check_rb_rep: operator shape mismatch");
  for (std::size_t i = 0; i < rb.g.dim(); ++i) {
    Matrix rti = rep.act(rb.T.column(i));
    Matrix lhs = rti * calT;
    Matrix rhs = calT * (rti + rep.rho[i] * calT + rb.weight * rep.rho[i]);
    Matrix diff = lhs - rhs;
    if (!diff.is_zero()) return first_bad_column("rb-representation", i, diff);
  }
  return Certificate::pass();
}

WeightedRBLie dual_operator(const WeightedRBLie& rb) {
  return {rb.g, rb.weight,
          (-rb.weight) * Matrix::identity(rb.g.dim()) - rb.T};
}

RBLieRepresentation dual_representation(const WeightedRBLie& rb,
                                        const RBLieRepresentation& r) {
  return {r.rep, (-rb.weight) * Matrix::identity(r.rep.module_dim) - r.calT};
}

WeightedRBLie scale_operator(const WeightedRBLie& rb, const Rational& mu) {
  return {rb.g, mu * rb.weight, mu * rb.T};
}

WeightedRBLie conjugate_operator(const WeightedRBLie& rb, const Matrix& psi) {
  std::size_t n = rb.g.dim();
  if (psi.rows() != n || psi.cols() != n)
    throw std::invalid_argument("conjugate_operator: psi shape mismatch");
  auto inv = inverse(psi);
  if (!inv) throw std::invalid_argument("conjugate_operator: psi not invertible");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec r = psi * rb.g.bracket_basis(i, j) -
              rb.g.bracket(psi.column(i), psi.column(j));
      if (!is_zero(r))
        throw std::invalid_argument("conjugate_operator: psi is not an automorphism");
    }
  return {rb.g, rb.weight, *inv * rb.T * psi};
}

namespace {

// Each listed block must be closed under the bracket.
void require_subalgebra(const LieAlgebra& g, const std::vector<std::size_t>& block,
                        const char* name) {
  std::vector<bool> inside(g.dim(), false);
  for (auto i : block) inside[i] = true;
  for (auto i : block)
    for (auto j : block)
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!inside[k] && g.c(i, j, k) != 0)
          throw std::invalid_argument(std::string("splitting_operator: block ") +
                                      name + " is not a subalgebra");
}

void require_stable(const LieAlgebra& g, const std::vector<std::size_t>& zero,
                    const std::vector<std::size_t>& block, const char* name) {
  std::vector<bool> inside(g.dim(), false);
  for (auto i : block) inside[i] = true;
  for (auto i : zero)
    for (auto j : block)
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!inside[k] && g.c(i, j, k) != 0)
          throw std::invalid_argument(std::string("splitting_operator: block ") +
                                      name + " is not stable under the middle block");
}

}  // namespace

WeightedRBLie splitting_operator(const LieAlgebra& g, const Rational& weight,
                                 const SplitSpec& split) {
  std::size_t n = g.dim();
  std::vector<int> seen(n, 0);
  for (auto i : split.minus) ++seen.at(i);
  for (auto i : split.zero) ++seen.at(i);
  for (auto i : split.plus) ++seen.at(i);
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i] != 1)
      throw std::invalid_argument(
          "splitting_operator: blocks must partition the basis");
  require_subalgebra(g, split.minus, "minus");
  require_subalgebra(g, split.plus, "plus");
  Matrix T(n, n);
  for (auto j : split.plus) T(j, j) = -weight;
  if (!split.zero.empty()) {
    require_subalgebra(g, split.zero, "zero");
    require_stable(g, split.zero, split.minus, "minus");
    require_stable(g, split.zero, split.plus, "plus");
    if (!split.T0)
      throw std::invalid_argument("splitting_operator: middle block needs T0");
    std::size_t z = split.zero.size();
    if (split.T0->rows() != z || split.T0->cols() != z)
      throw std::invalid_argument("splitting_operator: T0 shape mismatch");
    LieAlgebra sub(z);
    for (std::size_t a = 0; a < z; ++a)
      for (std::size_t b = 0; b < z; ++b) {
        Vec w = g.bracket_basis(split.zero[a], split.zero[b]);
        for (std::size_t c = 0; c < z; ++c) sub.c(a, b, c) = w[split.zero[c]];
      }
    if (!check_rb_lie(sub, weight, *split.T0))
      throw std::invalid_argument("splitting_operator: T0 is not Rota-Baxter");
    for (std::size_t a = 0; a < z; ++a)
      for (std::size_t b = 0; b < z; ++b)
        T(split.zero[a], split.zero[b]) = (*split.T0)(a, b);
  }
  return {g, weight, T};
}

Certificate morphism_check(const WeightedRBLie& rb, const WeightedRBLie& rb2,
                           const Matrix& phi) {
  if (rb.weight != rb2.weight)
    throw std::invalid_argument("morphism_check: weight mismatch");
  if (phi.rows() != rb2.g.dim() || phi.cols() != rb.g.dim())
    throw std::invalid_argument("morphism_check: phi shape mismatch");
  std::size_t n = rb.g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec r = phi * rb.g.bracket_basis(i, j) -
              rb2.g.bracket(phi.column(i), phi.column(j));
      if (!is_zero(r)) return Certificate::fail("homomorphism", {i, j}, r);
    }
  Matrix diff = phi * rb.T - rb2.T * phi;
  if (!diff.is_zero()) return first_bad_column("intertwine", 0, diff);
  return Certificate::pass();
}

LieAlgebra deformed_bracket(const WeightedRBLie& rb) {
  std::size_t n = rb.g.dim();
  LieAlgebra d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = rb.g.bracket(rb.T.column(i), unit_vec(n, j)) +
              rb.g.bracket(unit_vec(n, i), rb.T.column(j)) +
              rb.weight * rb.g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) d.c(i, j, k) = w[k];
    }
  return d;
}

RBLieRepresentation rep_bar(const WeightedRBLie& rb,
                            const RBLieRepresentation& r) {
  LieRepresentation bar;
  bar.module_dim = r.rep.module_dim;
  for (std::size_t i = 0; i < rb.g.dim(); ++i)
    bar.rho.push_back(r.rep.act(rb.T.column(i)) + r.rep.rho[i] * r.calT +
                      rb.weight * r.rep.rho[i]);
  return {bar, r.calT};
}

RBLieRepresentation rep_tilde(const WeightedRBLie& rb,
                              const RBLieRepresentation& r) {
  LieRepresentation tilde;
  tilde.module_dim = r.rep.module_dim;
  for (std::size_t i = 0; i < rb.g.dim(); ++i)
    tilde.rho.push_back(r.rep.act(rb.T.column(i)) - r.calT * r.rep.rho[i]);
  return {tilde, r.calT};
}

RBLieRepresentation rep_end(const WeightedRBLie& rb,
                            const RBLieRepresentation& r) {
  std::size_t v = r.rep.module_dim;
  std::size_t e = v * v;  // End(V) basis E_pq at flat index p*v+q
  LieRepresentation endrep;
  endrep.module_dim = e;
  for (std::size_t i = 0; i < rb.g.dim(); ++i) {
    Matrix m(e, e);
    // E_rs -> -E_rs . rho_i, which has entries -(rho_i)(s,q) at row r.
    for (std::size_t rr = 0; rr < v; ++rr)
      for (std::size_t s = 0; s < v; ++s)
        for (std::size_t q = 0; q < v; ++q)
          m(rr * v + q, rr * v + s) -= r.rep.rho[i](s, q);
    endrep.rho.push_back(std::move(m));
  }
  Matrix op(e, e);
  for (std::size_t rr = 0; rr < v; ++rr)
    for (std::size_t s = 0; s < v; ++s) {
      op(rr * v + s, rr * v + s) -= rb.weight;
      for (std::size_t q = 0; q < v; ++q)
        op(rr * v + q, rr * v + s) -= r.calT(s, q);
    }
  return {endrep, op};
}

WeightedRBLie semidirect(const WeightedRBLie& rb, const RBLieRepresentation& r) {
  LieAlgebra total = semidirect_lie(rb.g, r.rep);
  Matrix op = Matrix::block_diag({rb.T, r.calT});
  return {total, rb.weight, op};
}

Certificate check_rb_assoc(const AssociativeAlgebra& a, const Rational& weight,
                           const Matrix& R) {
  if (R.rows() != a.dim() || R.cols() != a.dim())
    throw std::invalid_argument("check_rb_assoc: operator shape mismatch");
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ri = R.column(i), rj = R.column(j);
      Vec lhs = a.product(ri, rj);
      Vec inner = a.product(ri, unit_vec(n, j)) + a.product(unit_vec(n, i), rj) +
                  weight * a.product_basis(i, j);
      Vec r = lhs - R * inner;
      if (!is_zero(r)) return Certificate::fail("rota-baxter-assoc", {i, j}, r);
    }
  return Certificate::pass();
}

Certificate check_rb_bimodule(const WeightedRBAssoc& rba, const Bimodule& bim,
                              const Matrix& calR) {
  if (bim.left.size() != rba.a.dim())
    throw std::invalid_argument("check_rb_bimodule: bimodule dim mismatch");
  if (calR.rows() != bim.module_dim || calR.cols() != bim.module_dim)
    throw std::invalid_argument("check_rb_bimodule: operator shape mismatch");
  for (std::size_t i = 0; i < rba.a.dim(); ++i) {
    Matrix lRa = bim.left_act(rba.R.column(i));
    Matrix d1 = lRa * calR -
                calR * (lRa + bim.left[i] * calR + rba.weight * bim.left[i]);
    if (!d1.is_zero()) return first_bad_column("rb-bimodule-left", i, d1);
    Matrix rRa = bim.right_act(rba.R.column(i));
    Matrix d2 = rRa * calR -
                calR * (rRa + bim.right[i] * calR + rba.weight * bim.right[i]);
    if (!d2.is_zero()) return first_bad_column("rb-bimodule-right", i, d2);
  }
  return Certificate::pass();
}

AssociativeAlgebra assoc_deformed_product(const WeightedRBAssoc& rba) {
  std::size_t n = rba.a.dim();
  AssociativeAlgebra d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = rba.a.product(rba.R.column(i), unit_vec(n, j)) +
              rba.a.product(unit_vec(n, i), rba.R.column(j)) +
              rba.weight * rba.a.product_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) d.m(i, j, k) = w[k];
    }
  return d;
}

Bimodule bimodule_tilde(const WeightedRBAssoc& rba, const RBBimodule& m) {
  Bimodule t;
  t.module_dim = m.bim.module_dim;
  for (std::size_t i = 0; i < rba.a.dim(); ++i) {
    t.left.push_back(m.bim.left_act(rba.R.column(i)) - m.calR * m.bim.left[i]);
    t.right.push_back(m.bim.right_act(rba.R.column(i)) - m.calR * m.bim.right[i]);
  }
  return t;
}

Certificate compatibility_skew(const WeightedRBAssoc& rba, const RBBimodule& m) {
  WeightedRBLie skew_rb{skew_symmetrize_algebra(rba.a), rba.weight, rba.R};
  LieAlgebra path1 = deformed_bracket(skew_rb);
  LieAlgebra path2 = skew_symmetrize_algebra(assoc_deformed_product(rba));
  std::size_t n = rba.a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec r = path1.bracket_basis(i, j) - path2.bracket_basis(i, j);
      if (!is_zero(r)) return Certificate::fail("skew-deform-commute", {i, j}, r);
    }
  RBLieRepresentation skew_m{skew_symmetrize_bimodule(rba.a, m.bim), m.calR};
  LieRepresentation via_lie = rep_tilde(skew_rb, skew_m).rep;
  LieRepresentation via_ass =
      skew_symmetrize_bimodule(assoc_deformed_product(rba),
                               bimodule_tilde(rba, m));
  for (std::size_t i = 0; i < n; ++i) {
    Matrix diff = via_lie.rho[i] - via_ass.rho[i];
    if (!diff.is_zero()) return first_bad_column("skew-rep-commute", i, diff);
  }
  return Certificate::pass();
}

}  // namespace rbl
