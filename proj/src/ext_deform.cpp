#include "rbl/ext_deform.hpp"

namespace rbl {

namespace {

CECochain cochain_from_matrix(const Matrix& m) {
  CECochain f = CECochain::zero(1, m.cols(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) f.values[j] = m.column(j);
  return f;
}

Matrix matrix_from_cochain(const CECochain& f) {
  Matrix m(f.v_dim, f.g_dim);
  for (std::size_t j = 0; j < f.g_dim; ++j)
    for (std::size_t t = 0; t < f.v_dim; ++t) m(t, j) = f.values[j][t];
  return m;
}

CECochain vec_as_cochain(const Vec& v, std::size_t g_dim) {
  CECochain f = CECochain::zero(0, g_dim, v.size());
  f.values[0] = v;
  return f;
}

Vec pull_back(const Matrix& incl, const Vec& w, const char* what) {
  auto u = solve(incl, w);
  if (!u) throw std::invalid_argument(std::string(what) +
                                      ": value does not lie in the kernel image");
  return *u;
}

}  // namespace

Certificate validate_extension(const WeightedRBLie& rb,
                               const RBLieRepresentation& rrep,
                               const AbelianExtension& ext) {
  std::size_t g = rb.g.dim(), v = rrep.rep.module_dim, n = ext.total.g.dim();
  if (n != g + v || ext.incl.rows() != n || ext.incl.cols() != v ||
      ext.proj.rows() != g || ext.proj.cols() != n ||
      ext.section.rows() != n || ext.section.cols() != g)
    throw std::invalid_argument("validate_extension: map shape mismatch");
  if (ext.total.weight != rb.weight)
    return Certificate::fail("weight", {}, {ext.total.weight - rb.weight});
  if (auto c = validate_lie(ext.total.g); !c) return c;
  if (auto c = check_rb_lie(ext.total); !c) return c;
  if (rank(ext.incl) != v)
    return Certificate::fail("incl-injective", {}, {});
  if (!(ext.proj * ext.incl).is_zero())
    return Certificate::fail("exactness", {}, {});
  if (rank(ext.proj) != g) return Certificate::fail("proj-surjective", {}, {});
  if (!(ext.proj * ext.section - Matrix::identity(g)).is_zero())
    return Certificate::fail("section", {}, {});
  // incl is a morphism from (V, calT) with the trivial bracket.
  WeightedRBLie v_triv{LieAlgebra(v), rb.weight, rrep.calT};
  if (auto c = morphism_check(v_triv, ext.total, ext.incl); !c) return c;
  if (auto c = morphism_check(ext.total, rb, ext.proj); !c) return c;
  // induced representation through the section matches rrep
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t u = 0; u < v; ++u) {
      Vec w = ext.total.g.bracket(ext.section.column(i), ext.incl.column(u));
      Vec got = pull_back(ext.incl, w, "validate_extension");
      Vec r = got - rrep.rep.rho[i].column(u);
      if (!is_zero(r)) return Certificate::fail("induced-rep", {i, u}, r);
    }
  return Certificate::pass();
}

AbelianExtension extension_from_cocycle(const WeightedRBLie& rb,
                                        const RBLieRepresentation& rrep,
                                        const CECochain& psi,
                                        const CECochain& chi) {
  std::size_t g = rb.g.dim(), v = rrep.rep.module_dim;
  if (psi.degree != 2 || psi.g_dim != g || psi.v_dim != v || chi.degree != 1 ||
      chi.g_dim != g || chi.v_dim != v)
    throw std::invalid_argument("extension_from_cocycle: cochain shape mismatch");
  RBCochain c{2, psi, chi};
  RBComplex cx(rb, rrep);
  if (!is_cocycle(cx, 2, c.to_flat()))
    throw MathError("extension_from_cocycle: (psi, chi) is not a 2-cocycle");

  LieAlgebra total = semidirect_lie(rb.g, rrep.rep);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      Vec w = psi.eval_basis({i, j});
      for (std::size_t t = 0; t < v; ++t) total.c(i, j, g + t) += w[t];
    }
  Matrix op(g + v, g + v);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t k = 0; k < g; ++k) op(k, i) = rb.T(k, i);
    const Vec& x = chi.values[i];
    for (std::size_t t = 0; t < v; ++t) op(g + t, i) = x[t];
  }
  for (std::size_t u = 0; u < v; ++u)
    for (std::size_t t = 0; t < v; ++t) op(g + t, g + u) = rrep.calT(t, u);

  AbelianExtension ext;
  ext.total = {std::move(total), rb.weight, std::move(op)};
  ext.incl = Matrix(g + v, v);
  for (std::size_t u = 0; u < v; ++u) ext.incl(g + u, u) = 1;
  ext.proj = Matrix(g, g + v);
  for (std::size_t i = 0; i < g; ++i) ext.proj(i, i) = 1;
  ext.section = Matrix(g + v, g);
  for (std::size_t i = 0; i < g; ++i) ext.section(i, i) = 1;
  if (auto cert = validate_extension(rb, rrep, ext); !cert)
    throw std::logic_error("extension_from_cocycle: construction failed: " +
                           cert.message());
  return ext;
}

std::pair<CECochain, CECochain> cocycle_from_extension(
    const WeightedRBLie& rb, const RBLieRepresentation& rrep,
    const AbelianExtension& ext) {
  std::size_t g = rb.g.dim(), v = rrep.rep.module_dim;
  if (!(ext.proj * ext.section - Matrix::identity(g)).is_zero())
    throw std::invalid_argument("cocycle_from_extension: section does not split p");
  CECochain psi = CECochain::zero(2, g, v);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      Vec w = ext.total.g.bracket(ext.section.column(i), ext.section.column(j)) -
              ext.section * rb.g.bracket_basis(i, j);
      psi.at({i, j}) = pull_back(ext.incl, w, "cocycle_from_extension");
    }
  CECochain chi = CECochain::zero(1, g, v);
  for (std::size_t i = 0; i < g; ++i) {
    Vec w = ext.total.T * ext.section.column(i) -
            ext.section * rb.T.column(i);
    chi.values[i] = pull_back(ext.incl, w, "cocycle_from_extension");
  }
  RBComplex cx(rb, rrep);
  if (!is_cocycle(cx, 2, RBCochain{2, psi, chi}.to_flat()))
    throw std::logic_error("cocycle_from_extension: extracted pair not a cocycle");
  return {psi, chi};
}

std::optional<Matrix> extensions_isomorphic(const WeightedRBLie& rb,
                                            const RBLieRepresentation& rrep,
                                            const AbelianExtension& e1,
                                            const AbelianExtension& e2) {
  std::size_t g = rb.g.dim(), v = rrep.rep.module_dim;
  if (e1.total.g.dim() != g + v || e2.total.g.dim() != g + v)
    throw std::invalid_argument("extensions_isomorphic: mismatched underlying data");
  auto [psi1, chi1] = cocycle_from_extension(rb, rrep, e1);
  auto [psi2, chi2] = cocycle_from_extension(rb, rrep, e2);
  RBComplex cx(rb, rrep);
  auto prim = cohomologous(cx, 2, RBCochain{2, psi1, chi1}.to_flat(),
                           RBCochain{2, psi2, chi2}.to_flat());
  if (!prim) return std::nullopt;
  RBCochain p = RBCochain::from_flat(1, g, v, *prim);
  CECochain gamma_prime =
      p.f + delta_ce(rb.g, rrep.rep, vec_as_cochain(p.gpart->values[0], g));
  // phi0(x, u) = (x, u + gamma'(x)) maps ext(c1) to ext(c2)
  Matrix phi0 = Matrix::identity(g + v);
  Matrix gp = matrix_from_cochain(gamma_prime);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t t = 0; t < v; ++t) phi0(g + t, i) = gp(t, i);
  auto assemble = [&](const AbelianExtension& e) {
    Matrix a(g + v, g + v);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t r = 0; r < g + v; ++r) a(r, i) = e.section(r, i);
    for (std::size_t u = 0; u < v; ++u)
      for (std::size_t r = 0; r < g + v; ++r) a(r, g + u) = e.incl(r, u);
    return a;
  };
  Matrix a1 = assemble(e1), a2 = assemble(e2);
  auto a1_inv = inverse(a1);
  if (!a1_inv)
    throw std::invalid_argument("extensions_isomorphic: degenerate extension maps");
  Matrix iso = a2 * phi0 * *a1_inv;
  if (!morphism_check(e1.total, e2.total, iso) ||
      !(iso * e1.incl - e2.incl).is_zero() ||
      !(e2.proj * iso - e1.proj).is_zero() || !inverse(iso))
    throw std::logic_error("extensions_isomorphic: constructed map failed checks");
  return iso;
}

GaugeTransform GaugeTransform::identity(std::size_t order, std::size_t dim) {
  GaugeTransform t;
  t.order = order;
  t.phi.assign(order + 1, Matrix::zero(dim, dim));
  t.phi[0] = Matrix::identity(dim);
  return t;
}

GaugeTransform compose_gauge(const GaugeTransform& a, const GaugeTransform& b) {
  std::size_t order = std::min(a.order, b.order);
  std::size_t dim = a.phi[0].rows();
  GaugeTransform c = GaugeTransform::identity(order, dim);
  for (std::size_t n = 0; n <= order; ++n) {
    Matrix acc = Matrix::zero(dim, dim);
    for (std::size_t i = 0; i <= n; ++i) acc = acc + a.phi[i] * b.phi[n - i];
    c.phi[n] = std::move(acc);
  }
  return c;
}

GaugeTransform inverse_gauge(const GaugeTransform& a) {
  std::size_t dim = a.phi[0].rows();
  GaugeTransform inv = GaugeTransform::identity(a.order, dim);
  for (std::size_t n = 1; n <= a.order; ++n) {
    Matrix acc = Matrix::zero(dim, dim);
    for (std::size_t i = 0; i < n; ++i) acc = acc + inv.phi[i] * a.phi[n - i];
    inv.phi[n] = -acc;
  }
  return inv;
}

namespace {

void check_deformation_shapes(const WeightedRBLie& rb,
                              const TruncatedDeformation& d) {
  std::size_t g = rb.g.dim();
  if (d.mu.size() != d.order + 1 || d.T.size() != d.order + 1)
    throw std::invalid_argument("deformation: order lists of unequal length");
  for (const auto& m : d.mu)
    if (m.degree != 2 || m.g_dim != g || m.v_dim != g)
      throw std::invalid_argument("deformation: mu coefficient shape mismatch");
  for (const auto& t : d.T)
    if (t.rows() != g || t.cols() != g)
      throw std::invalid_argument("deformation: T coefficient shape mismatch");
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      if (d.mu[0].eval_basis({i, j}) != rb.g.bracket_basis(i, j))
        throw std::invalid_argument("deformation: mu_0 is not the base bracket");
  if (!(d.T[0] - rb.T).is_zero())
    throw std::invalid_argument("deformation: T_0 is not the base operator");
}

}  // namespace

Certificate check_deformation(const WeightedRBLie& rb,
                              const TruncatedDeformation& d) {
  check_deformation_shapes(rb, d);
  std::size_t g = rb.g.dim();
  auto basis = [&](std::size_t i) { return unit_vec(g, i); };
  for (std::size_t n = 0; n <= d.order; ++n) {
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j)
        for (std::size_t k = j + 1; k < g; ++k) {
          Vec acc(g);
          for (std::size_t a = 0; a <= n; ++a) {
            std::size_t b = n - a;
            acc += d.mu[a].eval({basis(i), d.mu[b].eval({basis(j), basis(k)})});
            acc += d.mu[a].eval({basis(j), d.mu[b].eval({basis(k), basis(i)})});
            acc += d.mu[a].eval({basis(k), d.mu[b].eval({basis(i), basis(j)})});
          }
          if (!is_zero(acc))
            return Certificate::fail("deformation-jacobi", {n, i, j, k}, acc);
        }
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j) {
        Vec acc(g);
        for (std::size_t a = 0; a <= n; ++a)
          for (std::size_t b = 0; a + b <= n; ++b) {
            std::size_t c = n - a - b;
            acc += d.mu[a].eval(
                {d.T[b] * basis(i), d.T[c] * basis(j)});
            Vec inner = d.mu[b].eval({d.T[c] * basis(i), basis(j)}) +
                        d.mu[b].eval({basis(i), d.T[c] * basis(j)});
            acc = acc - d.T[a] * inner;
          }
        for (std::size_t a = 0; a <= n; ++a)
          acc = acc - rb.weight * (d.T[a] * d.mu[n - a].eval_basis({i, j}));
        if (!is_zero(acc))
          return Certificate::fail("deformation-rb", {n, i, j}, acc);
      }
  }
  return Certificate::pass();
}

std::pair<RBCochain, bool> infinitesimal(const WeightedRBLie& rb,
                                         const TruncatedDeformation& d) {
  check_deformation_shapes(rb, d);
  if (d.order < 1)
    throw std::invalid_argument("infinitesimal: deformation has no order-1 term");
  RBCochain c{2, d.mu[1], cochain_from_matrix(d.T[1])};
  RBLieRepresentation adj{adjoint_rep(rb.g), rb.T};
  RBComplex cx(rb, adj);
  return {c, is_cocycle(cx, 2, c.to_flat())};
}

TruncatedDeformation apply_gauge(const WeightedRBLie& rb,
                                 const TruncatedDeformation& d,
                                 const GaugeTransform& gauge) {
  check_deformation_shapes(rb, d);
  std::size_t g = rb.g.dim(), N = d.order;
  if (gauge.order < N)
    throw std::invalid_argument("apply_gauge: gauge order below deformation order");
  if (!(gauge.phi[0] - Matrix::identity(g)).is_zero())
    throw std::invalid_argument("apply_gauge: phi_0 must be the identity");
  GaugeTransform inv = inverse_gauge(gauge);

  TruncatedDeformation out;
  out.order = N;
  for (std::size_t n = 0; n <= N; ++n) {
    CECochain mu_n = CECochain::zero(2, g, g);
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = 0; a + b <= n; ++b)
        for (std::size_t c = 0; a + b + c <= n; ++c) {
          std::size_t e = n - a - b - c;
          for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = i + 1; j < g; ++j) {
              Vec w = d.mu[b].eval({gauge.phi[c].column(i), gauge.phi[e].column(j)});
              mu_n.at({i, j}) += inv.phi[a] * w;
            }
        }
    out.mu.push_back(std::move(mu_n));
    Matrix t_n = Matrix::zero(g, g);
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = 0; a + b <= n; ++b)
        t_n = t_n + inv.phi[a] * d.T[b] * gauge.phi[n - a - b];
    out.T.push_back(std::move(t_n));
  }

  if (auto cert = check_deformation(rb, out); !cert)
    throw std::logic_error("apply_gauge: output fails the deformation systems: " +
                           cert.message());
  // equivalence systems between d (unprimed) and out (primed)
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j) {
        Vec lhs(g), rhs(g);
        for (std::size_t a = 0; a <= n; ++a)
          lhs += gauge.phi[a] * out.mu[n - a].eval_basis({i, j});
        for (std::size_t a = 0; a <= n; ++a)
          for (std::size_t b = 0; a + b <= n; ++b)
            rhs += d.mu[a].eval(
                {gauge.phi[b].column(i), gauge.phi[n - a - b].column(j)});
        if (!is_zero(lhs - rhs))
          throw std::logic_error("apply_gauge: equivalence system (bracket) failed");
      }
    Matrix lhs = Matrix::zero(g, g), rhs = Matrix::zero(g, g);
    for (std::size_t a = 0; a <= n; ++a) {
      lhs = lhs + gauge.phi[a] * out.T[n - a];
      rhs = rhs + d.T[a] * gauge.phi[n - a];
    }
    if (!(lhs - rhs).is_zero())
      throw std::logic_error("apply_gauge: equivalence system (operator) failed");
  }
  return out;
}

TrivializationResult trivialize(const WeightedRBLie& rb,
                                const TruncatedDeformation& d) {
  if (auto cert = check_deformation(rb, d); !cert)
    throw MathError("trivialize: input is not a deformation: " + cert.message());
  std::size_t g = rb.g.dim(), N = d.order;
  RBLieRepresentation adj{adjoint_rep(rb.g), rb.T};
  RBComplex cx(rb, adj);
  TruncatedDeformation current = d;
  GaugeTransform composite = GaugeTransform::identity(N, g);
  for (std::size_t r = 1; r <= N; ++r) {
    RBCochain term{2, current.mu[r], cochain_from_matrix(current.T[r])};
    if (term.is_zero()) continue;
    Vec flat = term.to_flat();
    auto pre = is_coboundary(cx, 2, flat);
    if (!pre) {
      TrivializationResult res;
      res.blocking_order = r;
      res.blocking_class = ColumnSpace(cx.differential_matrix(1)).reduce(flat);
      return res;
    }
    RBCochain p = RBCochain::from_flat(1, g, g, *pre);
    CECochain psi_prime =
        p.f + delta_ce(rb.g, adj.rep, vec_as_cochain(p.gpart->values[0], g));
    GaugeTransform step = GaugeTransform::identity(N, g);
    step.phi[r] = -matrix_from_cochain(psi_prime);
    current = apply_gauge(rb, current, step);
    composite = compose_gauge(composite, step);
    if (!current.mu[r].is_zero() || !current.T[r].is_zero())
      throw std::logic_error("trivialize: gauge step did not clear its order");
  }
  TrivializationResult res;
  res.gauge = std::move(composite);
  return res;
}

}  // namespace rbl
