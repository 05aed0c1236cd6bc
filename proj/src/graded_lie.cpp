#include "rbl/graded_lie.hpp"

#include <algorithm>

namespace rbl {

Certificate check_paired(const PairedOperators& p) {
  std::size_t g = p.g.dim();
  if (p.T.rows() != g || p.T.cols() != g)
    throw std::invalid_argument("check_paired: T shape mismatch");
  if (p.calT.rows() != p.rep.module_dim || p.calT.cols() != p.rep.module_dim)
    throw std::invalid_argument("check_paired: calT shape mismatch");
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      Vec ti = p.T.column(i), tj = p.T.column(j);
      Vec inner = p.g.bracket(ti, unit_vec(g, j)) +
                  p.g.bracket(unit_vec(g, i), tj) +
                  p.weight * p.g.bracket_basis(i, j);
      Vec r = p.g.bracket(ti, tj) - p.T * inner;
      if (!is_zero(r)) return Certificate::fail("paired-operator", {i, j}, r);
    }
  for (std::size_t i = 0; i < g; ++i) {
    Matrix rti = p.rep.act(p.T.column(i));
    Matrix diff =
        rti * p.calT -
        p.calT * (rti + p.rep.rho[i] * p.calT + p.weight * p.rep.rho[i]);
    if (!diff.is_zero())
      for (std::size_t col = 0; col < p.rep.module_dim; ++col) {
        Vec rc = diff.column(col);
        if (!is_zero(rc)) return Certificate::fail("paired-representation", {i, col}, rc);
      }
  }
  return Certificate::pass();
}

LieAlgebra lambda_double(const LieAlgebra& g, const Rational& weight) {
  std::size_t n = g.dim();
  LieAlgebra d(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = g.c(i, j, k);
        if (c == 0) continue;
        d.c(i, j, k) = c;
        d.c(i, n + j, n + k) = c;
        d.c(n + i, j, n + k) = c;
        d.c(n + i, n + j, n + k) = weight * c;
      }
  return d;
}

LieRepresentation lambda_double_rep(const LieAlgebra& g,
                                    const LieRepresentation& rep,
                                    const Rational& weight) {
  std::size_t v = rep.module_dim;
  LieRepresentation d;
  d.module_dim = 2 * v;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix m(2 * v, 2 * v);
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = 0; b < v; ++b) {
        m(a, b) = rep.rho[i](a, b);
        m(v + a, v + b) = rep.rho[i](a, b);
      }
    d.rho.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix m(2 * v, 2 * v);
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = 0; b < v; ++b) {
        m(v + a, b) = rep.rho[i](a, b);
        m(v + a, v + b) = weight * rep.rho[i](a, b);
      }
    d.rho.push_back(std::move(m));
  }
  return d;
}

Certificate graph_subalgebra_check(const PairedOperators& p) {
  std::size_t g = p.g.dim(), v = p.rep.module_dim;
  LieAlgebra big = semidirect_lie(lambda_double(p.g, p.weight),
                                  lambda_double_rep(p.g, p.rep, p.weight));
  std::size_t total = 2 * g + 2 * v;
  std::vector<Vec> graph;
  for (std::size_t i = 0; i < g; ++i) {
    Vec col(total);
    Vec ti = p.T.column(i);
    for (std::size_t k = 0; k < g; ++k) col[k] = ti[k];
    col[g + i] = 1;
    graph.push_back(std::move(col));
  }
  for (std::size_t u = 0; u < v; ++u) {
    Vec col(total);
    Vec cu = p.calT.column(u);
    for (std::size_t k = 0; k < v; ++k) col[2 * g + k] = cu[k];
    col[2 * g + v + u] = 1;
    graph.push_back(std::move(col));
  }
  ColumnSpace span(Matrix::from_columns(graph));
  for (std::size_t a = 0; a < graph.size(); ++a)
    for (std::size_t b = a + 1; b < graph.size(); ++b) {
      Vec w = big.bracket(graph[a], graph[b]);
      Vec r = span.reduce(w);
      if (!is_zero(r)) return Certificate::fail("graph-closure", {a, b}, r);
    }
  return Certificate::pass();
}

MultiMap MultiMap::zero(std::size_t arity, std::size_t dim) {
  if (arity == 0) throw std::invalid_argument("MultiMap: arity must be positive");
  MultiMap f;
  f.arity = arity;
  f.dim = dim;
  f.values.assign(binom(dim, arity), Vec(dim));
  return f;
}

const Vec& MultiMap::at(const std::vector<std::size_t>& sorted_idx) const {
  return values[wedge_rank(sorted_idx, dim)];
}

Vec& MultiMap::at(const std::vector<std::size_t>& sorted_idx) {
  return values[wedge_rank(sorted_idx, dim)];
}

Vec MultiMap::eval_basis(std::vector<std::size_t> idx) const {
  int sign = sort_sign(idx);
  if (sign == 0) return Vec(dim);
  const Vec& v = values[wedge_rank(idx, dim)];
  return sign == 1 ? v : Rational(-1) * v;
}

bool MultiMap::is_zero() const {
  return std::all_of(values.begin(), values.end(),
                     [](const Vec& v) { return rbl::is_zero(v); });
}

MultiMap MultiMap::operator+(const MultiMap& o) const {
  MultiMap r(*this);
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

MultiMap MultiMap::operator-(const MultiMap& o) const {
  MultiMap r(*this);
  for (std::size_t i = 0; i < values.size(); ++i)
    r.values[i] = r.values[i] - o.values[i];
  return r;
}

MultiMap operator*(const Rational& s, const MultiMap& f) {
  MultiMap r(f);
  for (auto& v : r.values) v = s * v;
  return r;
}

namespace {

/// f o g over the (arity_g, arity_f - 1) unshuffles.
MultiMap diamond(const MultiMap& f, const MultiMap& g) {
  std::size_t m = f.arity, n = g.arity, M = m + n - 1;
  MultiMap out = MultiMap::zero(M, f.dim);
  if (M > f.dim) return out;
  std::size_t full = std::size_t{1} << M;
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    std::vector<std::size_t> tau = wedge_unrank(r, M, f.dim);
    Vec acc(f.dim);
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n) continue;
      std::vector<std::size_t> sub, rest;
      sub.reserve(n);
      rest.reserve(M - n);
      long inversions = 0;
      for (std::size_t p = 0; p < M; ++p) {
        if ((mask >> p) & 1) {
          inversions += static_cast<long>(p) - static_cast<long>(sub.size());
          sub.push_back(tau[p]);
        } else {
          rest.push_back(tau[p]);
        }
      }
      int sign = inversions % 2 == 0 ? 1 : -1;
      const Vec& w = g.at(sub);
      if (rbl::is_zero(w)) continue;
      std::vector<std::size_t> idx(m);
      std::copy(rest.begin(), rest.end(), idx.begin() + 1);
      for (std::size_t t = 0; t < f.dim; ++t) {
        if (w[t] == 0) continue;
        idx[0] = t;
        Vec term = f.eval_basis(idx);
        Rational coeff = sign == 1 ? w[t] : -w[t];
        for (std::size_t q = 0; q < f.dim; ++q) acc[q] += coeff * term[q];
      }
    }
    out.values[r] = std::move(acc);
  }
  return out;
}

}  // namespace

MultiMap nr_bracket(const MultiMap& f, const MultiMap& h) {
  if (f.dim != h.dim) throw std::invalid_argument("nr_bracket: space mismatch");
  MultiMap fh = diamond(f, h);
  MultiMap hf = diamond(h, f);
  bool flip = ((f.arity - 1) * (h.arity - 1)) % 2 == 1;
  return flip ? fh + hf : fh - hf;
}

MultiMap build_theta(const LieAlgebra& g, const LieRepresentation& rep) {
  BlockSpace bs{g.dim(), rep.module_dim};
  MultiMap th = MultiMap::zero(2, bs.total());
  for (std::size_t i = 0; i < bs.g_dim; ++i)
    for (std::size_t j = 0; j < bs.g_dim; ++j) {
      Vec w = g.bracket_basis(i, j);
      if (i < j) {  // mu on the unprimed block
        Vec& val = th.at({bs.g_at(i), bs.g_at(j)});
        for (std::size_t k = 0; k < bs.g_dim; ++k) val[bs.g_at(k)] = w[k];
      }
      // ad': g x g' -> g'
      Vec& val = th.at({bs.g_at(i), bs.gp_at(j)});
      for (std::size_t k = 0; k < bs.g_dim; ++k) val[bs.gp_at(k)] = w[k];
    }
  for (std::size_t i = 0; i < bs.g_dim; ++i)
    for (std::size_t u = 0; u < bs.v_dim; ++u) {
      Vec w = rep.rho[i].column(u);
      {  // rho: g x V -> V
        Vec& val = th.at({bs.g_at(i), bs.v_at(u)});
        for (std::size_t t = 0; t < bs.v_dim; ++t) val[bs.v_at(t)] = w[t];
      }
      {  // rho': g x V' -> V'
        Vec& val = th.at({bs.g_at(i), bs.vp_at(u)});
        for (std::size_t t = 0; t < bs.v_dim; ++t) val[bs.vp_at(t)] = w[t];
      }
      {  // varrho: g' x V -> V'
        Vec& val = th.at({bs.gp_at(i), bs.v_at(u)});
        for (std::size_t t = 0; t < bs.v_dim; ++t) val[bs.vp_at(t)] = w[t];
      }
    }
  return th;
}

MultiMap build_theta_prime(const LieAlgebra& g, const LieRepresentation& rep) {
  BlockSpace bs{g.dim(), rep.module_dim};
  MultiMap th = MultiMap::zero(2, bs.total());
  for (std::size_t i = 0; i < bs.g_dim; ++i)
    for (std::size_t j = i + 1; j < bs.g_dim; ++j) {
      Vec w = g.bracket_basis(i, j);
      Vec& val = th.at({bs.gp_at(i), bs.gp_at(j)});
      for (std::size_t k = 0; k < bs.g_dim; ++k) val[bs.gp_at(k)] = -w[k];
    }
  for (std::size_t i = 0; i < bs.g_dim; ++i)
    for (std::size_t u = 0; u < bs.v_dim; ++u) {
      Vec w = rep.rho[i].column(u);
      Vec& val = th.at({bs.gp_at(i), bs.vp_at(u)});
      for (std::size_t t = 0; t < bs.v_dim; ++t) val[bs.vp_at(t)] = -w[t];
    }
  return th;
}

RBpCochain RBpCochain::zero(std::size_t n, std::size_t g_dim, std::size_t v_dim) {
  if (n == 0) throw std::invalid_argument("RBpCochain: degree must be >= 1");
  RBpCochain c;
  c.n = n;
  c.g_dim = g_dim;
  c.v_dim = v_dim;
  c.part1 = CECochain::zero(n, g_dim, g_dim);
  c.part2.assign(binom(g_dim, n - 1) * v_dim, Vec(v_dim));
  return c;
}

RBpCochain RBpCochain::from_pair(const PairedOperators& p) {
  RBpCochain c = zero(1, p.g.dim(), p.rep.module_dim);
  for (std::size_t j = 0; j < p.g.dim(); ++j) c.part1.values[j] = p.T.column(j);
  for (std::size_t u = 0; u < p.rep.module_dim; ++u)
    c.part2[u] = p.calT.column(u);
  return c;
}

Vec& RBpCochain::part2_at(const std::vector<std::size_t>& sorted_g_idx,
                          std::size_t u) {
  return part2[wedge_rank(sorted_g_idx, g_dim) * v_dim + u];
}

std::size_t RBpCochain::flat_dim() const {
  return part1.flat_dim() + part2.size() * v_dim;
}

Vec RBpCochain::to_flat() const {
  Vec flat = part1.to_flat();
  for (const auto& v : part2) flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

RBpCochain RBpCochain::from_flat(std::size_t n, std::size_t g_dim,
                                 std::size_t v_dim, const Vec& flat) {
  RBpCochain c = zero(n, g_dim, v_dim);
  if (flat.size() != c.flat_dim())
    throw std::invalid_argument("RBpCochain::from_flat: length mismatch");
  std::size_t fd = c.part1.flat_dim();
  c.part1 = CECochain::from_flat(n, g_dim, g_dim, Vec(flat.begin(), flat.begin() + fd));
  for (std::size_t r = 0; r < c.part2.size(); ++r)
    for (std::size_t t = 0; t < v_dim; ++t)
      c.part2[r][t] = flat[fd + r * v_dim + t];
  return c;
}

RBpCochain RBpCochain::operator+(const RBpCochain& o) const {
  RBpCochain r(*this);
  r.part1 = r.part1 + o.part1;
  for (std::size_t i = 0; i < part2.size(); ++i) r.part2[i] += o.part2[i];
  return r;
}

RBpCochain operator*(const Rational& s, const RBpCochain& c) {
  RBpCochain r(c);
  r.part1 = s * r.part1;
  for (auto& v : r.part2) v = s * v;
  return r;
}

bool RBpCochain::is_zero() const {
  return part1.is_zero() &&
         std::all_of(part2.begin(), part2.end(),
                     [](const Vec& v) { return rbl::is_zero(v); });
}

MultiMap embed(const BlockSpace& bs, const RBpCochain& c) {
  MultiMap f = MultiMap::zero(c.n, bs.total());
  // all-primed-g tuples carry part1, valued in the g block
  std::size_t count1 = binom(bs.g_dim, c.n);
  for (std::size_t r = 0; r < count1; ++r) {
    std::vector<std::size_t> tau = wedge_unrank(r, c.n, bs.g_dim);
    std::vector<std::size_t> idx(c.n);
    for (std::size_t p = 0; p < c.n; ++p) idx[p] = bs.gp_at(tau[p]);
    Vec& val = f.at(idx);
    const Vec& w = c.part1.values[r];
    for (std::size_t k = 0; k < bs.g_dim; ++k) val[bs.g_at(k)] = w[k];
  }
  // (n-1) primed-g arguments and one primed-V argument carry part2
  std::size_t count2 = binom(bs.g_dim, c.n - 1);
  for (std::size_t r = 0; r < count2; ++r) {
    std::vector<std::size_t> tau = wedge_unrank(r, c.n - 1, bs.g_dim);
    for (std::size_t u = 0; u < bs.v_dim; ++u) {
      std::vector<std::size_t> idx(c.n);
      for (std::size_t p = 0; p + 1 < c.n; ++p) idx[p] = bs.gp_at(tau[p]);
      idx[c.n - 1] = bs.vp_at(u);
      Vec& val = f.at(idx);
      const Vec& w = c.part2[r * bs.v_dim + u];
      for (std::size_t t = 0; t < bs.v_dim; ++t) val[bs.v_at(t)] = w[t];
    }
  }
  return f;
}

RBpCochain project(const BlockSpace& bs, const MultiMap& f, std::size_t n,
                   bool verify_support) {
  RBpCochain c = RBpCochain::zero(n, bs.g_dim, bs.v_dim);
  std::size_t count1 = binom(bs.g_dim, n);
  for (std::size_t r = 0; r < count1; ++r) {
    std::vector<std::size_t> tau = wedge_unrank(r, n, bs.g_dim);
    std::vector<std::size_t> idx(n);
    for (std::size_t p = 0; p < n; ++p) idx[p] = bs.gp_at(tau[p]);
    const Vec& val = f.at(idx);
    for (std::size_t k = 0; k < bs.g_dim; ++k) c.part1.values[r][k] = val[bs.g_at(k)];
  }
  std::size_t count2 = binom(bs.g_dim, n - 1);
  for (std::size_t r = 0; r < count2; ++r) {
    std::vector<std::size_t> tau = wedge_unrank(r, n - 1, bs.g_dim);
    for (std::size_t u = 0; u < bs.v_dim; ++u) {
      std::vector<std::size_t> idx(n);
      for (std::size_t p = 0; p + 1 < n; ++p) idx[p] = bs.gp_at(tau[p]);
      idx[n - 1] = bs.vp_at(u);
      const Vec& val = f.at(idx);
      for (std::size_t t = 0; t < bs.v_dim; ++t)
        c.part2[r * bs.v_dim + u][t] = val[bs.v_at(t)];
    }
  }
  if (verify_support && !(embed(bs, c) == f))
    throw std::logic_error("project: map does not lie in the pair-cochain subspace");
  return c;
}

RBpCochain derived_bracket(const LieAlgebra& g, const LieRepresentation& rep,
                           const RBpCochain& c1, const RBpCochain& c2) {
  BlockSpace bs{g.dim(), rep.module_dim};
  MultiMap th = build_theta(g, rep);
  MultiMap inner = nr_bracket(th, embed(bs, c1));
  MultiMap outer = nr_bracket(inner, embed(bs, c2));
  if (c1.n % 2 == 1) outer = Rational(-1) * outer;
  return project(bs, outer, c1.n + c2.n);
}

RBpCochain dd(const LieAlgebra& g, const LieRepresentation& rep,
              const Rational& weight, const RBpCochain& c) {
  BlockSpace bs{g.dim(), rep.module_dim};
  MultiMap tp = build_theta_prime(g, rep);
  MultiMap res = weight * nr_bracket(tp, embed(bs, c));
  return project(bs, res, c.n + 1);
}

Certificate mc_check(const PairedOperators& p) {
  RBpCochain t = RBpCochain::from_pair(p);
  RBpCochain engine = dd(p.g, p.rep, p.weight, t) +
                      Rational(1, 2) * derived_bracket(p.g, p.rep, t, t);

  // closed forms from the Maurer-Cartan theorem proof
  std::size_t g = p.g.dim(), v = p.rep.module_dim;
  RBpCochain closed = RBpCochain::zero(2, g, v);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      Vec ti = p.T.column(i), tj = p.T.column(j);
      Vec w = p.weight * (p.T * p.g.bracket_basis(i, j)) +
              p.T * (p.g.bracket(ti, unit_vec(g, j)) +
                     p.g.bracket(unit_vec(g, i), tj)) -
              p.g.bracket(ti, tj);
      closed.part1.at({i, j}) = std::move(w);
    }
  for (std::size_t i = 0; i < g; ++i) {
    Matrix rti = p.rep.act(p.T.column(i));
    Matrix m = p.weight * (p.calT * p.rep.rho[i]) +
               p.calT * (rti + p.rep.rho[i] * p.calT) - rti * p.calT;
    for (std::size_t u = 0; u < v; ++u) closed.part2_at({i}, u) = m.column(u);
  }
  if (!(engine == closed))
    throw std::logic_error("mc_check: engine and closed-form routes disagree");

  if (engine.is_zero()) return Certificate::pass();
  for (std::size_t r = 0; r < engine.part1.values.size(); ++r)
    if (!is_zero(engine.part1.values[r]))
      return Certificate::fail("maurer-cartan-1", wedge_unrank(r, 2, g),
                               engine.part1.values[r]);
  for (std::size_t r = 0; r < engine.part2.size(); ++r)
    if (!is_zero(engine.part2[r]))
      return Certificate::fail("maurer-cartan-2", {r / v, r % v}, engine.part2[r]);
  return Certificate::pass();
}

RBpCochain d_T(const PairedOperators& p, const RBpCochain& c) {
  if (auto cert = check_paired(p); !cert)
    throw MathError("d_T: not a paired operator: " + cert.message());
  RBpCochain t = RBpCochain::from_pair(p);
  return dd(p.g, p.rep, p.weight, c) + derived_bracket(p.g, p.rep, t, c);
}

RBpComplex::RBpComplex(PairedOperators p) : p_(std::move(p)) {
  if (auto cert = check_paired(p_); !cert)
    throw MathError("RBpComplex: not a paired operator: " + cert.message());
}

std::size_t RBpComplex::dim(std::size_t degree) const {
  if (degree == 0) return 0;
  std::size_t g = p_.g.dim(), v = p_.rep.module_dim;
  return binom(g, degree) * g + binom(g, degree - 1) * v * v;
}

Vec RBpComplex::apply(std::size_t degree, const Vec& flat) const {
  if (degree == 0) return Vec(dim(1));
  RBpCochain c =
      RBpCochain::from_flat(degree, p_.g.dim(), p_.rep.module_dim, flat);
  RBpCochain t = RBpCochain::from_pair(p_);
  RBpCochain out = dd(p_.g, p_.rep, p_.weight, c) +
                   derived_bracket(p_.g, p_.rep, t, c);
  return out.to_flat();
}

CohomologyReport rbp_cohomology(const PairedOperators& p, std::size_t degree) {
  return cohomology(RBpComplex(p), degree);
}

Certificate mc_deformation_check(const PairedOperators& p, const Matrix& t_inc,
                                 const Matrix& calt_inc) {
  PairedOperators inc{p.g, p.rep, p.weight, t_inc, calt_inc};
  RBpCochain tp = RBpCochain::from_pair(inc);
  RBpCochain res = d_T(p, tp) + Rational(1, 2) * derived_bracket(p.g, p.rep, tp, tp);
  std::size_t g = p.g.dim(), v = p.rep.module_dim;
  for (std::size_t r = 0; r < res.part1.values.size(); ++r)
    if (!is_zero(res.part1.values[r]))
      return Certificate::fail("mc-deformation-1", wedge_unrank(r, 2, g),
                               res.part1.values[r]);
  for (std::size_t r = 0; r < res.part2.size(); ++r)
    if (!is_zero(res.part2[r]))
      return Certificate::fail("mc-deformation-2", {r / v, r % v}, res.part2[r]);
  return Certificate::pass();
}

}  // namespace rbl
