#include "rbl/cochain.hpp"

#include <algorithm>

namespace rbl {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t wedge_rank(const std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size(), rank = 0, next = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    for (std::size_t v = next; v < idx[pos]; ++v)
      rank += binom(n - 1 - v, k - 1 - pos);
    next = idx[pos] + 1;
  }
  return rank;
}

std::vector<std::size_t> wedge_unrank(std::size_t rank, std::size_t k,
                                      std::size_t n) {
  std::vector<std::size_t> idx(k);
  std::size_t v = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    for (;; ++v) {
      std::size_t below = binom(n - 1 - v, k - 1 - pos);
      if (rank < below) break;
      rank -= below;
    }
    idx[pos] = v++;
  }
  return idx;
}

int sort_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

CECochain CECochain::zero(std::size_t degree, std::size_t g_dim,
                          std::size_t v_dim) {
  CECochain f;
  f.degree = degree;
  f.g_dim = g_dim;
  f.v_dim = v_dim;
  f.values.assign(binom(g_dim, degree), Vec(v_dim));
  return f;
}

Vec& CECochain::at(const std::vector<std::size_t>& sorted_idx) {
  return values[wedge_rank(sorted_idx, g_dim)];
}

Vec CECochain::eval_basis(std::vector<std::size_t> idx) const {
  int sign = sort_sign(idx);
  if (sign == 0) return Vec(v_dim);
  const Vec& v = values[wedge_rank(idx, g_dim)];
  return sign == 1 ? v : Rational(-1) * v;
}

Vec CECochain::eval(const std::vector<Vec>& args) const {
  // Multilinear expansion over nonzero coordinates of each argument.
  Vec acc(v_dim);
  std::vector<std::size_t> idx(degree);
  auto rec = [&](auto&& self, std::size_t pos, const Rational& coeff) -> void {
    if (pos == degree) {
      Vec term = eval_basis(idx);
      for (std::size_t t = 0; t < v_dim; ++t) acc[t] += coeff * term[t];
      return;
    }
    for (std::size_t i = 0; i < g_dim; ++i) {
      if (args[pos][i] == 0) continue;
      idx[pos] = i;
      self(self, pos + 1, coeff * args[pos][i]);
    }
  };
  rec(rec, 0, Rational(1));
  return acc;
}

bool CECochain::is_zero() const {
  return std::all_of(values.begin(), values.end(),
                     [](const Vec& v) { return rbl::is_zero(v); });
}

Vec CECochain::to_flat() const {
  Vec flat;
  flat.reserve(flat_dim());
  for (const auto& v : values) flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

CECochain CECochain::from_flat(std::size_t degree, std::size_t g_dim,
                               std::size_t v_dim, const Vec& flat) {
  CECochain f = zero(degree, g_dim, v_dim);
  if (flat.size() != f.flat_dim())
    throw std::invalid_argument("CECochain::from_flat: length mismatch");
  for (std::size_t r = 0; r < f.values.size(); ++r)
    for (std::size_t t = 0; t < v_dim; ++t) f.values[r][t] = flat[r * v_dim + t];
  return f;
}

CECochain CECochain::operator+(const CECochain& o) const {
  CECochain r(*this);
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

CECochain CECochain::operator-(const CECochain& o) const {
  CECochain r(*this);
  for (std::size_t i = 0; i < values.size(); ++i)
    r.values[i] = r.values[i] - o.values[i];
  return r;
}

CECochain operator*(const Rational& s, const CECochain& f) {
  CECochain r(f);
  for (auto& v : r.values) v = s * v;
  return r;
}

HochschildCochain HochschildCochain::zero(std::size_t degree, std::size_t a_dim,
                                          std::size_t m_dim) {
  HochschildCochain f;
  f.degree = degree;
  f.a_dim = a_dim;
  f.m_dim = m_dim;
  std::size_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) count *= a_dim;
  f.values.assign(count, Vec(m_dim));
  return f;
}

std::size_t HochschildCochain::tuple_index(
    const std::vector<std::size_t>& idx) const {
  std::size_t r = 0;
  for (std::size_t i : idx) r = r * a_dim + i;
  return r;
}

Vec& HochschildCochain::at(const std::vector<std::size_t>& idx) {
  return values[tuple_index(idx)];
}

const Vec& HochschildCochain::at(const std::vector<std::size_t>& idx) const {
  return values[tuple_index(idx)];
}

Vec HochschildCochain::eval(const std::vector<Vec>& args) const {
  Vec acc(m_dim);
  std::vector<std::size_t> idx(degree);
  auto rec = [&](auto&& self, std::size_t pos, const Rational& coeff) -> void {
    if (pos == degree) {
      const Vec& term = at(idx);
      for (std::size_t t = 0; t < m_dim; ++t) acc[t] += coeff * term[t];
      return;
    }
    for (std::size_t i = 0; i < a_dim; ++i) {
      if (args[pos][i] == 0) continue;
      idx[pos] = i;
      self(self, pos + 1, coeff * args[pos][i]);
    }
  };
  rec(rec, 0, Rational(1));
  return acc;
}

bool HochschildCochain::is_zero() const {
  return std::all_of(values.begin(), values.end(),
                     [](const Vec& v) { return rbl::is_zero(v); });
}

Vec HochschildCochain::to_flat() const {
  Vec flat;
  flat.reserve(flat_dim());
  for (const auto& v : values) flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

HochschildCochain HochschildCochain::from_flat(std::size_t degree,
                                               std::size_t a_dim,
                                               std::size_t m_dim,
                                               const Vec& flat) {
  HochschildCochain f = zero(degree, a_dim, m_dim);
  if (flat.size() != f.flat_dim())
    throw std::invalid_argument("HochschildCochain::from_flat: length mismatch");
  for (std::size_t r = 0; r < f.values.size(); ++r)
    for (std::size_t t = 0; t < m_dim; ++t) f.values[r][t] = flat[r * m_dim + t];
  return f;
}

HochschildCochain HochschildCochain::operator+(const HochschildCochain& o) const {
  HochschildCochain r(*this);
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

HochschildCochain HochschildCochain::operator-(const HochschildCochain& o) const {
  HochschildCochain r(*this);
  for (std::size_t i = 0; i < values.size(); ++i)
    r.values[i] = r.values[i] - o.values[i];
  return r;
}

HochschildCochain operator*(const Rational& s, const HochschildCochain& f) {
  HochschildCochain r(f);
  for (auto& v : r.values) v = s * v;
  return r;
}

RBCochain RBCochain::zero(std::size_t n, std::size_t g_dim, std::size_t v_dim) {
  RBCochain c;
  c.n = n;
  c.f = CECochain::zero(n, g_dim, v_dim);
  if (n >= 1) c.gpart = CECochain::zero(n - 1, g_dim, v_dim);
  return c;
}

std::size_t RBCochain::flat_dim() const {
  return f.flat_dim() + (gpart ? gpart->flat_dim() : 0);
}

Vec RBCochain::to_flat() const {
  Vec flat = f.to_flat();
  if (gpart) {
    Vec g = gpart->to_flat();
    flat.insert(flat.end(), g.begin(), g.end());
  }
  return flat;
}

RBCochain RBCochain::from_flat(std::size_t n, std::size_t g_dim,
                               std::size_t v_dim, const Vec& flat) {
  RBCochain c = zero(n, g_dim, v_dim);
  std::size_t fd = c.f.flat_dim();
  if (flat.size() != c.flat_dim())
    throw std::invalid_argument("RBCochain::from_flat: length mismatch");
  c.f = CECochain::from_flat(n, g_dim, v_dim, Vec(flat.begin(), flat.begin() + fd));
  if (c.gpart)
    *c.gpart = CECochain::from_flat(n - 1, g_dim, v_dim,
                                    Vec(flat.begin() + fd, flat.end()));
  return c;
}

RBCochain RBCochain::operator-(const RBCochain& o) const {
  RBCochain r(*this);
  r.f = r.f - o.f;
  if (r.gpart) *r.gpart = *r.gpart - *o.gpart;
  return r;
}

bool RBCochain::is_zero() const {
  return f.is_zero() && (!gpart || gpart->is_zero());
}

RBAssocCochain RBAssocCochain::zero(std::size_t n, std::size_t a_dim,
                                    std::size_t m_dim) {
  RBAssocCochain c;
  c.n = n;
  c.f = HochschildCochain::zero(n, a_dim, m_dim);
  if (n >= 1) c.gpart = HochschildCochain::zero(n - 1, a_dim, m_dim);
  return c;
}

std::size_t RBAssocCochain::flat_dim() const {
  return f.flat_dim() + (gpart ? gpart->flat_dim() : 0);
}

Vec RBAssocCochain::to_flat() const {
  Vec flat = f.to_flat();
  if (gpart) {
    Vec g = gpart->to_flat();
    flat.insert(flat.end(), g.begin(), g.end());
  }
  return flat;
}

RBAssocCochain RBAssocCochain::from_flat(std::size_t n, std::size_t a_dim,
                                         std::size_t m_dim, const Vec& flat) {
  RBAssocCochain c = zero(n, a_dim, m_dim);
  std::size_t fd = c.f.flat_dim();
  if (flat.size() != c.flat_dim())
    throw std::invalid_argument("RBAssocCochain::from_flat: length mismatch");
  c.f = HochschildCochain::from_flat(n, a_dim, m_dim,
                                     Vec(flat.begin(), flat.begin() + fd));
  if (c.gpart)
    *c.gpart = HochschildCochain::from_flat(n - 1, a_dim, m_dim,
                                            Vec(flat.begin() + fd, flat.end()));
  return c;
}

bool RBAssocCochain::is_zero() const {
  return f.is_zero() && (!gpart || gpart->is_zero());
}

namespace {

inline int parity_sign(std::size_t e) { return (e % 2 == 0) ? 1 : -1; }

Rational pow_weight(const Rational& w, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= w;
  return r;
}

}  // namespace

CECochain delta_ce(const LieAlgebra& g, const LieRepresentation& rep,
                   const CECochain& f) {
  if (f.g_dim != g.dim() || f.v_dim != rep.module_dim)
    throw std::invalid_argument("delta_ce: cochain shape mismatch");
  std::size_t n = f.degree;
  CECochain out = CECochain::zero(n + 1, f.g_dim, f.v_dim);
  if (out.values.empty() || binom(f.g_dim, n) == 0) return out;
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    std::vector<std::size_t> tau = wedge_unrank(r, n + 1, f.g_dim);
    Vec acc(f.v_dim);
    for (std::size_t i = 1; i <= n + 1; ++i) {
      std::vector<std::size_t> rest;
      rest.reserve(n);
      for (std::size_t p = 0; p < n + 1; ++p)
        if (p != i - 1) rest.push_back(tau[p]);
      Vec term = rep.rho[tau[i - 1]] * f.eval_basis(std::move(rest));
      int s = parity_sign(i + n);
      for (std::size_t t = 0; t < f.v_dim; ++t)
        acc[t] += s == 1 ? term[t] : -term[t];
    }
    for (std::size_t i = 1; i <= n + 1; ++i)
      for (std::size_t j = i + 1; j <= n + 1; ++j) {
        Vec w = g.bracket_basis(tau[i - 1], tau[j - 1]);
        if (rbl::is_zero(w)) continue;
        int s = parity_sign(i + j + n + 1);
        std::vector<std::size_t> rest;
        rest.reserve(n);
        for (std::size_t p = 0; p < n + 1; ++p)
          if (p != i - 1 && p != j - 1) rest.push_back(tau[p]);
        for (std::size_t k = 0; k < f.g_dim; ++k) {
          if (w[k] == 0) continue;
          std::vector<std::size_t> idx;
          idx.reserve(n);
          idx.push_back(k);
          idx.insert(idx.end(), rest.begin(), rest.end());
          Vec term = f.eval_basis(std::move(idx));
          Rational coeff = s == 1 ? w[k] : -w[k];
          for (std::size_t t = 0; t < f.v_dim; ++t) acc[t] += coeff * term[t];
        }
      }
    out.values[r] = std::move(acc);
  }
  return out;
}

CECochain partial_ce(const WeightedRBLie& rb, const RBLieRepresentation& rrep,
                     const CECochain& f) {
  return delta_ce(deformed_bracket(rb), rep_tilde(rb, rrep).rep, f);
}

CECochain phi(const WeightedRBLie& rb, const RBLieRepresentation& rrep,
              const CECochain& f) {
  if (f.g_dim != rb.g.dim() || f.v_dim != rrep.rep.module_dim)
    throw std::invalid_argument("phi: cochain shape mismatch");
  std::size_t n = f.degree;
  if (n == 0) return f;
  CECochain out = CECochain::zero(n, f.g_dim, f.v_dim);
  std::vector<Vec> t_cols(f.g_dim);
  for (std::size_t i = 0; i < f.g_dim; ++i) t_cols[i] = rb.T.column(i);
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    std::vector<std::size_t> tau = wedge_unrank(r, n, f.g_dim);
    std::vector<Vec> args(n);
    for (std::size_t p = 0; p < n; ++p) args[p] = t_cols[tau[p]];
    Vec acc = f.eval(args);
    std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 0; mask < full; ++mask) {
      std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
      Rational coeff = pow_weight(rb.weight, n - k - 1);
      if (coeff == 0) continue;
      for (std::size_t p = 0; p < n; ++p)
        args[p] = (mask >> p) & 1 ? t_cols[tau[p]] : unit_vec(f.g_dim, tau[p]);
      Vec term = rrep.calT * f.eval(args);
      for (std::size_t t = 0; t < f.v_dim; ++t) acc[t] -= coeff * term[t];
    }
    out.values[r] = std::move(acc);
  }
  return out;
}

RBCochain delta_rb(const WeightedRBLie& rb, const RBLieRepresentation& rrep,
                   const RBCochain& c) {
  RBCochain out;
  out.n = c.n + 1;
  out.f = delta_ce(rb.g, rrep.rep, c.f);
  if (c.n == 0) {
    out.gpart = Rational(-1) * c.f;
  } else {
    out.gpart = Rational(-1) * (partial_ce(rb, rrep, *c.gpart) + phi(rb, rrep, c.f));
  }
  return out;
}

HochschildCochain delta_hochschild(const AssociativeAlgebra& a, const Bimodule& m,
                                   const HochschildCochain& f) {
  if (f.a_dim != a.dim() || f.m_dim != m.module_dim)
    throw std::invalid_argument("delta_hochschild: cochain shape mismatch");
  std::size_t n = f.degree;
  HochschildCochain out = HochschildCochain::zero(n + 1, f.a_dim, f.m_dim);
  int twist = parity_sign(n + 1);  // aligns with the (-1)^{i+n} CE convention
  std::vector<std::size_t> tau(n + 1, 0);
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    Vec acc(f.m_dim);
    {
      std::vector<std::size_t> rest(tau.begin() + 1, tau.end());
      acc += m.left[tau[0]] * f.at(rest);
    }
    for (std::size_t i = 1; i <= n; ++i) {
      int s = parity_sign(i);
      std::vector<std::size_t> idx(tau);
      idx.erase(idx.begin() + i);
      for (std::size_t k = 0; k < f.a_dim; ++k) {
        Rational coeff = a.m(tau[i - 1], tau[i], k);
        if (coeff == 0) continue;
        idx[i - 1] = k;
        const Vec& term = f.at(idx);
        Rational c2 = s == 1 ? coeff : -coeff;
        for (std::size_t t = 0; t < f.m_dim; ++t) acc[t] += c2 * term[t];
      }
    }
    {
      std::vector<std::size_t> rest(tau.begin(), tau.end() - 1);
      Vec term = m.right[tau[n]] * f.at(rest);
      int s = parity_sign(n + 1);
      for (std::size_t t = 0; t < f.m_dim; ++t)
        acc[t] += s == 1 ? term[t] : -term[t];
    }
    if (twist == -1)
      for (auto& x : acc) x = -x;
    out.values[r] = std::move(acc);
    // advance the mixed-radix tuple
    for (std::size_t p = n + 1; p-- > 0;) {
      if (++tau[p] < f.a_dim) break;
      tau[p] = 0;
    }
  }
  return out;
}

HochschildCochain partial_hochschild(const WeightedRBAssoc& rba,
                                     const RBBimodule& m,
                                     const HochschildCochain& f) {
  return delta_hochschild(assoc_deformed_product(rba), bimodule_tilde(rba, m), f);
}

HochschildCochain psi(const WeightedRBAssoc& rba, const RBBimodule& m,
                      const HochschildCochain& f) {
  if (f.a_dim != rba.a.dim() || f.m_dim != m.bim.module_dim)
    throw std::invalid_argument("psi: cochain shape mismatch");
  std::size_t n = f.degree;
  if (n == 0) return f;
  HochschildCochain out = HochschildCochain::zero(n, f.a_dim, f.m_dim);
  std::vector<Vec> r_cols(f.a_dim);
  for (std::size_t i = 0; i < f.a_dim; ++i) r_cols[i] = rba.R.column(i);
  std::vector<std::size_t> tau(n, 0);
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    std::vector<Vec> args(n);
    for (std::size_t p = 0; p < n; ++p) args[p] = r_cols[tau[p]];
    Vec acc = f.eval(args);
    std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 0; mask < full; ++mask) {
      std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
      Rational coeff = pow_weight(rba.weight, n - k - 1);
      if (coeff == 0) continue;
      for (std::size_t p = 0; p < n; ++p)
        args[p] = (mask >> p) & 1 ? r_cols[tau[p]] : unit_vec(f.a_dim, tau[p]);
      Vec term = m.calR * f.eval(args);
      for (std::size_t t = 0; t < f.m_dim; ++t) acc[t] -= coeff * term[t];
    }
    out.values[r] = std::move(acc);
    for (std::size_t p = n; p-- > 0;) {
      if (++tau[p] < f.a_dim) break;
      tau[p] = 0;
    }
  }
  return out;
}

RBAssocCochain delta_rb_assoc(const WeightedRBAssoc& rba, const RBBimodule& m,
                              const RBAssocCochain& c) {
  RBAssocCochain out;
  out.n = c.n + 1;
  out.f = delta_hochschild(rba.a, m.bim, c.f);
  if (c.n == 0) {
    out.gpart = Rational(-1) * c.f;
  } else {
    out.gpart = Rational(-1) *
                (partial_hochschild(rba, m, *c.gpart) + psi(rba, m, c.f));
  }
  return out;
}

CECochain skew_symmetrize_cochain(const HochschildCochain& f) {
  CECochain out = CECochain::zero(f.degree, f.a_dim, f.m_dim);
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    std::vector<std::size_t> tau = wedge_unrank(r, f.degree, f.a_dim);
    std::vector<std::size_t> perm(f.degree);
    for (std::size_t p = 0; p < f.degree; ++p) perm[p] = p;
    Vec acc(f.m_dim);
    do {
      std::vector<std::size_t> arg(f.degree);
      for (std::size_t p = 0; p < f.degree; ++p) arg[p] = tau[perm[p]];
      // permutation sign by inversion count
      int sign = 1;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) sign = -sign;
      const Vec& term = f.at(arg);
      for (std::size_t t = 0; t < f.m_dim; ++t)
        acc[t] += sign == 1 ? term[t] : -term[t];
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.values[r] = std::move(acc);
  }
  return out;
}

RBCochain skew_symmetrize_rb_cochain(const RBAssocCochain& c) {
  RBCochain out;
  out.n = c.n;
  out.f = skew_symmetrize_cochain(c.f);
  if (c.gpart) out.gpart = skew_symmetrize_cochain(*c.gpart);
  return out;
}

}  // namespace rbl
