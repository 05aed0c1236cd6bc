#include "rbl/algebra.hpp"

#include <sstream>

namespace rbl {

std::string Certificate::message() const {
  if (ok) return "OK";
  std::ostringstream os;
  os << law << " violated at (";
  for (std::size_t i = 0; i < indices.size(); ++i)
    os << (i ? "," : "") << indices[i];
  os << "), residual = [";
  for (std::size_t i = 0; i < residual.size(); ++i)
    os << (i ? "," : "") << to_string(residual[i]);
  os << "]";
  return os.str();
}

LieAlgebra LieAlgebra::from_triples(std::size_t dim,
                                    const std::vector<ConstantEntry>& entries) {
  LieAlgebra g(dim);
  std::vector<bool> given(dim * dim, false);
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim)
      throw std::invalid_argument("bracket entry index out of range");
    g.c(e.i, e.j, e.k) = e.c;
    given[e.i * dim + e.j] = true;
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (!given[i * dim + j] && given[j * dim + i])
        for (std::size_t k = 0; k < dim; ++k) g.c(i, j, k) = -g.c(j, i, k);
    }
  return g;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) v[k] += f * c(i, j, k);
    }
  }
  return v;
}

Matrix LieRepresentation::act(const Vec& x) const {
  Matrix m = Matrix::zero(module_dim, module_dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m = m + x[i] * rho[i];
  return m;
}

AssociativeAlgebra AssociativeAlgebra::from_triples(
    std::size_t dim, const std::vector<ConstantEntry>& entries) {
  AssociativeAlgebra a(dim);
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim)
      throw std::invalid_argument("product entry index out of range");
    a.m(e.i, e.j, e.k) = e.c;
  }
  return a;
}

Vec AssociativeAlgebra::product_basis(std::size_t i, std::size_t j) const {
  Vec v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = m(i, j, k);
  return v;
}

Vec AssociativeAlgebra::product(const Vec& a, const Vec& b) const {
  Vec v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      Rational f = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) v[k] += f * m(i, j, k);
    }
  }
  return v;
}

Matrix AssociativeAlgebra::left_mult(std::size_t i) const {
  Matrix mm(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) mm(k, j) = m(i, j, k);
  return mm;
}

Matrix AssociativeAlgebra::right_mult(std::size_t i) const {
  Matrix mm(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) mm(k, j) = m(j, i, k);
  return mm;
}

Matrix Bimodule::left_act(const Vec& a) const {
  Matrix m = Matrix::zero(module_dim, module_dim);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) m = m + a[i] * left[i];
  return m;
}

Matrix Bimodule::right_act(const Vec& a) const {
  Matrix m = Matrix::zero(module_dim, module_dim);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) m = m + a[i] * right[i];
  return m;
}

Certificate validate_lie(const LieAlgebra& g) {
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec r = g.bracket_basis(i, j) + g.bracket_basis(j, i);
      if (!is_zero(r)) return Certificate::fail("antisymmetry", {i, j}, r);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec r = g.bracket(g.bracket_basis(i, j), unit_vec(n, k)) +
                g.bracket(g.bracket_basis(j, k), unit_vec(n, i)) +
                g.bracket(g.bracket_basis(k, i), unit_vec(n, j));
        if (!is_zero(r)) return Certificate::fail("jacobi", {i, j, k}, r);
      }
  return Certificate::pass();
}

Certificate validate_representation(const LieAlgebra& g,
                                    const LieRepresentation& r) {
  if (r.rho.size() != g.dim())
    throw std::invalid_argument("representation: wrong number of action matrices");
  for (const auto& m : r.rho)
    if (m.rows() != r.module_dim || m.cols() != r.module_dim)
      throw std::invalid_argument("representation: action matrix shape mismatch");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Matrix lhs = r.act(g.bracket_basis(i, j));
      Matrix rhs = r.rho[i] * r.rho[j] - r.rho[j] * r.rho[i];
      Matrix diff = lhs - rhs;
      if (!diff.is_zero()) {
        for (std::size_t col = 0; col < r.module_dim; ++col) {
          Vec rc = diff.column(col);
          if (!is_zero(rc))
            return Certificate::fail("representation", {i, j, col}, rc);
        }
      }
    }
  return Certificate::pass();
}

Certificate validate_associative(const AssociativeAlgebra& a) {
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec r = a.product(a.product_basis(i, j), unit_vec(n, k)) -
                a.product(unit_vec(n, i), a.product_basis(j, k));
        if (!is_zero(r)) return Certificate::fail("associativity", {i, j, k}, r);
      }
  return Certificate::pass();
}

Certificate validate_bimodule(const AssociativeAlgebra& a, const Bimodule& m) {
  if (m.left.size() != a.dim() || m.right.size() != a.dim())
    throw std::invalid_argument("bimodule: wrong number of action matrices");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (m.left[i].rows() != m.module_dim || m.left[i].cols() != m.module_dim ||
        m.right[i].rows() != m.module_dim || m.right[i].cols() != m.module_dim)
      throw std::invalid_argument("bimodule: action matrix shape mismatch");
  auto fail = [&](const char* law, std::size_t i, std::size_t j,
                  const Matrix& diff) {
    for (std::size_t col = 0; col < m.module_dim; ++col) {
      Vec rc = diff.column(col);
      if (!is_zero(rc)) return Certificate::fail(law, {i, j, col}, rc);
    }
    return Certificate::pass();
  };
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      // (a.b).m = a.(b.m)
      Matrix d1 = m.left_act(a.product_basis(i, j)) - m.left[i] * m.left[j];
      if (!d1.is_zero()) return fail("left-action", i, j, d1);
      // m.(a.b) = (m.a).b
      Matrix d2 = m.right_act(a.product_basis(i, j)) - m.right[j] * m.right[i];
      if (!d2.is_zero()) return fail("right-action", i, j, d2);
      // (a.m).b = a.(m.b)
      Matrix d3 = m.right[j] * m.left[i] - m.left[i] * m.right[j];
      if (!d3.is_zero()) return fail("left-right-compat", i, j, d3);
    }
  return Certificate::pass();
}

LieRepresentation adjoint_rep(const LieAlgebra& g) {
  LieRepresentation r;
  r.module_dim = g.dim();
  r.rho.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix m(g.dim(), g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) m(k, j) = g.c(i, j, k);
    r.rho.push_back(std::move(m));
  }
  return r;
}

Bimodule adjoint_bimodule(const AssociativeAlgebra& a) {
  Bimodule b;
  b.module_dim = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    b.left.push_back(a.left_mult(i));
    b.right.push_back(a.right_mult(i));
  }
  return b;
}

LieAlgebra skew_symmetrize_algebra(const AssociativeAlgebra& a) {
  LieAlgebra g(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        g.c(i, j, k) = a.m(i, j, k) - a.m(j, i, k);
  return g;
}

LieRepresentation skew_symmetrize_bimodule(const AssociativeAlgebra& a,
                                           const Bimodule& m) {
  LieRepresentation r;
  r.module_dim = m.module_dim;
  for (std::size_t i = 0; i < a.dim(); ++i) r.rho.push_back(m.left[i] - m.right[i]);
  return r;
}

std::pair<LieRepresentation, Matrix> direct_sum_reps(
    const LieAlgebra& g,
    const std::vector<std::pair<LieRepresentation, Matrix>>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum_reps: empty family");
  LieRepresentation sum;
  for (const auto& [rep, op] : parts) {
    if (rep.rho.size() != g.dim())
      throw std::invalid_argument("direct_sum_reps: part over a different algebra");
    if (op.rows() != rep.module_dim || op.cols() != rep.module_dim)
      throw std::invalid_argument("direct_sum_reps: operator shape mismatch");
    sum.module_dim += rep.module_dim;
  }
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& [rep, op] : parts) blocks.push_back(rep.rho[i]);
    sum.rho.push_back(Matrix::block_diag(blocks));
  }
  for (const auto& [rep, op] : parts) ops.push_back(op);
  return {sum, Matrix::block_diag(ops)};
}

LieAlgebra semidirect_lie(const LieAlgebra& g, const LieRepresentation& rep) {
  std::size_t n = g.dim(), v = rep.module_dim;
  LieAlgebra total(n + v);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) total.c(i, j, k) = g.c(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < v; ++u)
      for (std::size_t t = 0; t < v; ++t) {
        total.c(i, n + u, n + t) = rep.rho[i](t, u);
        total.c(n + u, i, n + t) = -rep.rho[i](t, u);
      }
  return total;
}

}  // namespace rbl
