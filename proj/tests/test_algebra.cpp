#include <doctest.h>

#include "rbl/fixtures.hpp"

using namespace rbl;
namespace fx = rbl::fixtures;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("lie validators accept the fixtures") {
  CHECK(validate_lie(fx::abelian2()).ok);
  CHECK(validate_lie(fx::aff1()).ok);
  CHECK(validate_lie(fx::sl2()).ok);
}

TEST_CASE("jacobi violation is reported at the first bad triple") {
  // [e0,e1] = e2, [e1,e2] = e0, [e0,e2] = e0 fails Jacobi
  LieAlgebra g = LieAlgebra::from_triples(3, {{0, 1, 2, Rational(1)},
                                              {1, 2, 0, Rational(1)},
                                              {0, 2, 0, Rational(1)}});
  Certificate c = validate_lie(g);
  CHECK(!c.ok);
  CHECK(c.law == "jacobi");
  CHECK(c.indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(!is_zero(c.residual));
}

TEST_CASE("antisymmetry violation is caught") {
  LieAlgebra g(2);
  g.c(0, 1, 0) = 1;  // mirror not filled
  Certificate c = validate_lie(g);
  CHECK(!c.ok);
  CHECK(c.law == "antisymmetry");
}

TEST_CASE("shape errors throw") {
  LieRepresentation r;
  r.module_dim = 2;
  r.rho = {Matrix::identity(2)};  // wrong count for a dim-2 algebra
  CHECK_THROWS_AS(validate_representation(fx::aff1(), r), std::invalid_argument);
}

TEST_CASE("representation validator") {
  LieAlgebra g = fx::aff1();
  CHECK(validate_representation(g, adjoint_rep(g)).ok);
  LieRepresentation zero{2, {Matrix::zero(2, 2), Matrix::zero(2, 2)}};
  CHECK(validate_representation(g, zero).ok);
  LieRepresentation bad{2, {Matrix::identity(2), Matrix::identity(2)}};
  Certificate c = validate_representation(g, bad);
  CHECK(!c.ok);
  CHECK(c.indices[0] == 0);
  CHECK(c.indices[1] == 1);
}

TEST_CASE("adjoint representation structure constants") {
  LieRepresentation ab = adjoint_rep(fx::abelian2());
  CHECK(ab.rho[0].is_zero());
  CHECK(ab.rho[1].is_zero());

  LieRepresentation aff = adjoint_rep(fx::aff1());
  CHECK(aff.rho[0] == Matrix{{0, 0}, {0, 1}});   // ad(e0) = diag(0,1)
  CHECK(aff.rho[1].column(0) == Vec{0, -1});     // ad(e1)e0 = -e1

  LieRepresentation s = adjoint_rep(fx::sl2());
  CHECK(s.rho[0] == Matrix{{0, 0, 0}, {0, 2, 0}, {0, 0, -2}});
  CHECK(validate_representation(fx::sl2(), s).ok);
}

TEST_CASE("associative validators on the fixtures") {
  CHECK(validate_associative(fx::dual_numbers()).ok);
  CHECK(validate_associative(fx::assoc2()).ok);
  CHECK(validate_bimodule(fx::assoc2(), adjoint_bimodule(fx::assoc2())).ok);
  CHECK(validate_bimodule(fx::dual_numbers(),
                          adjoint_bimodule(fx::dual_numbers())).ok);
}

TEST_CASE("associativity violation is caught") {
  // e.e = f, e.f = e breaks associativity
  AssociativeAlgebra a = AssociativeAlgebra::from_triples(
      2, {{0, 0, 1, Rational(1)}, {0, 1, 0, Rational(1)}});
  CHECK(!validate_associative(a).ok);
}

TEST_CASE("skew-symmetrization of the fixtures") {
  LieAlgebra comm = skew_symmetrize_algebra(fx::dual_numbers());
  CHECK(validate_lie(comm).ok);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(is_zero(comm.bracket_basis(i, j)));

  LieAlgebra aff = skew_symmetrize_algebra(fx::assoc2());
  CHECK(aff == fx::aff1());

  LieRepresentation r =
      skew_symmetrize_bimodule(fx::assoc2(), adjoint_bimodule(fx::assoc2()));
  LieRepresentation adj = adjoint_rep(fx::aff1());
  CHECK(r.rho[0] == adj.rho[0]);
  CHECK(r.rho[1] == adj.rho[1]);
}

TEST_CASE("skew output of a valid associative algebra is always a Lie algebra") {
  for (const auto& a : {fx::assoc2(), fx::dual_numbers()}) {
    REQUIRE(validate_associative(a).ok);
    CHECK(validate_lie(skew_symmetrize_algebra(a)).ok);
    CHECK(validate_representation(
              skew_symmetrize_algebra(a),
              skew_symmetrize_bimodule(a, adjoint_bimodule(a)))
              .ok);
  }
}

TEST_CASE("direct sum of representations") {
  LieAlgebra g = fx::aff1();
  LieRepresentation adj = adjoint_rep(g);
  Matrix zero2 = Matrix::zero(2, 2);

  auto [one, one_op] = direct_sum_reps(g, {{adj, zero2}});
  CHECK(one.rho[0] == adj.rho[0]);
  CHECK(one_op == zero2);

  auto [two, two_op] = direct_sum_reps(g, {{adj, zero2}, {adj, zero2}});
  CHECK(two.module_dim == 4);
  CHECK(validate_representation(g, two).ok);
  CHECK(two_op.is_zero());

  // adjoint with -w.id next to the zero rep with 0 passes the
  // Rota-Baxter representation check for (g, -w.id) at any weight
  for (Rational w : {Rational(0), Rational(1), Rational(-2, 3)}) {
    Matrix neg = (-w) * Matrix::identity(2);
    LieRepresentation zero_rep{2, {zero2, zero2}};
    auto [sum, sum_op] =
        direct_sum_reps(g, {{adj, neg}, {zero_rep, Matrix::zero(2, 2)}});
    CHECK(validate_representation(g, sum).ok);
    WeightedRBLie rb{g, w, neg};
    REQUIRE(check_rb_lie(rb).ok);
    CHECK(check_rb_rep(rb, sum, sum_op).ok);
  }

  CHECK_THROWS_AS(direct_sum_reps(g, {}), std::invalid_argument);
}

TEST_CASE("semidirect product Lie algebra") {
  LieAlgebra g = fx::aff1();
  LieAlgebra total = semidirect_lie(g, adjoint_rep(g));
  CHECK(total.dim() == 4);
  CHECK(validate_lie(total).ok);
  // [(x,0),(0,u)] = (0, [x,u])
  CHECK(total.bracket_basis(0, 3) == Vec{0, 0, 0, 1});
}

TEST_SUITE_END();
