#include <doctest.h>

#include <random>

#include "rbl/matrix.hpp"

using namespace rbl;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("+5/5") == Rational(1));
  CHECK(to_string(Rational(-7, 2)) == "-7/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1.5"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational(""), SchemaError);
  CHECK_THROWS_AS(parse_rational("a"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1/-2"), SchemaError);
}

TEST_CASE("rank on the pinned examples") {
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix::zero(3, 4)) == 0);
  Matrix m{{1, 2}, {2, 4}};
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel basis on the pinned examples") {
  CHECK(kernel_basis(Matrix::identity(2)).empty());
  auto z = kernel_basis(Matrix::zero(2, 2));
  CHECK(z.size() == 2);
  Matrix m{{1, 2}, {2, 4}};
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  // proportional to (2, -1)
  CHECK(k[0][0] * Rational(-1) == k[0][1] * Rational(2));
  CHECK((m * k[0]) == zero_vec(2));
}

TEST_CASE("solve on the pinned examples") {
  auto x = solve(Matrix::identity(2), Vec{3, 5});
  REQUIRE(x);
  CHECK(*x == Vec{3, 5});
  CHECK(!solve(Matrix::zero(2, 2), Vec{1, 0}));
  Matrix m{{1, 1}, {0, 1}};
  auto y = solve(m, Vec{2, 1});
  REQUIRE(y);
  CHECK(*y == Vec{1, 1});
}

TEST_CASE("rank-nullity and exactness on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), num(-4, 4), den(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
    auto kernel = kernel_basis(m);
    CHECK(rank(m) + kernel.size() == c);
    for (const auto& v : kernel) CHECK(is_zero(m * v));
    Vec x(c);
    for (auto& e : x) e = Rational(num(rng), den(rng));
    Vec b = m * x;
    auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(m * *sol == b);
  }
}

TEST_CASE("inconsistent systems have a rank witness") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = Rational(num(rng));
    Vec b{Rational(num(rng)), Rational(num(rng)), Rational(num(rng))};
    auto sol = solve(m, b);
    Matrix aug(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 2; ++j) aug(i, j) = m(i, j);
      aug(i, 2) = b[i];
    }
    if (sol) {
      CHECK(m * *sol == b);
      CHECK(rank(aug) == rank(m));
    } else {
      CHECK(rank(aug) == rank(m) + 1);
    }
  }
}

TEST_CASE("inverse round trip and singularity") {
  Matrix a{{1, 2}, {3, 5}};
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK((a * *inv) == Matrix::identity(2));
  CHECK((*inv * a) == Matrix::identity(2));
  CHECK(!inverse(Matrix{{1, 2}, {2, 4}}));
  CHECK(!inverse(Matrix::zero(2, 3)));
}

TEST_CASE("column space membership and reduction") {
  Matrix b{{1, 0}, {0, 1}, {1, 1}};
  ColumnSpace cs(b);
  CHECK(cs.dim() == 2);
  CHECK(cs.contains(Vec{1, 1, 2}));
  Vec r = cs.reduce(Vec{0, 0, 1});
  CHECK(!is_zero(r));
  ColumnSpace grown(b);
  CHECK(grown.insert(Vec{0, 0, 1}));
  CHECK(grown.dim() == 3);
  CHECK(!grown.insert(Vec{5, 7, 9}));
}

TEST_SUITE_END();
