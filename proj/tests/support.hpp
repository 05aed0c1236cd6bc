#ifndef RBL_TESTS_SUPPORT_HPP
#define RBL_TESTS_SUPPORT_HPP

#include <random>

#include "rbl/graded_lie.hpp"

namespace rbl::testsupport {

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = small_rational(rng);
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = small_rational(rng);
  return m;
}

inline CECochain random_ce(std::mt19937_64& rng, std::size_t degree,
                           std::size_t g, std::size_t v) {
  CECochain f = CECochain::zero(degree, g, v);
  for (auto& val : f.values) val = random_vec(rng, v);
  return f;
}

inline HochschildCochain random_hochschild(std::mt19937_64& rng,
                                           std::size_t degree, std::size_t a,
                                           std::size_t m) {
  HochschildCochain f = HochschildCochain::zero(degree, a, m);
  for (auto& val : f.values) val = random_vec(rng, m);
  return f;
}

inline RBCochain random_rb(std::mt19937_64& rng, std::size_t n, std::size_t g,
                           std::size_t v) {
  RBCochain c = RBCochain::zero(n, g, v);
  c.f = random_ce(rng, n, g, v);
  if (c.gpart) *c.gpart = random_ce(rng, n - 1, g, v);
  return c;
}

inline RBAssocCochain random_rb_assoc(std::mt19937_64& rng, std::size_t n,
                                      std::size_t a, std::size_t m) {
  RBAssocCochain c = RBAssocCochain::zero(n, a, m);
  c.f = random_hochschild(rng, n, a, m);
  if (c.gpart) *c.gpart = random_hochschild(rng, n - 1, a, m);
  return c;
}

inline RBpCochain random_rbp(std::mt19937_64& rng, std::size_t n, std::size_t g,
                             std::size_t v) {
  RBpCochain c = RBpCochain::zero(n, g, v);
  c.part1 = random_ce(rng, n, g, g);
  for (auto& val : c.part2) val = random_vec(rng, v);
  return c;
}

}  // namespace rbl::testsupport

#endif
