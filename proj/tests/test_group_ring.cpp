#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "heis/group_ring.hpp"
#include "heis/laurent.hpp"
#include "test_support.hpp"

using namespace heis;
using heis::testing::lattice_g0;
using heis::testing::lattice_g1;
using heis::testing::random_int_element;
using heis::testing::random_monomial;

namespace {

// Test-only oracle: read a group element back off its matrix picture.
Monomial monomial_from_matrix(const UnipotentMatrix& m) {
  return Monomial{m[0][1], m[1][2], m[0][2] - m[0][1] * m[1][2]};
}

// Independent expansion of a product through the matrix oracle.
IntGroupRingElement multiply_via_matrices(const IntGroupRingElement& f,
                                          const IntGroupRingElement& g) {
  IntGroupRingElement r;
  for (const auto& [ga, ca] : f.terms())
    for (const auto& [gb, cb] : g.terms())
      r.add_term(monomial_from_matrix(
                     matrix_multiply(monomial_to_matrix(ga), monomial_to_matrix(gb))),
                 ca * cb);
  return r;
}

}  // namespace

TEST_CASE("monomial product: normal form and cocycle") {
  const Monomial x{1, 0, 0}, y{0, 1, 0};
  CHECK(monomial_product(x, y) == Monomial{1, 1, 0});
  CHECK(monomial_product(y, x) == Monomial{1, 1, -1});  // yx = xyz^{-1}
  CHECK(monomial_product(Monomial{2, 3, 1}, Monomial{-1, 4, 0}) == Monomial{1, 7, 4});

  const Monomial e{};
  const Monomial a{3, -2, 5};
  CHECK(monomial_product(e, a) == a);
  CHECK(monomial_product(a, e) == a);
  CHECK(monomial_product(a, monomial_inverse(a)) == e);
  CHECK(monomial_product(monomial_inverse(a), a) == e);
}

TEST_CASE("monomial product agrees with the 3x3 matrix oracle") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    const Monomial a = random_monomial(rng, 50);
    const Monomial b = random_monomial(rng, 50);
    CHECK(monomial_to_matrix(monomial_product(a, b)) ==
          matrix_multiply(monomial_to_matrix(a), monomial_to_matrix(b)));
  }
}

TEST_CASE("monomial product is associative") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Monomial a = random_monomial(rng, 30);
    const Monomial b = random_monomial(rng, 30);
    const Monomial c = random_monomial(rng, 30);
    CHECK(monomial_product(monomial_product(a, b), c) ==
          monomial_product(a, monomial_product(b, c)));
  }
}

TEST_CASE("generator matrices") {
  CHECK(monomial_to_matrix(Monomial{1, 0, 0}) ==
        UnipotentMatrix{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}});
  CHECK(monomial_to_matrix(Monomial{0, 0, 1}) ==
        UnipotentMatrix{{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}});
  CHECK(monomial_to_matrix(Monomial{}) == UnipotentMatrix{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  // z = x y x^{-1} y^{-1}
  const Monomial x{1, 0, 0}, y{0, 1, 0};
  const Monomial commutator = monomial_product(
      monomial_product(x, y), monomial_product(monomial_inverse(x), monomial_inverse(y)));
  CHECK(commutator == Monomial{0, 0, 1});
}

TEST_CASE("exponent overflow is a hard error") {
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(monomial_product(Monomial{big, 0, 0}, Monomial{big, 0, 0}),
                  std::overflow_error);
  CHECK_THROWS_AS(monomial_product(Monomial{0, big, 0}, Monomial{big, 0, 0}),
                  std::overflow_error);
}

TEST_CASE("multiply: inverses and relations") {
  const auto x = IntGroupRingElement::monomial(Monomial{1, 0, 0});
  const auto xinv = IntGroupRingElement::monomial(Monomial{-1, 0, 0});
  const auto y = IntGroupRingElement::monomial(Monomial{0, 1, 0});
  CHECK(multiply(x, xinv) == IntGroupRingElement::one());
  CHECK(multiply(y, x) == IntGroupRingElement::monomial(Monomial{1, 1, -1}));

  // (x+y)(x-y) fully expanded, against the independent matrix-oracle expansion
  auto xpy = x + y;
  auto xmy = x - y;
  CHECK(multiply(xpy, xmy) == multiply_via_matrices(xpy, xmy));
}

TEST_CASE("multiply matches matrix-oracle expansion on random elements") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_int_element(rng, 5, 4, 8);
    const auto g = random_int_element(rng, 5, 4, 8);
    CHECK(multiply(f, g) == multiply_via_matrices(f, g));
  }
}

TEST_CASE("multiply is associative and l1-submultiplicative") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_int_element(rng, 4, 3, 6);
    const auto g = random_int_element(rng, 4, 3, 6);
    const auto h = random_int_element(rng, 4, 3, 6);
    CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
    CHECK(multiply(f, g).l1_norm() <= f.l1_norm() * g.l1_norm() + 1e-9);
  }
}

TEST_CASE("involution") {
  const auto x = IntGroupRingElement::monomial(Monomial{1, 0, 0});
  const auto y = IntGroupRingElement::monomial(Monomial{0, 1, 0});
  auto f = x + y.scaled(2);
  auto expected = IntGroupRingElement::monomial(Monomial{-1, 0, 0}) +
                  IntGroupRingElement::monomial(Monomial{0, -1, 0}).scaled(2);
  CHECK(involution(f) == expected);

  using C = std::complex<double>;
  const auto iz = CxGroupRingElement::monomial(Monomial{0, 0, 1}, C{0, 1});
  CHECK(involution(iz) == CxGroupRingElement::monomial(Monomial{0, 0, -1}, C{0, -1}));
}

TEST_CASE("involution is isometric, involutive, anti-multiplicative") {
  std::mt19937 rng(5150);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_int_element(rng, 5, 4, 10);
    const auto g = random_int_element(rng, 5, 4, 10);
    CHECK(involution(involution(f)) == f);
    CHECK(involution(f).l1_norm() == f.l1_norm());
    CHECK(involution(multiply(f, g)) == multiply(involution(g), involution(f)));
  }
}

TEST_CASE("no zero coefficients are stored") {
  IntGroupRingElement f;
  f.add_term(Monomial{1, 2, 3}, 5);
  f.add_term(Monomial{1, 2, 3}, -5);
  CHECK(f.is_zero());
  CHECK(f.support_size() == 0);
}

TEST_CASE("linear_element") {
  CHECK(linear_element(LaurentPoly2::constant(1), LaurentPoly2::constant(1)) ==
        IntGroupRingElement::monomial(Monomial{1, 0, 0}) - IntGroupRingElement::one());

  LaurentPoly2 gy, gz;
  gy.add_term(1, 0, 1);  // y
  gz.add_term(0, 1, 1);  // z
  // y x = x y z^{-1}, so the element is x y z^{-1} - z
  auto f = linear_element(gy, gz);
  CHECK(f == IntGroupRingElement::monomial(Monomial{1, 1, -1}) -
                 IntGroupRingElement::monomial(Monomial{0, 0, 1}));

  // the worked pair expands to ten monomials
  const auto fl = linear_element(lattice_g1(), lattice_g0());
  CHECK(fl.support_size() == 10);
  IntGroupRingElement expected;
  expected.add_term(Monomial{0, -1, 0}, 1);
  expected.add_term(Monomial{0, 0, -1}, 1);
  expected.add_term(Monomial{0, 0, 0}, -3);
  expected.add_term(Monomial{0, 0, 1}, 1);
  expected.add_term(Monomial{0, 1, 0}, 1);
  expected.add_term(Monomial{1, -1, 1}, -1);
  expected.add_term(Monomial{1, 0, -1}, -1);
  expected.add_term(Monomial{1, 0, 0}, 1);
  expected.add_term(Monomial{1, 0, 1}, -1);
  expected.add_term(Monomial{1, 1, -1}, -1);
  CHECK(fl == expected);
}
