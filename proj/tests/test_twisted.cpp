#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "heis/representations.hpp"
#include "heis/spectral.hpp"
#include "heis/twisted.hpp"
#include "test_support.hpp"

using namespace heis;
using heis::testing::random_int_element;

namespace {

double l1_diff(const TwistedElement& a, const TwistedElement& b) {
  TwistedElement d = a;
  for (const auto& [kl, c] : b.terms()) d.add_term(kl.first, kl.second, -c);
  return d.l1_norm();
}

TwistedElement random_twisted(std::mt19937& rng, Angle theta, int terms) {
  std::uniform_int_distribution<std::int64_t> e(-3, 3);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  TwistedElement f(theta);
  for (int i = 0; i < terms; ++i) f.add_term(e(rng), e(rng), {c(rng), c(rng)});
  return f;
}

}  // namespace

TEST_CASE("delta products and the deformation phase") {
  const Angle theta = Angle::real(0.37);
  const auto d10 = TwistedElement::delta(theta, 1, 0);
  const auto d01 = TwistedElement::delta(theta, 0, 1);

  const auto p1 = twisted_multiply(d10, d01);
  REQUIRE(p1.terms().size() == 1);
  CHECK(std::abs(p1.coefficient(1, 1) - 1.0) < 1e-15);

  const auto p2 = twisted_multiply(d01, d10);
  REQUIRE(p2.terms().size() == 1);
  const std::complex<double> expected = std::polar(1.0, 2.0 * std::numbers::pi * 0.37);
  CHECK(std::abs(p2.coefficient(1, 1) - expected) < 1e-15);
}

TEST_CASE("identity and associativity") {
  std::mt19937 rng(404);
  const Angle theta = Angle::real(0.37);
  const auto id = TwistedElement::delta(theta, 0, 0);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_twisted(rng, theta, 3);
    const auto g = random_twisted(rng, theta, 3);
    const auto h = random_twisted(rng, theta, 3);
    CHECK(l1_diff(twisted_multiply(f, id), f) < 1e-12);
    CHECK(l1_diff(twisted_multiply(id, f), f) < 1e-12);
    CHECK(l1_diff(twisted_multiply(twisted_multiply(f, g), h),
                  twisted_multiply(f, twisted_multiply(g, h))) < 1e-12);
  }
}

TEST_CASE("involution formula, involutive, anti-multiplicative") {
  const Angle theta = Angle::real(0.37);
  CHECK(l1_diff(twisted_involution(TwistedElement::delta(theta, 0, 0)),
                TwistedElement::delta(theta, 0, 0)) < 1e-15);

  const auto inv11 = twisted_involution(TwistedElement::delta(theta, 1, 1));
  const std::complex<double> expected = std::polar(1.0, 2.0 * std::numbers::pi * 0.37);
  REQUIRE(inv11.terms().size() == 1);
  CHECK(std::abs(inv11.coefficient(-1, -1) - expected) < 1e-15);

  std::mt19937 rng(808);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_twisted(rng, theta, 3);
    const auto g = random_twisted(rng, theta, 3);
    CHECK(l1_diff(twisted_involution(twisted_involution(f)), f) < 1e-12);
    CHECK(l1_diff(twisted_involution(twisted_multiply(f, g)),
                  twisted_multiply(twisted_involution(g), twisted_involution(f))) < 1e-12);
  }
}

TEST_CASE("angle mismatch is an error") {
  const auto f = TwistedElement::delta(Angle::real(0.37), 1, 0);
  const auto g = TwistedElement::delta(Angle::real(0.38), 0, 1);
  CHECK_THROWS_AS(twisted_multiply(f, g), std::invalid_argument);
  const auto fr = TwistedElement::delta(Angle::rational(1, 3), 1, 0);
  const auto gr = TwistedElement::delta(Angle::rational(2, 3), 1, 0);
  CHECK_THROWS_AS(twisted_multiply(fr, gr), std::invalid_argument);
}

TEST_CASE("localize basics") {
  const Angle theta = Angle::real(0.37);
  const auto x = IntGroupRingElement::monomial(Monomial{1, 0, 0});
  const auto lx = localize(x, theta);
  REQUIRE(lx.terms().size() == 1);
  CHECK(std::abs(lx.coefficient(1, 0) - 1.0) < 1e-15);

  // z - e^{2 pi i theta} generates the localization kernel
  CxGroupRingElement zminus;
  zminus.add_term(Monomial{0, 0, 1}, 1.0);
  zminus.add_term(Monomial{}, -theta.unit());
  CHECK(localize(zminus, theta).is_zero());
}

TEST_CASE("localization intertwines the products") {
  std::mt19937 rng(1234);
  const Angle thetas[] = {Angle::rational(0, 1), Angle::rational(1, 2), Angle::real(0.37),
                          Angle::real(heis::testing::golden_conjugate())};
  for (const Angle& theta : thetas) {
    for (int i = 0; i < 25; ++i) {
      const auto f = random_int_element(rng, 4, 3, 5);
      const auto g = random_int_element(rng, 4, 3, 5);
      const auto lhs = localize(multiply(f, g), theta);
      const auto rhs = twisted_multiply(localize(f, theta), localize(g, theta));
      CHECK(l1_diff(lhs, rhs) <= 1e-10);
    }
  }
}

TEST_CASE("localization intertwines the involutions") {
  std::mt19937 rng(4321);
  const Angle theta = Angle::real(0.37);
  for (int i = 0; i < 25; ++i) {
    const auto f = random_int_element(rng, 4, 3, 5);
    CHECK(l1_diff(localize(involution(f), theta), twisted_involution(localize(f, theta))) <=
          1e-10);
  }
}

TEST_CASE("theta = 0 degenerates to plain convolution") {
  std::mt19937 rng(555);
  const Angle zero = Angle::rational(0, 1);
  for (int i = 0; i < 25; ++i) {
    const auto f = random_twisted(rng, zero, 4);
    const auto g = random_twisted(rng, zero, 4);
    CHECK(l1_diff(twisted_multiply(f, g), plain_convolution(f, g)) == 0.0);
  }
}

TEST_CASE("localization is consistent with the finite-dimensional evaluation") {
  std::mt19937 rng(9090);
  for (int rep = 0; rep < 10; ++rep) {
    std::uniform_int_distribution<std::int64_t> qd(2, 8);
    const std::int64_t q = qd(rng);
    std::int64_t p;
    std::uniform_int_distribution<std::int64_t> pd(1, q - 1);
    do p = pd(rng);
    while (std::gcd(p, q) != 1);
    const auto f = random_int_element(rng, 4, 3, 4);
    const RepPoint pt(p, q, 0, 0);
    const auto gens = rep_generators(pt);
    auto matpow = [&](const CMatrix& M, std::int64_t e) {
      CMatrix r = CMatrix::Identity(q, q);
      const CMatrix base = e >= 0 ? M : CMatrix(M.adjoint());
      for (std::int64_t i = 0; i < std::abs(e); ++i) r = r * base;
      return r;
    };
    CMatrix fromLocal = CMatrix::Zero(q, q);
    for (const auto& [kl, c] : localize(f, Angle::rational(p, q)).terms())
      fromLocal += c * matpow(gens.X, kl.first) * matpow(gens.Y, kl.second);
    CHECK(op_norm(fromLocal - evaluate(f, pt)) <= 1e-10);
  }
}
