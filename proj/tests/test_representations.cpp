#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "heis/representations.hpp"
#include "heis/spectral.hpp"
#include "test_support.hpp"

using namespace heis;
using heis::testing::random_int_element;

namespace {

RepPoint random_point(std::mt19937& rng, int q_max) {
  std::uniform_int_distribution<std::int64_t> qd(1, q_max);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  const std::int64_t q = qd(rng);
  std::int64_t p = 0;
  if (q > 1) {
    std::uniform_int_distribution<std::int64_t> pd(1, q - 1);
    do p = pd(rng);
    while (std::gcd(p, q) != 1);
  }
  return RepPoint(p, q, ud(rng), ud(rng));
}

}  // namespace

TEST_CASE("generators at small q") {
  const auto g2 = rep_generators(RepPoint(1, 2, 0, 0));
  CMatrix flip(2, 2);
  flip << 0, 1, 1, 0;
  CHECK((g2.X - flip).norm() < 1e-15);
  CHECK(std::abs(g2.Y(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(g2.Y(1, 1) + 1.0) < 1e-15);
  CHECK((g2.Z + CMatrix::Identity(2, 2)).norm() < 1e-15);

  const auto g3 = rep_generators(RepPoint(1, 3, 0, 0));
  const double tau = 2.0 * std::numbers::pi;
  CHECK(std::abs(g3.Y(1, 1) - std::polar(1.0, tau / 3.0)) < 1e-15);
  CHECK(std::abs(g3.Y(2, 2) - std::polar(1.0, 2.0 * tau / 3.0)) < 1e-15);
}

TEST_CASE("X^q is the scalar e^{2 pi i s q}") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const RepPoint pt = random_point(rng, 12);
    const auto g = rep_generators(pt);
    CMatrix pow = CMatrix::Identity(pt.q, pt.q);
    for (std::int64_t i = 0; i < pt.q; ++i) pow = pow * g.X;
    const std::complex<double> scalar =
        std::polar(1.0, 2.0 * std::numbers::pi * pt.s * static_cast<double>(pt.q));
    CHECK((pow - scalar * CMatrix::Identity(pt.q, pt.q)).norm() < 1e-10);
  }
}

TEST_CASE("unitarity and commutation for all q up to 128") {
  std::mt19937 rng(128);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  for (std::int64_t q = 1; q <= 128; ++q) {
    std::int64_t p = 0;
    if (q > 1) {
      std::uniform_int_distribution<std::int64_t> pd(1, q - 1);
      do p = pd(rng);
      while (std::gcd(p, q) != 1);
    }
    const RepPoint pt(p, q, ud(rng), ud(rng));
    const auto g = rep_generators(pt);
    const CMatrix id = CMatrix::Identity(q, q);
    CHECK((g.X.adjoint() * g.X - id).norm() <= 1e-12);
    CHECK((g.Y.adjoint() * g.Y - id).norm() <= 1e-12);
    const std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi * pt.theta());
    CHECK(op_norm(g.X * g.Y - w * g.Y * g.X) <= 1e-12);
  }
}

TEST_CASE("evaluate on generators and small elements") {
  const auto z = IntGroupRingElement::monomial(Monomial{0, 0, 1});
  const RepPoint pt(2, 5, 0.3, 0.7);
  const CMatrix Az = evaluate(z, pt);
  const std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi * pt.theta());
  CHECK((Az - w * CMatrix::Identity(5, 5)).norm() < 1e-12);

  // shift minus identity kills the constant vector
  const auto xm1 =
      IntGroupRingElement::monomial(Monomial{1, 0, 0}) - IntGroupRingElement::one();
  const CMatrix A = evaluate(xm1, RepPoint(1, 4, 0, 0));
  Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(4);
  CHECK((A * ones).norm() < 1e-12);

  const auto xpy = IntGroupRingElement::monomial(Monomial{1, 0, 0}) +
                   IntGroupRingElement::monomial(Monomial{0, 1, 0});
  CMatrix expected(2, 2);
  expected << 1, 1, 1, -1;
  CHECK((evaluate(xpy, RepPoint(1, 2, 0, 0)) - expected).norm() < 1e-12);
}

TEST_CASE("evaluate agrees with explicit generator matrix products") {
  std::mt19937 rng(42);
  for (int rep = 0; rep < 20; ++rep) {
    const RepPoint pt = random_point(rng, 9);
    const auto g = rep_generators(pt);
    const auto f = random_int_element(rng, 4, 3, 4);
    CMatrix direct = CMatrix::Zero(pt.q, pt.q);
    for (const auto& [mono, c] : f.terms()) {
      auto matpow = [&](const CMatrix& M, std::int64_t e) {
        CMatrix r = CMatrix::Identity(pt.q, pt.q);
        const CMatrix base = e >= 0 ? M : CMatrix(M.adjoint());
        for (std::int64_t i = 0; i < std::abs(e); ++i) r = r * base;
        return r;
      };
      direct += static_cast<double>(c) * matpow(g.X, mono.k) * matpow(g.Y, mono.l) *
                matpow(g.Z, mono.m);
    }
    CHECK(op_norm(evaluate(f, pt) - direct) < 1e-10);
  }
}

TEST_CASE("evaluate is a *-homomorphism") {
  std::mt19937 rng(777);
  for (int rep = 0; rep < 50; ++rep) {
    const auto f = random_int_element(rng, 5, 3, 5);
    const auto g = random_int_element(rng, 5, 3, 5);
    const RepPoint pt = random_point(rng, 16);
    const CMatrix Af = evaluate(f, pt);
    const CMatrix Ag = evaluate(g, pt);
    CHECK(op_norm(evaluate(multiply(f, g), pt) - Af * Ag) <= 1e-10);
    CHECK(op_norm(evaluate(involution(f), pt) - CMatrix(Af.adjoint())) <= 1e-12);
  }
}

TEST_CASE("sigma_min depends on (s,t) only mod 1/q") {
  std::mt19937 rng(31337);
  for (int rep = 0; rep < 10; ++rep) {
    const auto f = random_int_element(rng, 4, 3, 4);
    std::uniform_int_distribution<std::int64_t> qd(2, 8);
    const std::int64_t q = qd(rng);
    std::int64_t p;
    std::uniform_int_distribution<std::int64_t> pd(1, q - 1);
    do p = pd(rng);
    while (std::gcd(p, q) != 1);
    std::uniform_real_distribution<double> ud(0.0, 1.0 / static_cast<double>(q));
    const double s = ud(rng), t = ud(rng);
    const double base = sigma_min(evaluate(f, RepPoint(p, q, s, t)));
    const double shift_s =
        sigma_min(evaluate(f, RepPoint(p, q, s + 1.0 / static_cast<double>(q), t)));
    const double shift_t =
        sigma_min(evaluate(f, RepPoint(p, q, s, t + 1.0 / static_cast<double>(q))));
    CHECK(std::abs(base - shift_s) <= 1e-10);
    CHECK(std::abs(base - shift_t) <= 1e-10);
  }
}

TEST_CASE("invalid representation points are rejected") {
  CHECK_THROWS_AS(RepPoint(2, 4, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(RepPoint(0, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(RepPoint(3, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("windowed operator basics") {
  const auto z = IntGroupRingElement::monomial(Monomial{0, 0, 1});
  WindowedRep w{0.37, 0.0, 5, WindowedRep::Variant::induced};
  const CMatrix Az = windowed_operator(z, w);
  const std::complex<double> phase = std::polar(1.0, 2.0 * std::numbers::pi * 0.37);
  CHECK((Az - phase * CMatrix::Identity(11, 11)).norm() < 1e-12);

  const auto y = IntGroupRingElement::monomial(Monomial{0, 1, 0});
  WindowedRep wz{0.25, 0.0, 3, WindowedRep::Variant::zeta_chi};
  const CMatrix Ay = windowed_operator(y, wz);
  for (int n = -3; n <= 3; ++n) {
    const std::complex<double> chi_n = std::polar(1.0, 2.0 * std::numbers::pi * 0.25 * n);
    CHECK(std::abs(Ay(n + 3, n + 3) - chi_n) < 1e-12);
  }
  CHECK(Ay.norm() - Ay.diagonal().norm() < 1e-15);
}

TEST_CASE("windowed stability of x - 3 at an irrational angle") {
  const auto f = IntGroupRingElement::monomial(Monomial{1, 0, 0}) -
                 IntGroupRingElement::one().scaled(3);
  for (int N : {50, 100, 200}) {
    WindowedRep w{heis::testing::golden_conjugate(), 0.0, N, WindowedRep::Variant::induced};
    const double sigma = sigma_min(windowed_operator(f, w));
    CHECK(sigma >= 2.0 - 1e-6);
    CHECK(sigma <= 2.0 + 1e-6);
  }
}

TEST_CASE("window too small is an error") {
  const auto y5 = IntGroupRingElement::monomial(Monomial{0, 5, 0});
  WindowedRep w{0.1, 0.0, 3, WindowedRep::Variant::induced};
  CHECK_THROWS_AS(windowed_operator(y5, w), std::invalid_argument);
}
