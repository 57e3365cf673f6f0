#ifndef HEIS_MAHLER_HPP
#define HEIS_MAHLER_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "heis/laurent.hpp"

namespace heis {

/// Gauss-Legendre nodes and weights on [0,1], by Newton iteration on the
/// Legendre recurrence.
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = 0.5 * (1.0 - x);  // map [-1,1] -> [0,1], ascending
    nodes[n - 1 - i] = 0.5 * (1.0 + x);
    weights[i] = 0.5 * w;
    weights[n - 1 - i] = 0.5 * w;
  }
}

/// Roots of a complex polynomial sum c_i y^i (c.back() != 0) via the
/// balanced companion matrix.
inline std::vector<std::complex<double>> poly_roots(std::vector<std::complex<double>> c) {
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[i] / c[d];
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;

  // Parlett-Reinsch balancing: scale rows/columns by powers of 2 until
  // row and column norms agree, a similarity that sharpens the eigensolve.
  for (int pass = 0; pass < 20; ++pass) {
    bool converged = true;
    for (int i = 0; i < d; ++i) {
      double r = 0.0, col = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        r += std::abs(companion(i, j));
        col += std::abs(companion(j, i));
      }
      if (r == 0.0 || col == 0.0) continue;
      double f = 1.0;
      while (col < r / 2.0) { col *= 2.0; r /= 2.0; f *= 2.0; }
      while (col > r * 2.0) { col /= 2.0; r *= 2.0; f /= 2.0; }
      if (f != 1.0) {
        converged = false;
        companion.col(i) *= f;
        companion.row(i) /= f;
      }
    }
    if (converged) break;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(es.eigenvalues().data(),
                                          es.eigenvalues().data() + d);
  return roots;
}

namespace detail {

/// Ordinary-polynomial coefficient vector of y^{-mindeg} h, plus the shift.
inline std::vector<std::complex<double>> to_ordinary(const LaurentPoly1& h) {
  if (h.is_zero()) return {};
  const std::int64_t lo = h.terms().begin()->first;
  const std::int64_t hi = h.terms().rbegin()->first;
  std::vector<std::complex<double>> c(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [a, v] : h.terms()) c[static_cast<std::size_t>(a - lo)] = v;
  return c;
}

}  // namespace detail

/// Roots of h on the unit circle with multiplicities, or the flag that h is
/// the zero polynomial (in which case the variety is all of the circle).
struct UnitCircleRootSet {
  std::vector<std::complex<double>> roots;
  std::vector<int> multiplicities;
  bool is_identically_zero = false;

  bool empty() const { return !is_identically_zero && roots.empty(); }
};

inline UnitCircleRootSet unit_circle_roots(const LaurentPoly1& h, double tol = 1e-8) {
  UnitCircleRootSet out;
  if (h.max_abs_coeff() <= 1e-14) {
    out.is_identically_zero = true;
    return out;
  }
  std::vector<std::complex<double>> on_circle;
  for (const auto& r : poly_roots(detail::to_ordinary(h)))
    if (std::abs(std::abs(r) - 1.0) <= tol) on_circle.push_back(r);
  std::sort(on_circle.begin(), on_circle.end(), [](auto a, auto b) {
    return std::arg(a) < std::arg(b);
  });
  // multiplicity by clustering
  for (const auto& r : on_circle) {
    if (!out.roots.empty() && std::abs(out.roots.back() - r) < 1e-7)
      ++out.multiplicities.back();
    else {
      out.roots.push_back(r);
      out.multiplicities.push_back(1);
    }
  }
  return out;
}

/// Logarithmic Mahler measure of a one-variable Laurent polynomial by
/// Jensen's formula: log|leading coefficient| plus log|root| over the roots
/// outside the unit circle.  Multiplying by a monomial does not change the
/// measure, so the Laurent shift is free.
inline double mahler_1d(const LaurentPoly1& h) {
  if (h.is_zero()) throw std::domain_error("mahler_1d: zero polynomial (measure -infinity)");
  auto c = detail::to_ordinary(h);
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  double m = std::log(std::abs(c.back()));
  for (const auto& r : poly_roots(c)) {
    const double a = std::abs(r);
    if (a > 1.0) m += std::log(a);
  }
  return m;
}

struct Mahler2dResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |value(n) - value(n/2)| from node doubling
  int nodes = 0;
};

namespace detail {

/// Adaptive composite Gauss-Legendre integration of fn over [0,1].  The
/// integrand of a two-variable Mahler measure is continuous but has
/// square-root kinks where circle roots of the specialization appear, so a
/// single global rule stalls near 1e-5; bisecting panels until the local
/// 16-point estimate is stable recovers full accuracy at bounded cost.
inline double integrate_adaptive(const std::function<double(double)>& fn, int base_panels) {
  static constexpr int kOrder = 16;
  std::vector<double> xs, ws;
  gauss_legendre(kOrder, xs, ws);
  auto panel = [&](double a, double b) {
    double acc = 0.0;
    for (int i = 0; i < kOrder; ++i) acc += ws[i] * fn(a + (b - a) * xs[i]);
    return acc * (b - a);
  };
  std::function<double(double, double, double, int)> refine =
      [&](double a, double b, double whole, int depth) {
        const double mid = 0.5 * (a + b);
        const double left = panel(a, mid);
        const double right = panel(mid, b);
        if (depth >= 32 || std::abs(left + right - whole) < 1e-12 * (b - a) + 1e-16)
          return left + right;
        return refine(a, mid, left, depth + 1) + refine(mid, b, right, depth + 1);
      };
  double total = 0.0;
  for (int i = 0; i < base_panels; ++i) {
    const double a = static_cast<double>(i) / base_panels;
    const double b = static_cast<double>(i + 1) / base_panels;
    total += refine(a, b, panel(a, b), 0);
  }
  return total;
}

}  // namespace detail

/// Two-variable logarithmic Mahler measure: the outer z-integral is done by
/// adaptive composite Gauss-Legendre quadrature (seeded with nodes/16 base
/// panels), and each inner y-integral is evaluated exactly by Jensen's
/// formula on the specialization.  Direct 2-d quadrature of log|g| is not
/// used; circle-root singularities would wreck its convergence.
inline Mahler2dResult mahler_2d(const LaurentPoly2& g, int nodes = 256) {
  if (g.is_zero()) throw std::domain_error("mahler_2d: zero polynomial");
  if (nodes < 32) throw std::invalid_argument("mahler_2d: need at least 32 nodes");
  auto integrand = [&g](double beta) {
    return mahler_1d(specialize(g, Angle::real(beta)));
  };
  auto run = [&](int n) {
    return detail::integrate_adaptive(integrand, std::max(2, n / 16));
  };
  Mahler2dResult res;
  res.nodes = nodes;
  const double coarse = run(nodes / 2);
  res.value = run(nodes);
  res.error_estimate = std::abs(res.value - coarse);
  return res;
}

/// The rotation-averaged log of psi_chi(zeta) = g0(zeta,chi) / g1(zeta/chi,chi):
/// the circle average of log|g1(zeta/chi, chi)| equals the Mahler measure of
/// g1(., chi) because Lebesgue measure on the circle is rotation invariant,
/// so the integral collapses to a difference of two Jensen evaluations.
inline double psi_log_integral(const LaurentPoly2& g0, const LaurentPoly2& g1,
                               const Angle& chi) {
  const LaurentPoly1 h0 = specialize(g0, chi);
  const LaurentPoly1 h1 = specialize(g1, chi);
  if (h0.max_abs_coeff() <= 1e-14)
    throw std::domain_error("psi_log_integral: g0 specialization is the zero polynomial");
  if (h1.max_abs_coeff() <= 1e-14)
    throw std::domain_error("psi_log_integral: g1 specialization is the zero polynomial");
  return mahler_1d(h0) - mahler_1d(h1);
}

}  // namespace heis

#endif
