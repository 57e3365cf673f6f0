#ifndef HEIS_CRITERIA_HPP
#define HEIS_CRITERIA_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "heis/angle.hpp"
#include "heis/laurent.hpp"
#include "heis/mahler.hpp"
#include "heis/parallel.hpp"

namespace heis {

enum class ExpansivenessVerdict { NonExpansive, Expansive, Inconclusive, NotApplicable };

inline const char* to_string(ExpansivenessVerdict v) {
  switch (v) {
    case ExpansivenessVerdict::NonExpansive: return "NonExpansive";
    case ExpansivenessVerdict::Expansive: return "Expansive";
    case ExpansivenessVerdict::NotApplicable: return "NotApplicable";
    default: return "Inconclusive";
  }
}

/// Whether chi can stand in for an element of infinite order.  This is a
/// numeric proxy, not a certificate: a double, or a rational with huge
/// denominator, cannot be distinguished from a nearby root of unity.  The
/// flag only rules out angles that are exactly low-order rationals.
struct InfiniteOrderProxy {
  bool plausible = false;
  std::string note;
};

inline InfiniteOrderProxy assess_infinite_order(const Angle& chi) {
  if (chi.is_rational()) {
    if (chi.den() <= 1000000)
      return {false, "chi is a root of unity of order " + std::to_string(chi.den()) +
                         "; the infinite-order hypothesis fails"};
    return {true, "rational angle with denominator > 1e6 used as infinite-order proxy"};
  }
  const double x = chi.value();
  for (std::int64_t q = 1; q <= 4096; ++q) {
    const double pq = std::round(x * static_cast<double>(q));
    if (x == pq / static_cast<double>(q))
      return {false, "chi equals the exact rational " + std::to_string(static_cast<long long>(pq)) +
                         "/" + std::to_string(static_cast<long long>(q)) +
                         "; the infinite-order hypothesis fails"};
  }
  return {true, "double-precision angle used as infinite-order proxy"};
}

// ---------------------------------------------------------------------------
// One variety empty, the other not.

struct OneEmptyResult {
  ExpansivenessVerdict verdict = ExpansivenessVerdict::Inconclusive;
  std::string criterion;  // "Thm-one-empty(i)" or "Thm-one-empty(ii)" when it fires
  bool u0_empty = false, u1_empty = false;
  bool g0_vanishes = false, g1_vanishes = false;
  double integral = 0.0;  // mean of log|psi_chi| over the circle
  bool integral_defined = false;
  InfiniteOrderProxy proxy;
};

/// Fires NonExpansive when, at the given chi,
///   (i)  U_chi(g0) empty, U_chi(g1) nonempty, and the psi integral < 0, or
///   (ii) U_chi(g0) nonempty, U_chi(g1) empty, and the psi integral > 0.
/// Anything else, including a chi of certified finite order, is Inconclusive.
inline OneEmptyResult check_one_empty(const LaurentPoly2& g0, const LaurentPoly2& g1,
                                      const Angle& chi, double root_tol = 1e-8) {
  OneEmptyResult res;
  res.proxy = assess_infinite_order(chi);

  const LaurentPoly1 h0 = specialize(g0, chi);
  const LaurentPoly1 h1 = specialize(g1, chi);
  res.g0_vanishes = h0.max_abs_coeff() <= 1e-14;
  res.g1_vanishes = h1.max_abs_coeff() <= 1e-14;
  const UnitCircleRootSet u0 = unit_circle_roots(h0, root_tol);
  const UnitCircleRootSet u1 = unit_circle_roots(h1, root_tol);
  res.u0_empty = u0.empty();
  res.u1_empty = u1.empty();

  if (!res.proxy.plausible) return res;
  if (res.g0_vanishes || res.g1_vanishes) return res;  // integral undefined, varieties infinite

  res.integral = mahler_1d(h0) - mahler_1d(h1);
  res.integral_defined = true;
  if (res.u0_empty && !res.u1_empty && res.integral < 0.0) {
    res.verdict = ExpansivenessVerdict::NonExpansive;
    res.criterion = "Thm-one-empty(i)";
  } else if (!res.u0_empty && res.u1_empty && res.integral > 0.0) {
    res.verdict = ExpansivenessVerdict::NonExpansive;
    res.criterion = "Thm-one-empty(ii)";
  }
  return res;
}

// ---------------------------------------------------------------------------
// Mahler mismatch with both varieties nonempty.

struct MahlerMismatchResult {
  ExpansivenessVerdict verdict = ExpansivenessVerdict::Inconclusive;
  std::string criterion;
  bool trivial_case = false;  // a specialization is the zero polynomial
  bool u0_empty = false, u1_empty = false;
  bool g0_vanishes = false, g1_vanishes = false;
  double m0 = 0.0, m1 = 0.0;
  bool measures_defined = false;
  double margin = 1e-6;
  InfiniteOrderProxy proxy;
};

/// NonExpansive when both slice varieties are nonempty and the slice Mahler
/// measures differ by more than the margin.  A vanishing specialization is
/// the trivial case: the other variety being nonempty already kills
/// invertibility.  Measures equal within the margin stay Inconclusive; the
/// margin errs on the side of never reporting a false NonExpansive.
inline MahlerMismatchResult check_mahler_mismatch(const LaurentPoly2& g0, const LaurentPoly2& g1,
                                                  const Angle& chi, double margin = 1e-6,
                                                  double root_tol = 1e-8) {
  MahlerMismatchResult res;
  res.margin = margin;
  res.proxy = assess_infinite_order(chi);

  const LaurentPoly1 h0 = specialize(g0, chi);
  const LaurentPoly1 h1 = specialize(g1, chi);
  res.g0_vanishes = h0.max_abs_coeff() <= 1e-14;
  res.g1_vanishes = h1.max_abs_coeff() <= 1e-14;
  const UnitCircleRootSet u0 = unit_circle_roots(h0, root_tol);
  const UnitCircleRootSet u1 = unit_circle_roots(h1, root_tol);
  res.u0_empty = u0.empty();
  res.u1_empty = u1.empty();

  if (!res.proxy.plausible) return res;

  if (res.g0_vanishes || res.g1_vanishes) {
    res.trivial_case = true;
    const bool other_nonempty = res.g0_vanishes ? !res.u1_empty : !res.u0_empty;
    if (other_nonempty) {
      res.verdict = ExpansivenessVerdict::NonExpansive;
      res.criterion = "Thm-mahler-mismatch(trivial)";
    }
    return res;
  }

  res.m0 = mahler_1d(h0);
  res.m1 = mahler_1d(h1);
  res.measures_defined = true;
  if (!res.u0_empty && !res.u1_empty && std::abs(res.m0 - res.m1) > margin) {
    res.verdict = ExpansivenessVerdict::NonExpansive;
    res.criterion = "Thm-mahler-mismatch";
  }
  return res;
}

// ---------------------------------------------------------------------------
// Orbit intersection of the two unitary varieties.

/// Verdict for one shear value m: whether the curves
///   K = {(s,t) : g1(e^{2 pi i s}, e^{2 pi i t}) = 0} and
///   K[m] = {(s,t) : g0(e^{2 pi i (s + m t)}, e^{2 pi i t}) = 0}
/// intersect, with a refined witness when they do.
struct ShearVerdict {
  std::int64_t m = 0;
  bool nonempty = false;
  double witness_s = 0.0, witness_t = 0.0;
  double residual_g1 = 0.0, residual_g0m = 0.0;
  std::vector<std::string> diagnostics;
};

struct IntersectionReport {
  std::vector<ShearVerdict> per_m;
  bool any_nonempty = false;
  std::int64_t first_nonempty_m = 0;
};

namespace detail {

inline double wrap_half(double d) {
  d -= std::floor(d + 0.5);
  return d;
}

inline double circ_dist(double a, double b) { return std::abs(wrap_half(a - b)); }

/// Arguments (as fractions of a turn, sorted) of the unit-circle roots of
/// g(., e^{2 pi i t}).
inline std::vector<double> circle_root_args(const LaurentPoly2& g, double t, double root_tol) {
  const UnitCircleRootSet rs = unit_circle_roots(specialize(g, Angle::real(t)), root_tol);
  std::vector<double> args;
  if (rs.is_identically_zero) return args;  // whole circle; handled by caller
  args.reserve(rs.roots.size());
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    double a = std::arg(rs.roots[i]) / (2.0 * std::numbers::pi);
    a -= std::floor(a);
    for (int rep = 0; rep < rs.multiplicities[i]; ++rep) args.push_back(a);
  }
  std::sort(args.begin(), args.end());
  return args;
}

inline double nearest_arg(const std::vector<double>& args, double ref) {
  double best = ref, bd = 1e9;
  for (double a : args) {
    const double d = circ_dist(a, ref);
    if (d < bd) { bd = d; best = a; }
  }
  return best;
}

}  // namespace detail

/// Detects intersections of the root curves by sampling t over the circle,
/// tracking every (K branch, K[m] branch) pair of continuous root branches,
/// and bisecting each sign change of the wrapped branch difference.  The
/// bisection is run to machine resolution (and at least to tol); a verdict
/// of nonempty always carries a witness whose residuals in both defining
/// polynomials are reported.  Intervals where the branch count changes are
/// locally subdivided and noted in the diagnostics, never silently dropped.
inline IntersectionReport check_orbit_intersection(const LaurentPoly2& g0, const LaurentPoly2& g1,
                                                   std::int64_t m_from, std::int64_t m_to,
                                                   double tol = 1e-10, int samples = 2000,
                                                   int workers = 0, double root_tol = 1e-8) {
  if (m_to < m_from) throw std::invalid_argument("check_orbit_intersection: empty m range");
  if (samples < 8) throw std::invalid_argument("check_orbit_intersection: too few samples");

  IntersectionReport report;
  for (std::int64_t m = m_from; m <= m_to; ++m) {
    ShearVerdict verdict;
    verdict.m = m;
    const LaurentPoly2 g0m = shear(g0, m);

    // Root sets on the sample grid (the grid closes the circle at t = 1).
    std::vector<std::vector<double>> s1(samples + 1), s2(samples + 1);
    parallel_for(static_cast<std::size_t>(samples + 1), workers, [&](std::size_t j) {
      const double t = static_cast<double>(j) / samples;
      s1[j] = detail::circle_root_args(g1, t, root_tol);
      s2[j] = detail::circle_root_args(g0m, t, root_tol);
    });

    auto diff_at = [&](double t, double ref1, double ref2) {
      const auto a1 = detail::circle_root_args(g1, t, root_tol);
      const auto a2 = detail::circle_root_args(g0m, t, root_tol);
      if (a1.empty() || a2.empty()) return std::optional<std::pair<double, double>>{};
      const double r1 = detail::nearest_arg(a1, ref1);
      const double r2 = detail::nearest_arg(a2, ref2);
      return std::optional<std::pair<double, double>>{{r1, r2}};
    };

    auto refine_crossing = [&](double lo, double hi, double ref1, double ref2) {
      double dlo = detail::wrap_half(ref1 - ref2);
      for (int iter = 0; iter < 80 && (hi - lo) > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        auto v = diff_at(mid, ref1, ref2);
        if (!v) break;
        const double dmid = detail::wrap_half(v->first - v->second);
        ref1 = v->first;
        ref2 = v->second;
        if (dmid == 0.0) { lo = hi = mid; break; }
        if ((dlo < 0) == (dmid < 0)) { lo = mid; dlo = dmid; }
        else hi = mid;
      }
      const double t_star = 0.5 * (lo + hi);
      auto v = diff_at(t_star, ref1, ref2);
      const double s_star = v ? v->first : ref1;
      return std::make_pair(t_star, s_star);
    };

    bool found = false;
    for (int j = 0; j < samples && !found; ++j) {
      const auto &A1 = s1[j], &B1 = s1[j + 1], &A2 = s2[j], &B2 = s2[j + 1];
      if (A1.empty() || A2.empty() || B1.empty() || B2.empty()) continue;
      if (A1.size() != B1.size() || A2.size() != B2.size())
        verdict.diagnostics.push_back(
            "branch count changes near t=" + std::to_string(static_cast<double>(j) / samples) +
            "; pairs tracked by nearest continuation");
      for (std::size_t i1 = 0; i1 < A1.size() && !found; ++i1)
        for (std::size_t i2 = 0; i2 < A2.size() && !found; ++i2) {
          const double a1 = A1[i1], a2 = A2[i2];
          const double d0 = detail::wrap_half(a1 - a2);
          const double b1 = detail::nearest_arg(B1, a1);
          const double b2 = detail::nearest_arg(B2, a2);
          // skip pairs whose continuation jumps; they are not one branch
          if (detail::circ_dist(b1, a1) > 0.1 || detail::circ_dist(b2, a2) > 0.1) continue;
          const double d1 = detail::wrap_half(b1 - b2);
          if (std::abs(d0 - d1) > 0.25) continue;  // wrap artifact
          if (d0 == 0.0 || (d0 < 0) != (d1 < 0)) {
            auto [t_star, s_star] = refine_crossing(static_cast<double>(j) / samples,
                                                    static_cast<double>(j + 1) / samples, a1, a2);
            const std::complex<double> ys = std::polar(1.0, 2.0 * std::numbers::pi * s_star);
            const std::complex<double> zt = std::polar(1.0, 2.0 * std::numbers::pi * t_star);
            const double r1 = std::abs(g1.eval(ys, zt));
            const double r2 = std::abs(g0m.eval(ys, zt));
            if (r1 <= 10.0 * std::max(tol, 1e-12) * g1.l1_norm() &&
                r2 <= 10.0 * std::max(tol, 1e-12) * g0m.l1_norm()) {
              verdict.nonempty = true;
              verdict.witness_s = s_star;
              verdict.witness_t = t_star;
              verdict.residual_g1 = r1;
              verdict.residual_g0m = r2;
              found = true;
            }
          }
        }
    }
    if (verdict.nonempty && !report.any_nonempty) {
      report.any_nonempty = true;
      report.first_nonempty_m = m;
    }
    report.per_m.push_back(std::move(verdict));
  }
  return report;
}

/// The swapped element g0(y,z) x - g1(y,z) inherits non-expansiveness from a
/// nonempty orbit intersection of the original pair: if some shear m works
/// for (g0, g1) then -m works after the swap.  No new computation is needed.
struct DiamondResult {
  ExpansivenessVerdict verdict = ExpansivenessVerdict::Inconclusive;
  std::string criterion = "Coro-diamond";
  std::int64_t k = 0;  // the shear witnessing the swapped pair
};

inline DiamondResult corollary_diamond(const IntersectionReport& report) {
  DiamondResult res;
  if (report.any_nonempty) {
    res.verdict = ExpansivenessVerdict::NonExpansive;
    res.k = -report.first_nonempty_m;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Both full varieties empty: expansiveness is decided by the 2-d measures.

struct Ls2Result {
  ExpansivenessVerdict verdict = ExpansivenessVerdict::NotApplicable;
  std::string criterion = "LS2-criterion";
  bool u0_empty = false, u1_empty = false;
  double m2d_0 = 0.0, m2d_1 = 0.0;
  double err0 = 0.0, err1 = 0.0;
  double margin = 1e-6;
  int chi_samples = 0;
};

/// When both two-variable unitary varieties are empty (checked by sampling
/// chi over the circle; the sampling density is a documented heuristic, not
/// a proof of emptiness), the action is expansive iff the two-variable
/// Mahler measures differ.  The comparison margin absorbs the quadrature
/// error estimates, so near-equal measures land on the non-expansive branch.
inline Ls2Result ls2_criterion(const LaurentPoly2& g0, const LaurentPoly2& g1,
                               double margin = 1e-6, int chi_samples = 256,
                               int mahler_nodes = 256, double root_tol = 1e-8) {
  if (g0.is_zero() || g1.is_zero())
    throw std::invalid_argument("ls2_criterion: zero polynomial");
  Ls2Result res;
  res.margin = margin;
  res.chi_samples = chi_samples;

  auto variety_seen_nonempty = [&](const LaurentPoly2& g) {
    for (int j = 0; j < chi_samples; ++j) {
      const LaurentPoly1 h = specialize(g, Angle::rational(j, chi_samples));
      const UnitCircleRootSet u = unit_circle_roots(h, root_tol);
      if (!u.empty()) return true;
    }
    return false;
  };
  res.u0_empty = !variety_seen_nonempty(g0);
  res.u1_empty = !variety_seen_nonempty(g1);
  if (!res.u0_empty || !res.u1_empty) return res;  // NotApplicable

  const Mahler2dResult r0 = mahler_2d(g0, mahler_nodes);
  const Mahler2dResult r1 = mahler_2d(g1, mahler_nodes);
  res.m2d_0 = r0.value;
  res.m2d_1 = r1.value;
  res.err0 = r0.error_estimate;
  res.err1 = r1.error_estimate;
  const double gap = std::abs(r0.value - r1.value);
  res.verdict = gap > margin + r0.error_estimate + r1.error_estimate
                    ? ExpansivenessVerdict::Expansive
                    : ExpansivenessVerdict::NonExpansive;
  return res;
}

// ---------------------------------------------------------------------------
// Curve table for plotting the two root curves.

struct CurveSample {
  double t = 0.0;
  std::string curve;  // "K" or "K[m]"
  int branch = 0;
  double s = 0.0;
};

/// Samples the solution branches of both curves over a t grid.  Branch ids
/// index the roots in increasing s at each t; rows are omitted where a curve
/// has no real solution.  Fold points show up as coincident branches.
inline std::vector<CurveSample> emit_curves(const LaurentPoly2& g0, const LaurentPoly2& g1,
                                            std::int64_t m, int samples, double root_tol = 1e-8) {
  if (samples < 2) throw std::invalid_argument("emit_curves: need at least 2 samples");
  const LaurentPoly2 g0m = shear(g0, m);
  const std::string km = "K[" + std::to_string(m) + "]";
  std::vector<CurveSample> rows;
  for (int j = 0; j < samples; ++j) {
    const double t = static_cast<double>(j) / samples;
    const auto a1 = detail::circle_root_args(g1, t, root_tol);
    for (std::size_t b = 0; b < a1.size(); ++b)
      rows.push_back(CurveSample{t, "K", static_cast<int>(b), a1[b]});
    const auto a2 = detail::circle_root_args(g0m, t, root_tol);
    for (std::size_t b = 0; b < a2.size(); ++b)
      rows.push_back(CurveSample{t, km, static_cast<int>(b), a2[b]});
  }
  return rows;
}

}  // namespace heis

#endif
