#ifndef HEIS_REPRESENTATIONS_HPP
#define HEIS_REPRESENTATIONS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "heis/checked_int.hpp"
#include "heis/group_ring.hpp"

namespace heis {

using CMatrix = Eigen::MatrixXcd;

/// A finite-dimensional representation parameter: theta = p/q with
/// gcd(p,q) = 1 and 0 <= p < q, plus the twist phases (s,t) in [0,1).
/// The representation acts on C^q.
struct RepPoint {
  std::int64_t p = 0;
  std::int64_t q = 1;
  double s = 0.0;
  double t = 0.0;

  RepPoint() = default;
  RepPoint(std::int64_t p_, std::int64_t q_, double s_, double t_) : p(p_), q(q_), s(s_), t(t_) {
    validate();
  }

  void validate() const {
    if (q < 1) throw std::invalid_argument("RepPoint: q must be positive");
    if (p < 0 || p >= q) throw std::invalid_argument("RepPoint: require 0 <= p < q");
    if (std::gcd(p, q) != 1 && !(p == 0 && q == 1))
      throw std::invalid_argument("RepPoint: p and q must be coprime");
    if (!(s >= 0.0 && s < 1.0 && t >= 0.0 && t < 1.0))
      throw std::invalid_argument("RepPoint: s,t must lie in [0,1)");
  }

  double theta() const { return static_cast<double>(p) / static_cast<double>(q); }
};

struct RepGenerators {
  CMatrix X, Y, Z;
};

/// The generator images on C^q:
///   X = e^{2 pi i s} * (cyclic shift, top-right identity block),
///   Y = e^{2 pi i t} * diag(1, w, ..., w^{q-1}) with w = e^{2 pi i theta},
///   Z = e^{2 pi i theta} * I.
/// X e_j = phase * e_{j-1 mod q}, so X Y = e^{2 pi i theta} Y X.
inline RepGenerators rep_generators(const RepPoint& pt) {
  pt.validate();
  const auto q = static_cast<Eigen::Index>(pt.q);
  const double theta = pt.theta();
  using namespace std::complex_literals;
  const double tau = 2.0 * std::numbers::pi;

  RepGenerators g;
  g.X = CMatrix::Zero(q, q);
  const std::complex<double> xphase = std::polar(1.0, tau * pt.s);
  for (Eigen::Index j = 0; j < q; ++j) g.X((j - 1 + q) % q, j) = xphase;

  g.Y = CMatrix::Zero(q, q);
  for (Eigen::Index j = 0; j < q; ++j) {
    const std::int64_t e = mod_floor(pt.p * j, pt.q);
    g.Y(j, j) = std::polar(1.0, tau * (pt.t + static_cast<double>(e) / static_cast<double>(pt.q)));
  }

  g.Z = std::polar(1.0, tau * theta) * CMatrix::Identity(q, q);
  return g;
}

/// pi(f) = sum f_{(k,l,m)} X^k Y^l Z^m, assembled termwise.  Each term is a
/// phase times a cyclic permutation times a diagonal, so the entry in row
/// (j-k mod q), column j is
///   f * e^{2 pi i (s k + t l + theta (j l + m))},
/// with the theta multiple reduced mod q exactly.  Negative powers are the
/// unitary inverses; no numerical inversion happens anywhere.
template <class C>
CMatrix evaluate(const GroupRingElement<C>& f, const RepPoint& pt) {
  pt.validate();
  const auto q = static_cast<Eigen::Index>(pt.q);
  const double tau = 2.0 * std::numbers::pi;
  CMatrix A = CMatrix::Zero(q, q);
  for (const auto& [g, c] : f.terms()) {
    const double twist = pt.s * static_cast<double>(g.k) + pt.t * static_cast<double>(g.l);
    for (Eigen::Index j = 0; j < q; ++j) {
      const std::int64_t e =
          mod_floor(checked_mul(pt.p, checked_add(checked_mul(g.l, j), g.m)), pt.q);
      const std::complex<double> phase =
          std::polar(1.0, tau * (twist + static_cast<double>(e) / static_cast<double>(pt.q)));
      const Eigen::Index i = static_cast<Eigen::Index>(mod_floor(j - g.k, pt.q));
      A(i, j) += std::complex<double>(c) * phase;
    }
  }
  return A;
}

/// Truncation of a monomial representation on l2(Z) to the window
/// [-N, N], with zero (Dirichlet) boundary: coordinates leaving the window
/// are dropped.  Two variants:
///   induced: (pi(x^k y^l z^m) F)(n) = e^{2 pi i (m theta - k (n theta + s))} F(n+l)
///   zeta_chi: pi(x) = shift, pi(y) = zeta chi^n multiplication, pi(z) = chi,
///             with zeta = e^{2 pi i s}, chi = e^{2 pi i theta}.
/// These are finite sections, not certified spectra; only interior-robust
/// quantities should be read off them.
struct WindowedRep {
  enum class Variant { induced, zeta_chi };
  double theta = 0.0;
  double s = 0.0;
  int N = 0;
  Variant variant = Variant::induced;
};

template <class C>
CMatrix windowed_operator(const GroupRingElement<C>& f, const WindowedRep& w) {
  if (w.N < 1) throw std::invalid_argument("windowed_operator: N must be positive");
  std::int64_t max_shift = 0;
  for (const auto& [g, c] : f.terms()) {
    const std::int64_t shift = (w.variant == WindowedRep::Variant::induced) ? g.l : g.k;
    max_shift = std::max(max_shift, std::abs(shift));
  }
  if (max_shift > w.N)
    throw std::invalid_argument("windowed_operator: window too small for element support");

  const Eigen::Index dim = 2 * static_cast<Eigen::Index>(w.N) + 1;
  const double tau = 2.0 * std::numbers::pi;
  CMatrix A = CMatrix::Zero(dim, dim);
  for (const auto& [g, c] : f.terms()) {
    for (std::int64_t n = -w.N; n <= w.N; ++n) {
      std::int64_t col_coord;
      double arg;
      if (w.variant == WindowedRep::Variant::induced) {
        col_coord = n + g.l;
        arg = static_cast<double>(g.m) * w.theta -
              static_cast<double>(g.k) * (static_cast<double>(n) * w.theta + w.s);
      } else {
        col_coord = n + g.k;
        arg = w.s * static_cast<double>(g.l) +
              w.theta * (static_cast<double>(col_coord) * static_cast<double>(g.l) +
                         static_cast<double>(g.m));
      }
      if (col_coord < -w.N || col_coord > w.N) continue;
      A(static_cast<Eigen::Index>(n + w.N), static_cast<Eigen::Index>(col_coord + w.N)) +=
          std::complex<double>(c) * std::polar(1.0, tau * arg);
    }
  }
  return A;
}

}  // namespace heis

#endif
