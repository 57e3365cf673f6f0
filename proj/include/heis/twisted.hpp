#ifndef HEIS_TWISTED_HPP
#define HEIS_TWISTED_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "heis/angle.hpp"
#include "heis/group_ring.hpp"

namespace heis {

/// Finitely supported element of the twisted convolution algebra on Z^2 at
/// deformation angle theta.  Elements combine only when their angles compare
/// exactly equal (reduced fractions, or bitwise doubles).
class TwistedElement {
 public:
  using key = std::pair<std::int64_t, std::int64_t>;
  using term_map = std::map<key, std::complex<double>>;

  TwistedElement() = default;
  explicit TwistedElement(Angle theta) : theta_(theta) {}

  static TwistedElement delta(Angle theta, std::int64_t k, std::int64_t l,
                              std::complex<double> c = 1.0) {
    TwistedElement e(theta);
    e.add_term(k, l, c);
    return e;
  }

  const Angle& theta() const { return theta_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::int64_t k, std::int64_t l, std::complex<double> c) {
    auto [it, inserted] = terms_.try_emplace(key{k, l}, c);
    if (!inserted) it->second += c;
    if (it->second == std::complex<double>{}) terms_.erase(it);
  }

  std::complex<double> coefficient(std::int64_t k, std::int64_t l) const {
    auto it = terms_.find(key{k, l});
    return it == terms_.end() ? std::complex<double>{} : it->second;
  }

  double l1_norm() const {
    double s = 0.0;
    for (const auto& [kl, c] : terms_) s += std::abs(c);
    return s;
  }

  /// Drops coefficients with modulus below cut; used after floating-point
  /// accumulation so that algebraically zero results come out empty.
  TwistedElement pruned(double cut = 1e-14) const {
    TwistedElement r(theta_);
    for (const auto& [kl, c] : terms_)
      if (std::abs(c) > cut) r.terms_.emplace(kl, c);
    return r;
  }

 private:
  Angle theta_;
  term_map terms_;
};

/// (f natural_theta g)_{m,n} = sum_{k,l} f_{k,l} g_{m-k,n-l} e^{2 pi i (m-k) l theta}.
/// With the g index written (k',l') the phase is e^{2 pi i k' l theta}.
inline TwistedElement twisted_multiply(const TwistedElement& f, const TwistedElement& g) {
  if (f.theta() != g.theta())
    throw std::invalid_argument("twisted_multiply: deformation angles differ");
  TwistedElement r(f.theta());
  for (const auto& [kl, ca] : f.terms())
    for (const auto& [kplp, cb] : g.terms()) {
      const std::complex<double> phase =
          unit_phase(f.theta(), checked_mul(kplp.first, kl.second));
      r.add_term(checked_add(kl.first, kplp.first), checked_add(kl.second, kplp.second),
                 ca * cb * phase);
    }
  return r;
}

/// f*_{k,l} = conj(f_{-k,-l}) e^{2 pi i k l theta}.
inline TwistedElement twisted_involution(const TwistedElement& f) {
  TwistedElement r(f.theta());
  for (const auto& [kl, c] : f.terms()) {
    const std::int64_t k = checked_neg(kl.first);
    const std::int64_t l = checked_neg(kl.second);
    r.add_term(k, l, std::conj(c) * unit_phase(f.theta(), checked_mul(k, l)));
  }
  return r;
}

/// Localization of a group-ring element along the central character
/// z -> e^{2 pi i theta}: the (k,l) coefficient is sum_m f_{(k,l,m)} e^{2 pi i m theta}.
///
/// The result lives in the twisted algebra at deformation angle -theta:
/// expanding the group law gives the phase e^{-2 pi i k' l theta} when
/// x^{k'} crosses y^{l}, while the twisted product at angle t carries
/// e^{+2 pi i k' l t}.  Brute-force checks on monomials fix t = -theta, and
/// with that tag localize(multiply(f,g), theta) equals
/// twisted_multiply(localize(f,theta), localize(g,theta)) verbatim.
template <class C>
TwistedElement localize(const GroupRingElement<C>& f, const Angle& theta) {
  TwistedElement r(theta.negate());
  for (const auto& [g, c] : f.terms())
    r.add_term(g.k, g.l, std::complex<double>(c) * unit_phase(theta, g.m));
  return r.pruned();
}

/// Plain (untwisted) convolution on Z^2; the theta = 0 degeneration,
/// computed independently of the twisted formula for cross-checking.
inline TwistedElement plain_convolution(const TwistedElement& f, const TwistedElement& g) {
  TwistedElement r(f.theta());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms())
      r.add_term(checked_add(a.first, b.first), checked_add(a.second, b.second), ca * cb);
  return r;
}

}  // namespace heis

#endif
