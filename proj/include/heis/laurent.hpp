#ifndef HEIS_LAURENT_HPP
#define HEIS_LAURENT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "heis/angle.hpp"
#include "heis/checked_int.hpp"
#include "heis/group_ring.hpp"

namespace heis {

/// Integer Laurent polynomial in (y, z); key (a, b) holds the coefficient of
/// y^a z^b.  No zero coefficients are stored.
class LaurentPoly2 {
 public:
  using term_map = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;

  LaurentPoly2() = default;

  static LaurentPoly2 constant(std::int64_t c) {
    LaurentPoly2 g;
    g.add_term(0, 0, c);
    return g;
  }

  void add_term(std::int64_t a, std::int64_t b, std::int64_t c) {
    auto key = std::make_pair(a, b);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double l1_norm() const {
    double s = 0.0;
    for (const auto& [ab, c] : terms_) s += std::abs(static_cast<double>(c));
    return s;
  }

  std::complex<double> eval(std::complex<double> y, std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (const auto& [ab, c] : terms_)
      acc += static_cast<double>(c) * std::pow(y, static_cast<double>(ab.first)) *
             std::pow(z, static_cast<double>(ab.second));
    return acc;
  }

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  term_map terms_;
};

/// One-variable Laurent polynomial with complex coefficients, e.g. a
/// specialization g(y, chi).
class LaurentPoly1 {
 public:
  using term_map = std::map<std::int64_t, std::complex<double>>;

  LaurentPoly1() = default;

  void add_term(std::int64_t a, std::complex<double> c) {
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) it->second += c;
    if (it->second == std::complex<double>{}) terms_.erase(it);
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double l1_norm() const {
    double s = 0.0;
    for (const auto& [a, c] : terms_) s += std::abs(c);
    return s;
  }

  double max_abs_coeff() const {
    double s = 0.0;
    for (const auto& [a, c] : terms_) s = std::max(s, std::abs(c));
    return s;
  }

  std::complex<double> eval(std::complex<double> y) const {
    std::complex<double> acc = 0.0;
    for (const auto& [a, c] : terms_) acc += c * std::pow(y, static_cast<double>(a));
    return acc;
  }

 private:
  term_map terms_;
};

/// g(y, chi) as a Laurent polynomial in y.  chi must be unimodular.
inline LaurentPoly1 specialize(const LaurentPoly2& g, std::complex<double> chi) {
  if (std::abs(std::abs(chi) - 1.0) > 1e-12)
    throw std::invalid_argument("specialize: chi must lie on the unit circle");
  LaurentPoly1 h;
  for (const auto& [ab, c] : g.terms())
    h.add_term(ab.first, static_cast<double>(c) * std::pow(chi, static_cast<double>(ab.second)));
  return h;
}

/// Exact-phase overload: chi = e^{2 pi i angle} with the z-powers reduced in
/// rational arithmetic when the angle is rational.
inline LaurentPoly1 specialize(const LaurentPoly2& g, const Angle& chi_angle) {
  LaurentPoly1 h;
  for (const auto& [ab, c] : g.terms())
    h.add_term(ab.first, static_cast<double>(c) * unit_phase(chi_angle, ab.second));
  return h;
}

/// The m-sheared polynomial g(y z^m, z): term (a,b) moves to (a, b + m a).
inline LaurentPoly2 shear(const LaurentPoly2& g, std::int64_t m) {
  LaurentPoly2 r;
  for (const auto& [ab, c] : g.terms())
    r.add_term(ab.first, checked_add(ab.second, checked_mul(m, ab.first)), c);
  return r;
}

/// The linear group-ring element g1(y,z) x - g0(y,z), in normal form.  Each
/// g1 term c y^a z^b contributes c times the normal form of y^a z^b x.
inline IntGroupRingElement linear_element(const LaurentPoly2& g1, const LaurentPoly2& g0) {
  IntGroupRingElement f;
  const Monomial x{1, 0, 0};
  for (const auto& [ab, c] : g1.terms())
    f.add_term(monomial_product(Monomial{0, ab.first, ab.second}, x), c);
  for (const auto& [ab, c] : g0.terms())
    f.add_term(Monomial{0, ab.first, ab.second}, checked_neg(c));
  return f;
}

}  // namespace heis

#endif
