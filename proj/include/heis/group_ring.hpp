#ifndef HEIS_GROUP_RING_HPP
#define HEIS_GROUP_RING_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <type_traits>

#include "heis/checked_int.hpp"

namespace heis {

/// A group element in normal form x^k y^l z^m.  Every element of the discrete
/// Heisenberg group has exactly one such triple; (0,0,0) is the identity.
struct Monomial {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;  // lex (k,l,m)
};

/// Group law in normal form.  Moving x^{b.k} left across y^{a.l} costs the
/// central cocycle z^{-b.k * a.l}:
///   (x^{k} y^{l} z^{m}) (x^{k'} y^{l'} z^{m'})
///     = x^{k+k'} y^{l+l'} z^{m+m' - k' l}.
inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  return Monomial{checked_add(a.k, b.k), checked_add(a.l, b.l),
                  checked_sub(checked_add(a.m, b.m), checked_mul(b.k, a.l))};
}

inline Monomial monomial_inverse(const Monomial& a) {
  // (k,l,m)^{-1} = (-k,-l,-m-kl); verified against monomial_product.
  return Monomial{checked_neg(a.k), checked_neg(a.l),
                  checked_sub(checked_neg(a.m), checked_mul(a.k, a.l))};
}

/// 3x3 unipotent integer matrix of a group element, row-major.
using UnipotentMatrix = std::array<std::array<std::int64_t, 3>, 3>;

/// Faithful matrix picture of the group: x, y, z go to the elementary
/// unipotent matrices E12, E23, E13.  The (1,3) entry of x^k y^l z^m is
/// m + k*l, which is what makes the map multiplicative; this is the oracle
/// that pins the cocycle sign in monomial_product.
inline UnipotentMatrix monomial_to_matrix(const Monomial& a) {
  return UnipotentMatrix{{{1, a.k, checked_add(a.m, checked_mul(a.k, a.l))},
                          {0, 1, a.l},
                          {0, 0, 1}}};
}

inline UnipotentMatrix matrix_multiply(const UnipotentMatrix& a, const UnipotentMatrix& b) {
  UnipotentMatrix r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t acc = 0;
      for (int t = 0; t < 3; ++t) acc = checked_add(acc, checked_mul(a[i][t], b[t][j]));
      r[i][j] = acc;
    }
  return r;
}

namespace detail {

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<std::int64_t> {
  static constexpr const char* flavor = "int";
  static std::int64_t add(std::int64_t a, std::int64_t b) { return checked_add(a, b); }
  static std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
  static std::int64_t conj(std::int64_t a) { return a; }
  static double abs(std::int64_t a) { return std::abs(static_cast<double>(a)); }
  static bool is_zero(std::int64_t a) { return a == 0; }
};

template <>
struct coeff_traits<std::complex<double>> {
  static constexpr const char* flavor = "complex";
  using C = std::complex<double>;
  static C add(C a, C b) { return a + b; }
  static C mul(C a, C b) { return a * b; }
  static C conj(C a) { return std::conj(a); }
  static double abs(C a) { return std::abs(a); }
  static bool is_zero(C a) { return a == C{}; }
};

}  // namespace detail

/// Finitely supported element of the group ring, coefficients of type C.
/// C = int64_t models Z[H] with checked arithmetic; C = complex<double>
/// models l1(H,C) after scalar evaluation.  Terms are kept in lexicographic
/// (k,l,m) order and zero coefficients are never stored, so iteration order
/// and serializations are reproducible.
template <class C>
class GroupRingElement {
 public:
  using coeff_type = C;
  using traits = detail::coeff_traits<C>;
  using term_map = std::map<Monomial, C>;

  GroupRingElement() = default;

  static GroupRingElement monomial(const Monomial& g, C c = C{1}) {
    GroupRingElement e;
    e.add_term(g, c);
    return e;
  }
  static GroupRingElement one() { return monomial(Monomial{}); }

  void add_term(const Monomial& g, C c) {
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) it->second = traits::add(it->second, c);
    if (traits::is_zero(it->second)) terms_.erase(it);
  }

  const term_map& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Monomial& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? C{} : it->second;
  }

  double l1_norm() const {
    double s = 0.0;
    for (const auto& [g, c] : terms_) s += traits::abs(c);
    return s;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.terms_ == b.terms_;
  }

  GroupRingElement operator+(const GroupRingElement& other) const {
    GroupRingElement r = *this;
    for (const auto& [g, c] : other.terms_) r.add_term(g, c);
    return r;
  }

  GroupRingElement operator-() const {
    GroupRingElement r;
    for (const auto& [g, c] : terms_) r.terms_.emplace(g, traits::mul(C{-1}, c));
    return r;
  }
  GroupRingElement operator-(const GroupRingElement& other) const { return *this + (-other); }

  GroupRingElement scaled(C c) const {
    GroupRingElement r;
    if (traits::is_zero(c)) return r;
    for (const auto& [g, v] : terms_) r.terms_.emplace(g, traits::mul(c, v));
    return r;
  }

 private:
  term_map terms_;
};

using IntGroupRingElement = GroupRingElement<std::int64_t>;
using CxGroupRingElement = GroupRingElement<std::complex<double>>;

/// Convolution product, the bilinear extension of monomial_product.  Exact
/// for integer coefficients.
template <class C>
GroupRingElement<C> multiply(const GroupRingElement<C>& f, const GroupRingElement<C>& g) {
  GroupRingElement<C> r;
  for (const auto& [ga, ca] : f.terms())
    for (const auto& [gb, cb] : g.terms())
      r.add_term(monomial_product(ga, gb), detail::coeff_traits<C>::mul(ca, cb));
  return r;
}

/// f* places the conjugated coefficient of gamma at gamma^{-1}.
template <class C>
GroupRingElement<C> involution(const GroupRingElement<C>& f) {
  GroupRingElement<C> r;
  for (const auto& [g, c] : f.terms())
    r.add_term(monomial_inverse(g), detail::coeff_traits<C>::conj(c));
  return r;
}

inline CxGroupRingElement to_complex(const IntGroupRingElement& f) {
  CxGroupRingElement r;
  for (const auto& [g, c] : f.terms())
    r.add_term(g, std::complex<double>(static_cast<double>(c), 0.0));
  return r;
}

}  // namespace heis

#endif
