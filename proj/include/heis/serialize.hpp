#ifndef HEIS_SERIALIZE_HPP
#define HEIS_SERIALIZE_HPP

#include <complex>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "heis/criteria.hpp"
#include "heis/group_ring.hpp"
#include "heis/laurent.hpp"
#include "heis/manifest.hpp"
#include "heis/spectral.hpp"
#include "heis/twisted.hpp"

namespace heis {

using json = nlohmann::ordered_json;

using ElementVariant = std::variant<IntGroupRingElement, CxGroupRingElement>;

// ---------------------------------------------------------------------------
// Group-ring elements.
//   {"flavor":"int","terms":[[k,l,m,c],...]}
//   {"flavor":"complex","terms":[[k,l,m,re,im],...]}
// Terms are emitted sorted with no zero coefficients; input order is free.

inline json to_json(const IntGroupRingElement& f) {
  json terms = json::array();
  for (const auto& [g, c] : f.terms()) terms.push_back(json::array({g.k, g.l, g.m, c}));
  return json{{"flavor", "int"}, {"terms", terms}};
}

inline json to_json(const CxGroupRingElement& f) {
  json terms = json::array();
  for (const auto& [g, c] : f.terms())
    terms.push_back(json::array({g.k, g.l, g.m, c.real(), c.imag()}));
  return json{{"flavor", "complex"}, {"terms", terms}};
}

inline ElementVariant element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("flavor") || !j.contains("terms"))
    throw std::invalid_argument("element: expected {flavor, terms}");
  const std::string flavor = j.at("flavor").get<std::string>();
  const json& terms = j.at("terms");
  if (!terms.is_array()) throw std::invalid_argument("element: terms must be an array");
  if (flavor == "int") {
    IntGroupRingElement f;
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() != 4)
        throw std::invalid_argument("element: int term must be [k,l,m,c]");
      f.add_term(Monomial{t[0].get<std::int64_t>(), t[1].get<std::int64_t>(),
                          t[2].get<std::int64_t>()},
                 t[3].get<std::int64_t>());
    }
    return f;
  }
  if (flavor == "complex") {
    CxGroupRingElement f;
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() != 5)
        throw std::invalid_argument("element: complex term must be [k,l,m,re,im]");
      f.add_term(Monomial{t[0].get<std::int64_t>(), t[1].get<std::int64_t>(),
                          t[2].get<std::int64_t>()},
                 std::complex<double>(t[3].get<double>(), t[4].get<double>()));
    }
    return f;
  }
  throw std::invalid_argument("element: unknown flavor '" + flavor + "'");
}

inline CxGroupRingElement as_complex(const ElementVariant& v) {
  if (std::holds_alternative<IntGroupRingElement>(v))
    return to_complex(std::get<IntGroupRingElement>(v));
  return std::get<CxGroupRingElement>(v);
}

// ---------------------------------------------------------------------------
// Angles: a JSON number, or an exact rational as [p, q].

inline json to_json(const Angle& a) {
  if (a.is_rational()) return json::array({a.num(), a.den()});
  return json(a.value());
}

inline Angle angle_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("angle: rational form is [p,q]");
    return Angle::rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  }
  if (j.is_number()) return Angle::real(j.get<double>());
  throw std::invalid_argument("angle: expected number or [p,q]");
}

/// CLI form: a decimal like "0.37" or an exact pair like "2,5".
inline Angle angle_from_string(const std::string& s) {
  const auto comma = s.find(',');
  if (comma != std::string::npos) {
    const std::int64_t p = std::stoll(s.substr(0, comma));
    const std::int64_t q = std::stoll(s.substr(comma + 1));
    return Angle::rational(p, q);
  }
  return Angle::real(std::stod(s));
}

// ---------------------------------------------------------------------------
// Twisted elements: {"theta": <number or [p,q]>, "terms":[[k,l,re,im],...]}.

inline json to_json(const TwistedElement& f) {
  json terms = json::array();
  for (const auto& [kl, c] : f.terms())
    terms.push_back(json::array({kl.first, kl.second, c.real(), c.imag()}));
  return json{{"theta", to_json(f.theta())}, {"terms", terms}};
}

inline TwistedElement twisted_from_json(const json& j) {
  if (!j.is_object() || !j.contains("theta") || !j.contains("terms"))
    throw std::invalid_argument("twisted element: expected {theta, terms}");
  TwistedElement f(angle_from_json(j.at("theta")));
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 4)
      throw std::invalid_argument("twisted element: term must be [k,l,re,im]");
    f.add_term(t[0].get<std::int64_t>(), t[1].get<std::int64_t>(),
               std::complex<double>(t[2].get<double>(), t[3].get<double>()));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Laurent polynomials: {"terms":[[a,b,c],...]} with integer c.

inline json to_json(const LaurentPoly2& g) {
  json terms = json::array();
  for (const auto& [ab, c] : g.terms()) terms.push_back(json::array({ab.first, ab.second, c}));
  return json{{"terms", terms}};
}

inline LaurentPoly2 laurent2_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw std::invalid_argument("laurent polynomial: expected {terms}");
  LaurentPoly2 g;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("laurent polynomial: term must be [a,b,c]");
    g.add_term(t[0].get<std::int64_t>(), t[1].get<std::int64_t>(), t[2].get<std::int64_t>());
  }
  return g;
}

// ---------------------------------------------------------------------------
// Manifest and reports.

inline json to_json(const RunManifest& m) {
  json inputs = json::array();
  for (const auto& [path, digest] : m.inputs)
    inputs.push_back(json{{"path", path}, {"fnv1a64", digest}});
  return json{{"command", m.command}, {"inputs", inputs}, {"version", m.version}};
}

inline json to_json(const SweepConfig& c) {
  json probes = json::array();
  for (const auto& p : c.probes)
    probes.push_back(json{{"theta", p.theta}, {"s", p.s}, {"windows", p.window_sizes}});
  return json{{"q_max", c.q_max},       {"grid_s", c.grid_s},
              {"grid_t", c.grid_t},     {"threshold", c.threshold},
              {"probes", probes}};
}

inline json record_to_json(const SweepRecord& r) {
  return json::array({r.point.p, r.point.q, r.point.s, r.point.t, r.sigma});
}

inline json to_json(const SweepReport& r, const RunManifest& manifest) {
  json records = json::array();
  for (const auto& rec : r.records) records.push_back(record_to_json(rec));
  json probe_results = json::array();
  for (const auto& pr : r.probe_results)
    probe_results.push_back(
        json{{"theta", pr.theta}, {"s", pr.s}, {"N", pr.N}, {"sigma_min", pr.sigma}});
  json mj = to_json(manifest);
  mj["config"] = to_json(r.config);
  json out{{"manifest", mj},
           {"config", to_json(r.config)},
           {"records", records},
           {"global_min_sigma", r.global_min_sigma},
           {"max_inverse_norm",
            std::isfinite(r.max_inverse_norm) ? json(r.max_inverse_norm) : json()},
           {"verdict", to_string(r.verdict)},
           {"witness", r.witness ? record_to_json(*r.witness) : json()},
           {"window_probes", probe_results}};
  return out;
}

inline json to_json(const InfiniteOrderProxy& p) {
  return json{{"plausible", p.plausible}, {"note", p.note}};
}

inline json to_json(const OneEmptyResult& r) {
  return json{{"verdict", to_string(r.verdict)},
              {"criterion", r.criterion},
              {"u0_empty", r.u0_empty},
              {"u1_empty", r.u1_empty},
              {"g0_vanishes", r.g0_vanishes},
              {"g1_vanishes", r.g1_vanishes},
              {"integral", r.integral_defined ? json(r.integral) : json()},
              {"infinite_order_proxy", to_json(r.proxy)}};
}

inline json to_json(const MahlerMismatchResult& r) {
  return json{{"verdict", to_string(r.verdict)},
              {"criterion", r.criterion},
              {"trivial_case", r.trivial_case},
              {"u0_empty", r.u0_empty},
              {"u1_empty", r.u1_empty},
              {"g0_vanishes", r.g0_vanishes},
              {"g1_vanishes", r.g1_vanishes},
              {"mahler_g0", r.measures_defined ? json(r.m0) : json()},
              {"mahler_g1", r.measures_defined ? json(r.m1) : json()},
              {"margin", r.margin},
              {"infinite_order_proxy", to_json(r.proxy)}};
}

inline json to_json(const IntersectionReport& r) {
  json per_m = json::array();
  for (const auto& v : r.per_m) {
    json entry{{"m", v.m}, {"verdict", v.nonempty ? "nonempty" : "empty"}};
    if (v.nonempty) {
      entry["witness"] = json{{"s", v.witness_s}, {"t", v.witness_t}};
      entry["residuals"] = json{{"g1", v.residual_g1}, {"g0_sheared", v.residual_g0m}};
    }
    entry["diagnostics"] = v.diagnostics;
    per_m.push_back(entry);
  }
  return json{{"criterion", "Thm-orbit-intersection"},
              {"per_m", per_m},
              {"exists_m", r.any_nonempty},
              {"first_nonempty_m", r.any_nonempty ? json(r.first_nonempty_m) : json()},
              {"verdict", r.any_nonempty ? "NonExpansive" : "Inconclusive"}};
}

inline json to_json(const DiamondResult& r) {
  return json{{"verdict", to_string(r.verdict)},
              {"criterion", r.criterion},
              {"k", r.k}};
}

inline json to_json(const Ls2Result& r) {
  return json{{"verdict", to_string(r.verdict)},
              {"criterion", r.criterion},
              {"u0_empty", r.u0_empty},
              {"u1_empty", r.u1_empty},
              {"mahler2d_g0", r.u0_empty && r.u1_empty ? json(r.m2d_0) : json()},
              {"mahler2d_g1", r.u0_empty && r.u1_empty ? json(r.m2d_1) : json()},
              {"error_estimates", json::array({r.err0, r.err1})},
              {"margin", r.margin},
              {"chi_samples", r.chi_samples}};
}

inline json to_json(const UnitCircleRootSet& u) {
  json roots = json::array();
  for (std::size_t i = 0; i < u.roots.size(); ++i)
    roots.push_back(json{{"re", u.roots[i].real()},
                         {"im", u.roots[i].imag()},
                         {"multiplicity", u.multiplicities[i]}});
  return json{{"identically_zero", u.is_identically_zero}, {"roots", roots}};
}

/// Curve table as CSV.  Floats carry 17 significant digits so files
/// round-trip bit-exactly.
inline std::string curves_to_csv(const std::vector<CurveSample>& rows) {
  std::ostringstream os;
  os << "t,curve,branch,s\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g", r.t);
    os << buf << ',' << r.curve << ',' << r.branch << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.s);
    os << buf << '\n';
  }
  return os.str();
}

}  // namespace heis

#endif
