// Command-line front end: eval, sweep, linear <sub>, twisted.
//
// Exit codes encode tool failures only; mathematical verdicts are report
// payload.  0 = ok, 1 = usage, 2 = I/O or malformed JSON (with byte offset),
// 3 = input validation (non-coprime point, deformation angle mismatch).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "heis/criteria.hpp"
#include "heis/mahler.hpp"
#include "heis/serialize.hpp"
#include "heis/spectral.hpp"
#include "heis/twisted.hpp"
#include "heis/version.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

heis::json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open file: " + path);
  return heis::json::parse(in);  // throws parse_error with byte offset
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open output file: " + out_path);
  out << text << '\n';
}

void print17(const char* label, double v) {
  std::fprintf(stdout, "%s = %.17g\n", label, v);
}

double golden_conjugate() { return (std::sqrt(5.0) - 1.0) / 2.0; }

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::fprintf(stderr, "wall clock: %lld ms\n", static_cast<long long>(ms));
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Invertibility certificates for group-ring elements of the discrete "
               "Heisenberg group"};
  app.set_version_flag("--version", std::string(heis::kVersion));
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "worker threads (default: HEIS_WORKERS or hardware)");

  // ---- eval ----------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("eval", "evaluate pi(f) at one representation point");
  std::string eval_f, eval_out;
  std::int64_t eval_p = 0, eval_q = 1;
  double eval_s = 0.0, eval_t = 0.0;
  bool eval_print_matrix = false;
  eval_cmd->add_option("--f", eval_f, "group-ring element JSON")->required();
  eval_cmd->add_option("--p", eval_p)->required();
  eval_cmd->add_option("--q", eval_q)->required();
  eval_cmd->add_option("--s", eval_s);
  eval_cmd->add_option("--t", eval_t);
  eval_cmd->add_flag("--print-matrix", eval_print_matrix, "include the dense matrix in the report");
  eval_cmd->add_option("--out", eval_out, "report file (default stdout)");

  // ---- sweep ---------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "sigma_min sweep over rational representation points");
  std::string sweep_f, sweep_out;
  heis::SweepConfig cfg;
  bool no_probes = false;
  sweep_cmd->add_option("--f", sweep_f, "group-ring element JSON")->required();
  sweep_cmd->add_option("--q-max", cfg.q_max);
  sweep_cmd->add_option("--grid-s", cfg.grid_s);
  sweep_cmd->add_option("--grid-t", cfg.grid_t);
  sweep_cmd->add_option("--threshold", cfg.threshold);
  sweep_cmd->add_flag("--no-probes", no_probes, "skip the diagnostic window probes");
  sweep_cmd->add_option("--out", sweep_out, "report file (default stdout)");

  // ---- linear --------------------------------------------------------------
  auto* linear_cmd = app.add_subcommand("linear", "criteria for g1(y,z) x - g0(y,z)");
  linear_cmd->require_subcommand(1);
  std::string lin_g0, lin_g1, lin_chi, lin_out, lin_m_range = "0..4";
  double lin_tol = 1e-10, lin_margin = 1e-6;
  int lin_samples = 2000, lin_nodes = 256, lin_chi_samples = 256;
  std::int64_t curves_m = 2;
  for (const char* name : {"mahler", "roots", "one-empty", "orbit", "mismatch", "ls2", "curves"}) {
    auto* sub = linear_cmd->add_subcommand(name);
    sub->add_option("--g0", lin_g0, "Laurent polynomial JSON")->required();
    sub->add_option("--g1", lin_g1, "Laurent polynomial JSON");
    sub->add_option("--chi", lin_chi, "angle: decimal or exact p,q");
    sub->add_option("--out", lin_out, "output file (default stdout)");
    if (std::string(name) == "orbit")
      sub->add_option("--m", lin_m_range, "shear range, e.g. 2 or 0..4");
    if (std::string(name) == "curves") {
      sub->add_option("--m", curves_m, "shear value");
      sub->add_option("--samples", lin_samples, "t samples");
    }
    if (std::string(name) == "orbit") {
      sub->add_option("--tol", lin_tol, "bisection tolerance");
      sub->add_option("--samples", lin_samples, "t samples per shear");
    }
    if (std::string(name) == "ls2") {
      sub->add_option("--chi-samples", lin_chi_samples, "emptiness sampling density");
      sub->add_option("--nodes", lin_nodes, "outer quadrature nodes");
      sub->add_option("--margin", lin_margin, "Mahler comparison margin");
    }
    if (std::string(name) == "mismatch")
      sub->add_option("--margin", lin_margin, "Mahler comparison margin");
    if (std::string(name) == "mahler")
      sub->add_option("--nodes", lin_nodes, "outer quadrature nodes");
  }

  // ---- twisted ---------------------------------------------------------------
  auto* twisted_cmd = app.add_subcommand("twisted", "twisted convolution at a fixed angle");
  std::string tw_theta, tw_f, tw_g, tw_out;
  bool tw_check_localize = false;
  twisted_cmd->add_option("--theta", tw_theta, "angle: decimal or exact p,q");
  twisted_cmd->add_option("--f", tw_f, "element JSON")->required();
  twisted_cmd->add_option("--g", tw_g, "element JSON")->required();
  twisted_cmd->add_flag("--check-localize", tw_check_localize,
                        "treat inputs as group-ring elements and check the localization "
                        "homomorphism residual");
  twisted_cmd->add_option("--out", tw_out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Timer timer;

  if (eval_cmd->parsed()) {
    heis::RunManifest manifest;
    manifest.command = "eval";
    manifest.add_input(eval_f);
    const auto f = heis::as_complex(heis::element_from_json(load_json(eval_f)));
    heis::RepPoint pt;
    try {
      pt = heis::RepPoint(eval_p, eval_q, eval_s, eval_t);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    const heis::CMatrix A = heis::evaluate(f, pt);
    const double sigma = heis::sigma_min(A);
    heis::json mj = heis::to_json(manifest);
    mj["config"] = heis::json{{"p", pt.p}, {"q", pt.q}, {"s", pt.s}, {"t", pt.t},
                              {"print_matrix", eval_print_matrix}};
    heis::json report{{"manifest", mj},
                      {"point", heis::json::array({pt.p, pt.q, pt.s, pt.t})},
                      {"sigma_min", sigma},
                      {"inverse_norm", sigma > 0.0 ? heis::json(1.0 / sigma) : heis::json()}};
    if (eval_print_matrix) {
      heis::json rows = heis::json::array();
      for (Eigen::Index i = 0; i < A.rows(); ++i) {
        heis::json row = heis::json::array();
        for (Eigen::Index j = 0; j < A.cols(); ++j)
          row.push_back(heis::json::array({A(i, j).real(), A(i, j).imag()}));
        rows.push_back(row);
      }
      report["matrix"] = rows;
    }
    write_output(report.dump(2), eval_out);
    print17("sigma_min", sigma);
    if (sigma > 0.0) print17("inverse_norm", 1.0 / sigma);
    return 0;
  }

  if (sweep_cmd->parsed()) {
    heis::RunManifest manifest;
    manifest.command = "sweep";
    manifest.add_input(sweep_f);
    const auto f = heis::as_complex(heis::element_from_json(load_json(sweep_f)));
    cfg.workers = workers;
    if (!no_probes) cfg.probes.push_back({golden_conjugate(), 0.0, {50, 100, 200}});
    const heis::SweepReport report = heis::sweep(f, cfg);
    write_output(heis::to_json(report, manifest).dump(2), sweep_out);
    std::fprintf(stderr, "verdict: %s\n", heis::to_string(report.verdict));
    return 0;
  }

  if (linear_cmd->parsed()) {
    CLI::App* sub = linear_cmd->get_subcommands().front();
    const std::string name = sub->get_name();
    heis::RunManifest manifest;
    manifest.command = "linear " + name;
    manifest.add_input(lin_g0);
    const heis::LaurentPoly2 g0 = heis::laurent2_from_json(load_json(lin_g0));
    heis::LaurentPoly2 g1;
    if (!lin_g1.empty()) {
      manifest.add_input(lin_g1);
      g1 = heis::laurent2_from_json(load_json(lin_g1));
    }
    std::optional<heis::Angle> chi;
    if (!lin_chi.empty()) chi = heis::angle_from_string(lin_chi);

    heis::json mj = heis::to_json(manifest);
    mj["config"] = heis::json{{"chi", chi ? heis::to_json(*chi) : heis::json()},
                              {"m", lin_m_range},
                              {"tol", lin_tol},
                              {"samples", lin_samples},
                              {"nodes", lin_nodes},
                              {"margin", lin_margin},
                              {"chi_samples", lin_chi_samples}};
    heis::json report{{"manifest", mj}};
    if (name == "mahler") {
      if (chi) {
        report["chi"] = heis::to_json(*chi);
        report["mahler_g0"] = heis::mahler_1d(heis::specialize(g0, *chi));
        if (!lin_g1.empty())
          report["mahler_g1"] = heis::mahler_1d(heis::specialize(g1, *chi));
      } else {
        const auto r0 = heis::mahler_2d(g0, lin_nodes);
        report["mahler2d_g0"] = r0.value;
        report["error_estimate_g0"] = r0.error_estimate;
        if (!lin_g1.empty()) {
          const auto r1 = heis::mahler_2d(g1, lin_nodes);
          report["mahler2d_g1"] = r1.value;
          report["error_estimate_g1"] = r1.error_estimate;
        }
      }
    } else if (name == "roots") {
      if (!chi) throw ValidationError("linear roots requires --chi");
      report["chi"] = heis::to_json(*chi);
      report["roots_g0"] = heis::to_json(heis::unit_circle_roots(heis::specialize(g0, *chi)));
      if (!lin_g1.empty())
        report["roots_g1"] = heis::to_json(heis::unit_circle_roots(heis::specialize(g1, *chi)));
    } else if (name == "one-empty") {
      if (!chi || lin_g1.empty()) throw ValidationError("linear one-empty requires --g1 and --chi");
      report["result"] = heis::to_json(heis::check_one_empty(g0, g1, *chi));
    } else if (name == "orbit") {
      if (lin_g1.empty()) throw ValidationError("linear orbit requires --g1");
      std::int64_t m_from = 0, m_to = 0;
      const auto dots = lin_m_range.find("..");
      if (dots == std::string::npos) {
        m_from = m_to = std::stoll(lin_m_range);
      } else {
        m_from = std::stoll(lin_m_range.substr(0, dots));
        m_to = std::stoll(lin_m_range.substr(dots + 2));
      }
      const auto r =
          heis::check_orbit_intersection(g0, g1, m_from, m_to, lin_tol, lin_samples, workers);
      report["result"] = heis::to_json(r);
      report["diamond"] = heis::to_json(heis::corollary_diamond(r));
    } else if (name == "mismatch") {
      if (!chi || lin_g1.empty()) throw ValidationError("linear mismatch requires --g1 and --chi");
      report["result"] = heis::to_json(heis::check_mahler_mismatch(g0, g1, *chi, lin_margin));
    } else if (name == "ls2") {
      if (lin_g1.empty()) throw ValidationError("linear ls2 requires --g1");
      report["result"] =
          heis::to_json(heis::ls2_criterion(g0, g1, lin_margin, lin_chi_samples, lin_nodes));
    } else if (name == "curves") {
      if (lin_g1.empty()) throw ValidationError("linear curves requires --g1");
      const auto rows = heis::emit_curves(g0, g1, curves_m, lin_samples);
      write_output(heis::curves_to_csv(rows), lin_out);
      return 0;
    }
    write_output(report.dump(2), lin_out);
    return 0;
  }

  if (twisted_cmd->parsed()) {
    heis::RunManifest manifest;
    manifest.command = "twisted";
    manifest.add_input(tw_f);
    manifest.add_input(tw_g);
    std::optional<heis::Angle> theta;
    if (!tw_theta.empty()) theta = heis::angle_from_string(tw_theta);

    heis::json mj = heis::to_json(manifest);
    mj["config"] = heis::json{{"theta", theta ? heis::to_json(*theta) : heis::json()},
                              {"check_localize", tw_check_localize}};
    heis::json report{{"manifest", mj}};
    if (tw_check_localize) {
      if (!theta) throw ValidationError("twisted --check-localize requires --theta");
      const auto f = heis::as_complex(heis::element_from_json(load_json(tw_f)));
      const auto g = heis::as_complex(heis::element_from_json(load_json(tw_g)));
      const heis::TwistedElement lhs = heis::localize(heis::multiply(f, g), *theta);
      const heis::TwistedElement rhs =
          heis::twisted_multiply(heis::localize(f, *theta), heis::localize(g, *theta));
      double residual = 0.0;
      heis::TwistedElement diff = lhs;
      for (const auto& [kl, c] : rhs.terms()) diff.add_term(kl.first, kl.second, -c);
      residual = diff.l1_norm();
      report["theta"] = heis::to_json(*theta);
      report["localized_product"] = heis::to_json(lhs);
      report["twisted_product"] = heis::to_json(rhs);
      report["residual_l1"] = residual;
      write_output(report.dump(2), tw_out);
      print17("residual_l1", residual);
      return 0;
    }
    heis::TwistedElement f = heis::twisted_from_json(load_json(tw_f));
    heis::TwistedElement g = heis::twisted_from_json(load_json(tw_g));
    if (theta && (f.theta() != *theta || g.theta() != *theta))
      throw ValidationError("deformation angle mismatch between --theta and inputs");
    if (f.theta() != g.theta())
      throw ValidationError("deformation angle mismatch between inputs");
    const heis::TwistedElement prod = heis::twisted_multiply(f, g);
    report["theta"] = heis::to_json(f.theta());
    report["product"] = heis::to_json(prod);
    write_output(report.dump(2), tw_out);
    return 0;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nlohmann::json::parse_error& e) {
    std::fprintf(stderr, "error: malformed JSON at byte %zu: %s\n", e.byte, e.what());
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
}
