#ifndef HEIS_SPECTRAL_HPP
#define HEIS_SPECTRAL_HPP

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "heis/parallel.hpp"
#include "heis/representations.hpp"

namespace heis {

/// Smallest singular value of a dense complex square matrix.
///
/// Fast path: sqrt of the smallest eigenvalue of A*A (Hermitian solve).
/// That route loses half the digits near singularity, so results under
/// 1e-4 * ||A||_F are recomputed with a full SVD, which resolves tiny
/// singular values down to machine precision times the norm.
inline double sigma_min(const CMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("sigma_min: matrix must be square");
  if (A.rows() == 0) throw std::invalid_argument("sigma_min: empty matrix");
  if (!A.allFinite()) throw std::invalid_argument("sigma_min: non-finite entries");
  const double scale = A.norm();
  if (scale == 0.0) return 0.0;

  Eigen::SelfAdjointEigenSolver<CMatrix> es(A.adjoint() * A, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  const double est = std::sqrt(std::max(lmin, 0.0));
  if (est > 1e-4 * scale) return est;

  Eigen::JacobiSVD<CMatrix> svd(A);
  return svd.singularValues().minCoeff();
}

/// Largest singular value (operator norm); used by tests and diagnostics.
inline double op_norm(const CMatrix& A) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(A.adjoint() * A, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
}

/// A diagnostic probe of the windowed operator at one angle.
struct WindowProbe {
  double theta = 0.0;
  double s = 0.0;
  std::vector<int> window_sizes;
};

struct WindowProbeResult {
  double theta = 0.0;
  double s = 0.0;
  int N = 0;
  double sigma = 0.0;
};

struct SweepConfig {
  int q_max = 64;
  int grid_s = 8;
  int grid_t = 8;
  double threshold = 1e-8;
  int workers = 0;  // 0 = resolve from HEIS_WORKERS / hardware
  std::vector<WindowProbe> probes;

  void validate() const {
    if (q_max < 1) throw std::invalid_argument("SweepConfig: q_max must be >= 1");
    if (grid_s < 1 || grid_t < 1) throw std::invalid_argument("SweepConfig: grids must be >= 1");
    if (!(threshold >= 0.0)) throw std::invalid_argument("SweepConfig: threshold must be >= 0");
  }
};

/// All representation points with q <= q_max: coprime pairs (p,q) in
/// ascending (q, p) order, crossed with uniform grids over the fundamental
/// cell [0, 1/q)^2.  The spectrum of pi(f) depends on (s,t) only mod 1/q,
/// so the cell covers every equivalence class.
inline std::vector<RepPoint> enumerate_points(int q_max, int grid_s, int grid_t) {
  if (q_max < 1 || grid_s < 1 || grid_t < 1)
    throw std::invalid_argument("enumerate_points: bad arguments");
  std::vector<RepPoint> pts;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    for (std::int64_t p = 0; p < std::max<std::int64_t>(q, 1); ++p) {
      if (q == 1 && p != 0) continue;
      if (q > 1 && (p == 0 || std::gcd(p, q) != 1)) continue;
      for (int i = 0; i < grid_s; ++i)
        for (int j = 0; j < grid_t; ++j)
          pts.emplace_back(p, q,
                           static_cast<double>(i) / (static_cast<double>(grid_s) * q),
                           static_cast<double>(j) / (static_cast<double>(grid_t) * q));
    }
  }
  return pts;
}

struct SweepRecord {
  RepPoint point;
  double sigma = 0.0;
};

enum class SweepVerdict { NonInvertibleEvidence, InvertibleEvidence, Inconclusive };

inline const char* to_string(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::NonInvertibleEvidence: return "NonInvertibleEvidence";
    case SweepVerdict::InvertibleEvidence: return "InvertibleEvidence";
    default: return "Inconclusive";
  }
}

/// Outcome of a sweep.  The verdict is evidence, not proof:
/// NonInvertibleEvidence exhibits one concrete finite-dimensional
/// representation whose matrix is numerically singular below the threshold;
/// InvertibleEvidence only reports a sampled lower bound on sigma_min, since
/// certifying invertibility would need a uniform bound over all
/// finite-dimensional representations.
struct SweepReport {
  SweepConfig config;
  std::vector<SweepRecord> records;
  double global_min_sigma = std::numeric_limits<double>::infinity();
  double max_inverse_norm = std::numeric_limits<double>::infinity();
  SweepVerdict verdict = SweepVerdict::Inconclusive;
  std::optional<SweepRecord> witness;
  std::vector<WindowProbeResult> probe_results;
};

template <class C>
SweepReport sweep(const GroupRingElement<C>& f, const SweepConfig& config) {
  config.validate();
  if (f.is_zero()) throw std::invalid_argument("sweep: element must be nonzero");

  SweepReport report;
  report.config = config;
  const std::vector<RepPoint> pts = enumerate_points(config.q_max, config.grid_s, config.grid_t);
  report.records.resize(pts.size());
  parallel_for(pts.size(), config.workers, [&](std::size_t i) {
    report.records[i] = SweepRecord{pts[i], sigma_min(evaluate(f, pts[i]))};
  });

  // Deterministic reduction: the witness is the earliest enumerated record
  // attaining the minimum, independent of worker count.
  std::size_t best = 0;
  for (std::size_t i = 1; i < report.records.size(); ++i)
    if (report.records[i].sigma < report.records[best].sigma) best = i;
  report.global_min_sigma = report.records[best].sigma;
  report.witness = report.records[best];
  report.verdict = (report.global_min_sigma <= config.threshold)
                       ? SweepVerdict::NonInvertibleEvidence
                       : SweepVerdict::InvertibleEvidence;
  report.max_inverse_norm = report.global_min_sigma > 0.0
                                ? 1.0 / report.global_min_sigma
                                : std::numeric_limits<double>::infinity();

  // Window probes are purely diagnostic and never affect the verdict.
  for (const auto& probe : config.probes)
    for (int N : probe.window_sizes) {
      WindowedRep w{probe.theta, probe.s, N, WindowedRep::Variant::induced};
      report.probe_results.push_back(
          WindowProbeResult{probe.theta, probe.s, N, sigma_min(windowed_operator(f, w))});
    }
  return report;
}

}  // namespace heis

#endif
