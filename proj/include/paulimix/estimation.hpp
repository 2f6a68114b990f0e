#pragma once

// Recovering p(t) and the rate constant c from reconstructed states, and the
// decay rates implied by the fit.

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "paulimix/divisibility.hpp"
#include "paulimix/simulator.hpp"

namespace paulimix {

struct PEstimate {
  double t = 0.0;
  double p_hat = 0.0;
  double residual = 0.0;
};

inline constexpr double kMaxPHat = 0.5 - 1e-12;

/// For input |0><0| the mixture output is diag(1 - s p, s p) with s = x1 + x2,
/// so the Frobenius-closest model is p = <1|rho|1> / s, clamped to [0, 1/2).
inline PEstimate estimate_p(const DensityMatrix& rho_meas, const MixingWeights& w, double t = 0.0) {
  if (rho_meas.dim() != 2) throw DimensionError("estimate_p expects a single-qubit state");
  const double s = w.x1() + w.x2();
  if (!(s > 0.0)) {
    throw NonIdentifiableError("p is not identifiable from the |0><0| output when x1 + x2 == 0");
  }
  const double p_hat = std::clamp(rho_meas(1, 1).real() / s, 0.0, kMaxPHat);
  ComplexMatrix model = ComplexMatrix::Zero(2, 2);
  model(0, 0) = 1.0 - s * p_hat;
  model(1, 1) = s * p_hat;
  return {t, p_hat, (rho_meas.matrix() - model).norm()};
}

struct FitResult {
  double c_hat = 0.0;
  double rss = 0.0;
  int n_points = 0;
};

inline constexpr double kFitLower = 1e-3;
inline constexpr double kFitUpper = 50.0;

namespace detail {

inline double fit_rss(const std::vector<PEstimate>& pts, double c) {
  double rss = 0.0;
  for (const auto& pt : pts) {
    const double r = pt.p_hat + 0.5 * std::expm1(-c * pt.t);
    rss += r * r;
  }
  return rss;
}

}  // namespace detail

/// Least-squares fit of p(t) = (1 - e^{-ct}) / 2. A log-spaced scan brackets
/// the minimum inside [1e-3, 50], golden-section search narrows it, and one
/// Newton step on the RSS polishes the result.
inline FitResult fit_c(const std::vector<PEstimate>& pts) {
  std::set<double> times;
  for (const auto& pt : pts) times.insert(pt.t);
  if (pts.size() < 3 || times.size() < 3) throw FitError("fit_c needs at least 3 points with distinct times");
  if (std::all_of(pts.begin(), pts.end(), [](const PEstimate& pt) { return pt.p_hat == 0.0; })) {
    throw FitError("fit_c: every p estimate is zero");
  }

  constexpr int kScan = 400;
  const double log_lo = std::log(kFitLower);
  const double log_hi = std::log(kFitUpper);
  auto scan_c = [&](int i) { return std::exp(log_lo + (log_hi - log_lo) * i / (kScan - 1)); };
  int best = 0;
  double best_rss = detail::fit_rss(pts, scan_c(0));
  for (int i = 1; i < kScan; ++i) {
    const double r = detail::fit_rss(pts, scan_c(i));
    if (r < best_rss) {
      best_rss = r;
      best = i;
    }
  }
  double lo = scan_c(std::max(best - 1, 0));
  double hi = scan_c(std::min(best + 1, kScan - 1));

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = detail::fit_rss(pts, x1);
  double f2 = detail::fit_rss(pts, x2);
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * hi; ++iter) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = detail::fit_rss(pts, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = detail::fit_rss(pts, x2);
    }
  }
  double c = 0.5 * (lo + hi);
  double rss = detail::fit_rss(pts, c);

  double g = 0.0;
  double h = 0.0;
  for (const auto& pt : pts) {
    const double e = std::exp(-c * pt.t);
    const double r = pt.p_hat - 0.5 * (1.0 - e);
    const double d1 = 0.5 * pt.t * e;
    const double d2 = -0.5 * pt.t * pt.t * e;
    g += -2.0 * r * d1;
    h += 2.0 * (d1 * d1 - r * d2);
  }
  if (h > 0.0) {
    const double polished = c - g / h;
    if (polished >= kFitLower && polished <= kFitUpper) {
      const double polished_rss = detail::fit_rss(pts, polished);
      if (polished_rss <= rss) {
        c = polished;
        rss = polished_rss;
      }
    }
  }
  return {c, rss, static_cast<int>(pts.size())};
}

/// Decay rates with p and pdot taken from the fitted decoherence function.
inline RateTrajectory experimental_rates(const FitResult& fit, const MixingWeights& w, std::vector<double> grid) {
  return rate_trajectory(PauliMixture{w, DecoherenceFunction(fit.c_hat)}, std::move(grid));
}

inline MarkovClass classify_experiment(const RateTrajectory& traj, double tol = kDefaultRateTolerance) {
  return classify(traj, tol);
}

// ---------------------------------------------------------------------------

struct ExperimentAnalysis {
  std::vector<ExperimentPoint> points;
  std::vector<PEstimate> estimates;
  FitResult fit;
  RateTrajectory fitted_rates;
  RateTrajectory theory_rates;
  MarkovClass fitted_class;
  MarkovClass theory_class;
};

/// Synthetic experiment on `experiment_grid` followed by estimation, fitting
/// and classification of fitted and theoretical rates on `analysis_grid`.
inline ExperimentAnalysis analyze_experiment(const PauliMixture& m, const std::vector<double>& experiment_grid,
                                             const std::vector<double>& analysis_grid, const NoiseModel& nm,
                                             const DensityMatrix& rho0, double tol = kDefaultRateTolerance) {
  auto points = synthetic_experiment(m, experiment_grid, nm, rho0);
  std::vector<PEstimate> estimates;
  estimates.reserve(points.size());
  for (const auto& pt : points) estimates.push_back(estimate_p(pt.system, m.weights, pt.t));
  const FitResult fit = fit_c(estimates);
  RateTrajectory fitted = experimental_rates(fit, m.weights, analysis_grid);
  RateTrajectory theory = rate_trajectory(m, analysis_grid);
  const MarkovClass fitted_class = classify_experiment(fitted, tol);
  const MarkovClass theory_class = classify(theory, tol);
  return {std::move(points), std::move(estimates), fit, std::move(fitted), std::move(theory),
          fitted_class, theory_class};
}

}  // namespace paulimix
