#pragma once

// Decay rates of the time-local generator
//   L(t)[rho] = sum_i gamma_i(t) (sigma_i rho sigma_i - rho)
// for a Pauli mixture, and Markovianity (CP-divisibility) checks built on them.

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "paulimix/channels.hpp"

namespace paulimix {

struct DecayRates {
  double t = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;

  double operator[](int axis) const {
    switch (axis) {
      case 1: return gamma1;
      case 2: return gamma2;
      case 3: return gamma3;
      default: throw DomainError("axis must be 1, 2 or 3");
    }
  }
  double sum() const { return gamma1 + gamma2 + gamma3; }
};

/// Rates at decoherence value p with time derivative pdot. With
/// G_i = (1 - x_i) pdot / (1 - 2 (1 - x_i) p), gamma_i = (G_j + G_k - G_i) / 2.
inline DecayRates decay_rates_at(const MixingWeights& w, double p, double pdot, double t = 0.0) {
  std::array<double, 3> g{};
  for (int i = 1; i <= 3; ++i) {
    const double q = 1.0 - w[i];
    const double denom = 1.0 - 2.0 * q * p;
    if (!(std::abs(denom) > 1e-300)) {
      throw SingularityError("decay rate denominator vanishes");
    }
    g[static_cast<std::size_t>(i - 1)] = q / denom;
  }
  const double h = 0.5 * pdot;
  return {t, (g[1] + g[2] - g[0]) * h, (g[0] + g[2] - g[1]) * h, (g[0] + g[1] - g[2]) * h};
}

inline DecayRates decay_rates(const PauliMixture& m, double t) {
  return decay_rates_at(m.weights, m.decoherence.p(t), m.decoherence.pdot(t), t);
}

/// Closed form of gamma_1 for the two-way mixture a Lambda_3 + (1 - a) Lambda_2:
///   gamma_1 = -2 a (1 - a) p (1 - p) pdot / ((1 - 2p)(1 - 2ap)(1 - 2(1 - a)p)),
/// which is negative for every a in (0, 1) and t > 0.
inline double two_mix_gamma1(double a, const DecoherenceFunction& f, double t) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("two-way mixing parameter must lie in [0, 1]");
  const double p = f.p(t);
  const double pdot = f.pdot(t);
  const double num = 2.0 * a * (1.0 - a) * p * (1.0 - p);
  const double den = (1.0 - 2.0 * p) * (1.0 - 2.0 * a * p) * (1.0 - 2.0 * (1.0 - a) * p);
  return -num / den * pdot;
}

// ---------------------------------------------------------------------------
// Trajectories and classification

/// n uniformly spaced points including both endpoints.
inline std::vector<double> uniform_grid(double t_start, double t_end, int n) {
  if (n < 2) throw DomainError("grid needs at least 2 points");
  if (!(t_start >= 0.0) || !(t_end > t_start)) throw DomainError("grid requires 0 <= t_start < t_end");
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double step = (t_end - t_start) / (n - 1);
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = t_start + step * i;
  grid.back() = t_end;
  return grid;
}

struct RateTrajectory {
  PauliMixture mixture;
  std::vector<double> grid;
  std::vector<DecayRates> rates;
};

/// Evaluates `rate_fn` pointwise on an increasing grid.
inline RateTrajectory make_trajectory(const PauliMixture& m, std::vector<double> grid,
                                      const std::function<DecayRates(double)>& rate_fn) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("time grid must be strictly increasing");
  }
  RateTrajectory out{m, std::move(grid), {}};
  out.rates.reserve(out.grid.size());
  for (double t : out.grid) out.rates.push_back(rate_fn(t));
  return out;
}

inline RateTrajectory rate_trajectory(const PauliMixture& m, std::vector<double> grid) {
  return make_trajectory(m, std::move(grid), [&m](double t) { return decay_rates(m, t); });
}

inline RateTrajectory rate_trajectory(const PauliMixture& m, double t_start, double t_end, int n) {
  return rate_trajectory(m, uniform_grid(t_start, t_end, n));
}

enum class Verdict { Markovian, NonMarkovian };

inline const char* to_string(Verdict v) {
  return v == Verdict::Markovian ? "Markovian" : "NonMarkovian";
}

struct Witness {
  double t = 0.0;
  int axis = 0;
};

struct MarkovClass {
  Verdict verdict = Verdict::Markovian;
  std::optional<Witness> witness;  // present iff NonMarkovian
};

inline constexpr double kDefaultRateTolerance = 1e-9;

/// NonMarkovian iff some rate drops below -tol; the witness is the first
/// offending grid point (lowest axis first at equal times).
inline MarkovClass classify(const RateTrajectory& traj, double tol = kDefaultRateTolerance) {
  if (traj.rates.empty()) throw DomainError("cannot classify an empty trajectory");
  if (!(tol > 0.0)) throw DomainError("classifier tolerance must be positive");
  for (const auto& r : traj.rates) {
    for (int axis = 1; axis <= 3; ++axis) {
      if (r[axis] < -tol) return {Verdict::NonMarkovian, Witness{r.t, axis}};
    }
  }
  return {Verdict::Markovian, std::nullopt};
}

/// Bisection for a sign change of gamma_axis inside [t_lo, t_hi]; the rate
/// must have strictly opposite signs at the two ends.
inline double locate_rate_sign_change(const PauliMixture& m, int axis, double t_lo, double t_hi,
                                      double t_tol = 1e-6) {
  double f_lo = decay_rates(m, t_lo)[axis];
  const double f_hi = decay_rates(m, t_hi)[axis];
  if (!(f_lo * f_hi < 0.0)) throw DomainError("rate does not change sign on the bracket");
  while (t_hi - t_lo > t_tol) {
    const double mid = 0.5 * (t_lo + t_hi);
    const double f_mid = decay_rates(m, mid)[axis];
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      t_lo = mid;
      f_lo = f_mid;
    } else {
      t_hi = mid;
    }
  }
  return 0.5 * (t_lo + t_hi);
}

// ---------------------------------------------------------------------------
// Propagator complete-positivity

struct PropagatorCheck {
  bool is_cp = true;
  std::array<double, 4> margins{};  // Choi weights of I, sigma_1, sigma_2, sigma_3
  PauliTransferDiagonal propagator;
};

/// Propagator V(t2, t1) = Lambda(t2) Lambda(t1)^{-1}, diagonal in the Pauli
/// basis with mu_i = lambda_i(t2) / lambda_i(t1). It is CP iff the four
/// Choi weights (1 +- mu_1 +- mu_2 +- mu_3)/4 are non-negative.
inline PropagatorCheck propagator_cp_check(const PauliMixture& m, double t1, double t2,
                                           double tol = 1e-10) {
  if (!(t2 >= t1)) throw DomainError("propagator requires t2 >= t1");
  const auto l1 = mixture_ptm(m, t1);
  const auto l2 = mixture_ptm(m, t2);
  const PauliTransferDiagonal mu{l2.lambda1 / l1.lambda1, l2.lambda2 / l1.lambda2, l2.lambda3 / l1.lambda3};
  PropagatorCheck out;
  out.propagator = mu;
  out.margins = {(1.0 + mu.lambda1 + mu.lambda2 + mu.lambda3) / 4.0,
                 (1.0 + mu.lambda1 - mu.lambda2 - mu.lambda3) / 4.0,
                 (1.0 - mu.lambda1 + mu.lambda2 - mu.lambda3) / 4.0,
                 (1.0 - mu.lambda1 - mu.lambda2 + mu.lambda3) / 4.0};
  for (double x : out.margins) {
    if (x < -tol) out.is_cp = false;
  }
  return out;
}

/// Choi matrix sum_{ij} |i><j| (x) Phi(|i><j|) of a Pauli-diagonal map Phi.
inline ComplexMatrix choi_matrix(const PauliTransferDiagonal& ptm) {
  auto phi = [&ptm](const ComplexMatrix& x) {
    ComplexMatrix out = 0.5 * x.trace() * pauli(0);
    for (int i = 1; i <= 3; ++i) out += 0.5 * ptm[i] * (pauli(i) * x).trace() * pauli(i);
    return out;
  };
  ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      ComplexMatrix eij = ComplexMatrix::Zero(2, 2);
      eij(i, j) = 1.0;
      choi += tensor(eij, phi(eij));
    }
  }
  return choi;
}

/// CP check through the minimum eigenvalue of the (trace-two) Choi matrix.
inline bool propagator_is_cp_by_choi(const PauliMixture& m, double t1, double t2, double tol = 1e-10) {
  const auto check = propagator_cp_check(m, t1, t2);
  return hermitian_eigen(choi_matrix(check.propagator)).values.minCoeff() >= -2.0 * tol;
}

// ---------------------------------------------------------------------------
// Distinguishability

struct DistancePoint {
  double t = 0.0;
  double trace_distance = 0.0;
};

inline std::vector<DistancePoint> blp_monitor(const PauliMixture& m, const DensityMatrix& rho1,
                                              const DensityMatrix& rho2, const std::vector<double>& grid) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("time grid must be strictly increasing");
  }
  std::vector<DistancePoint> out;
  out.reserve(grid.size());
  for (double t : grid) {
    out.push_back({t, trace_distance(mixture_apply(m, rho1, t), mixture_apply(m, rho2, t))});
  }
  return out;
}

}  // namespace paulimix
