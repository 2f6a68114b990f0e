// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "paulimix/paulimix.hpp"
#include "test_util.hpp"

using namespace paulimix;
using paulimix::testing::random_density;
using paulimix::testing::random_weights;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int g_failures = 0;

void report(int n, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << "exception: " << e.what();
  }
  std::printf("[%s] criterion %d: %s (%s)\n", o.ok ? "PASS" : "FAIL", n, title, o.detail.str().c_str());
  std::fflush(stdout);
  if (!o.ok) ++g_failures;
}

const PauliMixture& preset_mixture(const char* name) {
  static std::vector<Preset> all = presets();
  for (const auto& p : all) {
    if (p.name == name) return p.mixture;
  }
  throw std::runtime_error(std::string("missing preset ") + name);
}

std::vector<double> standard_grid() { return uniform_grid(0.0, 1.5, 151); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ComplexMatrix ptm_action(const PauliTransferDiagonal& ptm, const DensityMatrix& rho) {
  return from_bloch(ptm.apply(bloch_vector(rho))).matrix();
}

void criterion_two_way(Outcome& o) {
  double worst_gamma1 = -1e300;
  for (double a : {0.5, 0.25}) {
    const PauliMixture m{MixingWeights::two_way(a), DecoherenceFunction(2.0)};
    const auto traj = rate_trajectory(m, standard_grid());
    o.require(std::abs(traj.rates.front().gamma1) <= 1e-12, "gamma1(0) = 0");
    for (const auto& r : traj.rates) {
      if (r.t >= 0.01) {
        o.require(r.gamma1 < -1e-9, "gamma1 < -1e-9 for t >= 0.01");
        worst_gamma1 = std::max(worst_gamma1, r.gamma1);
      }
      o.require(r.gamma2 > 0.0 && r.gamma3 > 0.0, "gamma2, gamma3 > 0");
    }
    o.require(classify(traj).verdict == Verdict::NonMarkovian, "verdict NonMarkovian");
  }
  o.detail << "max gamma1 for t>=0.01 = " << worst_gamma1;
}

void criterion_three_way(Outcome& o) {
  for (const char* name : {"fig4", "fig5"}) {
    const auto traj = rate_trajectory(preset_mixture(name), standard_grid());
    for (const auto& r : traj.rates) {
      o.require(r.gamma1 >= -1e-9 && r.gamma2 >= -1e-9 && r.gamma3 >= -1e-9, std::string(name) + " rates >= -1e-9");
    }
    o.require(classify(traj).verdict == Verdict::Markovian, std::string(name) + " Markovian");
  }
  const auto& m = preset_mixture("fig6");
  const auto traj = rate_trajectory(m, standard_grid());
  const auto mc = classify(traj);
  o.require(mc.verdict == Verdict::NonMarkovian && mc.witness && mc.witness->axis == 1, "fig6 NonMarkovian axis 1");
  o.require(traj.rates.front().gamma1 > 0.0, "fig6 gamma1(0) > 0");
  o.require(traj.rates.back().gamma1 < 0.0, "fig6 gamma1(1.5) < 0");
  const double t_star = locate_rate_sign_change(m, 1, 0.0, 1.5, 1e-6);
  // gamma1 vanishes where 1 - 2p = 1/6 for these weights, i.e. e^{-3t} = 1/6
  const double oracle = std::log(6.0) / 3.0;
  o.require(std::abs(t_star - oracle) <= 1e-6, "t* within 1e-6 of ln(6)/3");
  o.detail << "t* = " << t_star << ", |t* - ln6/3| = " << std::abs(t_star - oracle);
}

void criterion_equal_mixing(Outcome& o) {
  const auto traj = rate_trajectory(preset_mixture("fig4"), standard_grid());
  double worst = 0.0;
  for (const auto& r : traj.rates) {
    worst = std::max({worst, std::abs(r.gamma1 - r.gamma2), std::abs(r.gamma2 - r.gamma3),
                      std::abs(r.gamma1 - r.gamma3)});
  }
  o.require(worst <= 1e-12, "pairwise equal within 1e-12");
  o.detail << "max pairwise difference = " << worst;
}

void criterion_dilation(Outcome& o) {
  std::mt19937_64 rng(20240401);
  double worst_pair = 0.0;
  double worst_unitary = 0.0;
  int states = 0;
  for (const auto& preset : presets()) {
    const auto& m = preset.mixture;
    for (int ti = 0; ti < 10; ++ti) {
      const double t = 0.15 * ti + 0.05;
      const auto circ = circuit_for(m, t);
      const auto kraus = mixture_kraus(m, t);
      const auto ptm = mixture_ptm(m, t);
      for (int s = 0; s < 20; ++s) {
        const auto rho = random_density(2, rng);
        const ComplexMatrix outs[] = {run_dilation(circ, rho).matrix(), kraus.apply(rho.matrix()),
                                      mixture_apply(m, rho, t).matrix(), ptm_action(ptm, rho)};
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) worst_pair = std::max(worst_pair, (outs[i] - outs[j]).norm());
        }
        ++states;
      }
    }
    for (int i = 0; i < 50; ++i) {
      const double p = 0.49 * i / 49.0;
      const auto v = ancilla_unitary_for(m.weights, p);
      worst_unitary = std::max({worst_unitary, unitarity_defect(v.matrix), unitarity_defect(assemble(v).total)});
    }
  }
  o.require(worst_pair <= 1e-12, "four channel routes agree within 1e-12");
  o.require(worst_unitary <= 1e-10, "V and total unitary within 1e-10");
  o.detail << states << " states, max pairwise Frobenius = " << worst_pair
           << ", max unitarity defect = " << worst_unitary;
}

void criterion_sign_cp(Outcome& o) {
  std::mt19937_64 rng(7);
  int compared = 0;
  int disagreements = 0;
  int skipped = 0;
  for (int w = 0; w < 100; ++w) {
    const PauliMixture m{random_weights(rng), DecoherenceFunction(3.0)};
    for (int k = 0; k < 1500; ++k) {
      const double t1 = 1e-3 * k;
      const double t2 = 1e-3 * (k + 1);
      const auto r1 = decay_rates(m, t1);
      const auto r2 = decay_rates(m, t2);
      bool steady = true;
      for (int i = 1; i <= 3; ++i) steady = steady && r1[i] * r2[i] > 0.0;
      if (!steady) {
        ++skipped;
        continue;
      }
      const bool rates_nonneg = r1.gamma1 > 0.0 && r1.gamma2 > 0.0 && r1.gamma3 > 0.0;
      if (propagator_cp_check(m, t1, t2).is_cp != rates_nonneg) ++disagreements;
      ++compared;
    }
  }
  o.require(disagreements == 0, "CP check agrees with rate signs");
  o.require(compared > 0, "intervals compared");
  o.detail << compared << " intervals compared, " << disagreements << " disagreements, " << skipped
           << " skipped for a sign change";
}

struct PresetExpectation {
  const char* name;
  Verdict verdict;
};

void criterion_estimation(Outcome& o, std::vector<double>& pipeline_fidelities) {
  const auto rho0 = DensityMatrix::basis(2, 0);
  const auto exp_grid = uniform_grid(0.1, 1.5, 15);
  const auto analysis = standard_grid();

  // calibrated scenario: two-way mixture a = 0.25 at c = 2 and c = 3
  for (double c : {2.0, 3.0}) {
    const PauliMixture m{MixingWeights::two_way(0.25), DecoherenceFunction(c)};
    const auto exact = analyze_experiment(m, exp_grid, analysis, {0.0, 1}, rho0);
    o.require(std::abs(exact.fit.c_hat - c) <= 1e-6 * c, "noiseless c within 1e-6 relative");
    std::vector<double> rel_err;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const auto a = analyze_experiment(m, exp_grid, analysis, {0.02, seed}, rho0);
      rel_err.push_back(std::abs(a.fit.c_hat - c) / c);
    }
    const double med = median(rel_err);
    o.require(med < 0.05, "noisy median relative error < 5%");
    o.detail << "c=" << c << ": noiseless rel err " << std::abs(exact.fit.c_hat - c) / c << ", noisy median "
             << med << "; ";
  }

  const PresetExpectation expected[] = {{"fig2", Verdict::NonMarkovian},
                                        {"fig3", Verdict::NonMarkovian},
                                        {"fig4", Verdict::Markovian},
                                        {"fig5", Verdict::Markovian},
                                        {"fig6", Verdict::NonMarkovian}};
  for (const auto& e : expected) {
    const auto& m = preset_mixture(e.name);
    std::vector<double> rel_err;
    int correct = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const auto a = analyze_experiment(m, exp_grid, analysis, {0.02, seed}, rho0);
      rel_err.push_back(std::abs(a.fit.c_hat - m.decoherence.c()) / m.decoherence.c());
      if (a.fitted_class.verdict == e.verdict) ++correct;
      for (const auto& pt : a.points) pipeline_fidelities.push_back(*pt.full.fidelity_to_target);
    }
    o.require(correct >= 45, std::string(e.name) + " verdict in >= 45/50 seeds");
    // the median here is informational; projection bias puts some presets above 5%
    o.detail << e.name << ": verdicts " << correct << "/50, median rel err " << median(rel_err) << "; ";
  }
}

void criterion_tomography(Outcome& o, const std::vector<double>& pipeline_fidelities) {
  std::mt19937_64 rng(99);
  double worst = 1.0;
  for (int i = 0; i < 100; ++i) {
    const auto rho = random_density(8, rng);
    const auto res = tomo_reconstruct(pauli_expectations(rho), rho);
    worst = std::min(worst, *res.fidelity_to_target);
  }
  o.require(worst >= 1.0 - 1e-10, "noiseless fidelity >= 1 - 1e-10");
  o.require(!pipeline_fidelities.empty(), "pipeline fidelities collected");
  double mean = 0.0;
  for (double f : pipeline_fidelities) mean += f;
  mean /= static_cast<double>(pipeline_fidelities.size());
  o.require(mean >= 0.96 && mean <= 1.0, "mean noisy fidelity in [0.96, 1]");
  o.detail << "min noiseless fidelity = " << worst << ", mean sigma=0.02 fidelity = " << mean << " over "
           << pipeline_fidelities.size() << " states";
}

void criterion_blp(Outcome& o) {
  const auto series = blp_monitor(preset_mixture("fig2"), DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1),
                                  standard_grid());
  double worst_increase = -1e300;
  for (std::size_t i = 1; i < series.size(); ++i) {
    worst_increase = std::max(worst_increase, series[i].trace_distance - series[i - 1].trace_distance);
  }
  o.require(worst_increase <= 1e-12, "trace distance non-increasing within 1e-12");
  o.detail << "max step increase = " << worst_increase << ", D(1.5) = " << series.back().trace_distance;
}

}  // namespace

int main() {
  std::vector<double> pipeline_fidelities;
  report(1, "two-way mixtures are non-Markovian", criterion_two_way);
  report(2, "three-way verdicts and gamma1 sign change", criterion_three_way);
  report(3, "equal-mixing rates coincide", criterion_equal_mixing);
  report(4, "dilation matches Kraus, analytic and PTM channels", criterion_dilation);
  report(5, "propagator CP check agrees with rate signs", criterion_sign_cp);
  report(6, "estimation round trip", [&](Outcome& o) { criterion_estimation(o, pipeline_fidelities); });
  report(7, "tomography quality", [&](Outcome& o) { criterion_tomography(o, pipeline_fidelities); });
  report(8, "BLP trace distance monotone for the two-way mixture", criterion_blp);
  std::printf("%d of 8 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
