#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "paulimix/channels.hpp"
#include "test_util.hpp"

using namespace paulimix;
using paulimix::testing::random_density;
using paulimix::testing::random_weights;

namespace {

// e^{-1} and (1 - e^{-1}) / 2
constexpr double kInvE = 0.36787944117144233;
constexpr double kP = 0.31606027941427883;

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(DecoherenceFunction, Values) {
  const DecoherenceFunction f2(2.0);
  EXPECT_EQ(p_of_t(f2, 0.0), 0.0);
  EXPECT_NEAR(p_of_t(f2, 0.5), kP, 1e-15);
  EXPECT_GT(p_of_t(DecoherenceFunction(3.0), 10.0), 0.4999);
  EXPECT_LT(p_of_t(DecoherenceFunction(3.0), 10.0), 0.5);

  EXPECT_NEAR(pdot_of_t(f2, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(pdot_of_t(DecoherenceFunction(3.0), 0.0), 1.5, 1e-15);
  EXPECT_NEAR(pdot_of_t(f2, 0.5), kInvE, 1e-15);
}

TEST(DecoherenceFunction, Errors) {
  EXPECT_THROW(DecoherenceFunction(0.0), DomainError);
  EXPECT_THROW(DecoherenceFunction(-1.0), DomainError);
  EXPECT_THROW(p_of_t(DecoherenceFunction(1.0), -0.1), DomainError);
  EXPECT_THROW(pdot_of_t(DecoherenceFunction(1.0), -0.1), DomainError);
}

TEST(DecoherenceFunction, DerivativeMatchesFiniteDifference) {
  const double h = 1e-5;
  for (double c : {0.5, 2.0, 3.0, 7.0}) {
    const DecoherenceFunction f(c);
    for (double t = 0.01; t < 2.0; t += 0.137) {
      const double fd = (f.p(t + h) - f.p(t - h)) / (2.0 * h);
      EXPECT_NEAR(f.pdot(t), fd, 1e-6);
    }
  }
}

TEST(DecoherenceFunction, StrictlyIncreasing) {
  const DecoherenceFunction f(3.0);
  double prev = f.p(0.0);
  for (double t = 0.05; t < 5.0; t += 0.05) {
    EXPECT_GT(f.p(t), prev);
    prev = f.p(t);
  }
}

TEST(Weights, Validation) {
  EXPECT_NO_THROW(MixingWeights(0.0, 0.5, 0.5));
  EXPECT_THROW(MixingWeights(0.33, 0.33, 0.33), DomainError);
  EXPECT_THROW(MixingWeights(-0.1, 0.6, 0.5), DomainError);
  EXPECT_THROW(MixingWeights::two_way(1.5), DomainError);
  const auto w = MixingWeights::two_way(0.25);
  EXPECT_EQ(w.x1(), 0.0);
  EXPECT_EQ(w.x2(), 0.75);
  EXPECT_EQ(w.x3(), 0.25);
  EXPECT_THROW(PauliAxis(0), DomainError);
  EXPECT_THROW(PauliAxis(4), DomainError);
}

TEST(Presets, FiveConfigurations) {
  const auto all = presets();
  ASSERT_EQ(all.size(), 5u);
  EXPECT_EQ(find_preset("fig2")->mixture.weights.x3(), 0.5);
  EXPECT_EQ(find_preset("fig3")->mixture.weights.x2(), 0.75);
  EXPECT_EQ(find_preset("fig3")->mixture.decoherence.c(), 2.0);
  EXPECT_EQ(find_preset("fig4")->mixture.weights.x1(), 1.0 / 3.0);
  EXPECT_EQ(find_preset("fig5")->mixture.weights.x2(), 0.4);
  EXPECT_EQ(find_preset("fig6")->mixture.weights.x1(), 0.2);
  EXPECT_EQ(find_preset("fig6")->mixture.decoherence.c(), 3.0);
  EXPECT_FALSE(find_preset("fig7").has_value());
}

TEST(Semigroup, Examples) {
  const DecoherenceFunction f(2.0);
  const auto zero = DensityMatrix::basis(2, 0);
  for (double t : {0.0, 0.3, 2.0}) {
    EXPECT_LT(max_abs(apply_semigroup(PauliAxis(3), f, zero, t).matrix() - zero.matrix()), 1e-15);
  }
  // p -> 1/2 fully dephases |+>
  ComplexVector plus(2);
  plus << 1.0, 1.0;
  const ComplexMatrix out = apply_semigroup_at(3, 0.5, DensityMatrix::pure(plus).matrix());
  EXPECT_LT(max_abs(out - identity(2) / 2.0), 1e-15);

  const auto flipped = apply_semigroup(PauliAxis(1), f, zero, 0.5);
  EXPECT_LT(max_abs(flipped.matrix() - diag2(1.0 - kP, kP)), 1e-15);
}

TEST(Semigroup, CompositionMatchesSumOfTimes) {
  std::mt19937_64 rng(7);
  const DecoherenceFunction f(2.0);
  for (int axis = 1; axis <= 3; ++axis) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = random_density(2, rng);
      const double s = 0.1 * trial;
      const double t = 0.05 + 0.07 * trial;
      const auto twice = apply_semigroup(PauliAxis(axis), f, apply_semigroup(PauliAxis(axis), f, rho, s), t);
      const double ps = f.p(s);
      const double pt = f.p(t);
      const double p_eff = ps + pt - 2.0 * ps * pt;
      EXPECT_NEAR(p_eff, f.p(s + t), 1e-15);
      EXPECT_LT(max_abs(twice.matrix() - apply_semigroup_at(axis, p_eff, rho.matrix())), 1e-12);
      EXPECT_LT(max_abs(twice.matrix() - apply_semigroup(PauliAxis(axis), f, rho, s + t).matrix()), 1e-12);
    }
  }
}

TEST(Mixture, Examples) {
  const DecoherenceFunction f(2.0);
  std::mt19937_64 rng(9);
  const auto rho = random_density(2, rng);
  const PauliMixture only_x{MixingWeights(1.0, 0.0, 0.0), f};
  EXPECT_LT(max_abs(mixture_apply(only_x, rho, 0.4).matrix() - apply_semigroup(PauliAxis(1), f, rho, 0.4).matrix()),
            1e-15);

  const PauliMixture equal{MixingWeights::equal(), f};
  EXPECT_LT(max_abs(mixture_apply(equal, DensityMatrix::maximally_mixed(2), 0.7).matrix() - identity(2) / 2.0),
            1e-15);

  // sigma_2 flips |0>, sigma_3 fixes it
  const PauliMixture yz{MixingWeights(0.0, 0.5, 0.5), f};
  const ComplexMatrix expected = 0.5 * (diag2(1.0 - kP, kP) + diag2(1.0, 0.0));
  const auto out = mixture_apply(yz, DensityMatrix::basis(2, 0), 0.5);
  EXPECT_LT(max_abs(out.matrix() - expected), 1e-15);
  EXPECT_LT(max_abs(out.matrix() - diag2(1.0 - 0.5 * kP, 0.5 * kP)), 1e-15);
}

TEST(Kraus, Examples) {
  const PauliMixture m{MixingWeights(0.2, 0.4, 0.4), DecoherenceFunction(3.0)};
  const auto k0 = mixture_kraus(m, 0.0);
  ASSERT_EQ(k0.operators.size(), 4u);
  EXPECT_LT(max_abs(k0.operators[0] - identity(2)), 1e-15);
  for (int k = 1; k < 4; ++k) EXPECT_LT(max_abs(k0.operators[static_cast<std::size_t>(k)]), 1e-15);

  const auto k = mixture_kraus_at(MixingWeights::equal(), 0.3);
  EXPECT_LT(max_abs(k.operators[0] - std::sqrt(0.7) * pauli(0)), 1e-15);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_LT(max_abs(k.operators[static_cast<std::size_t>(i)] - std::sqrt(0.1) * pauli(i)), 1e-15);
  }
}

TEST(Kraus, CompletenessForRandomMixtures) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ut(0.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const PauliMixture m{random_weights(rng), DecoherenceFunction(0.5 + ut(rng))};
    EXPECT_LT(mixture_kraus(m, ut(rng)).completeness_defect(), 1e-12);
  }
}

TEST(Ptm, Examples) {
  const auto id = mixture_ptm(PauliMixture{MixingWeights::equal(), DecoherenceFunction(3.0)}, 0.0);
  EXPECT_EQ(id.lambda1, 1.0);
  EXPECT_EQ(id.lambda2, 1.0);
  EXPECT_EQ(id.lambda3, 1.0);

  const MixingWeights yz(0.0, 0.5, 0.5);
  const auto l = mixture_ptm_at(yz, 0.25);
  EXPECT_NEAR(l.lambda1, 0.5, 1e-15);
  EXPECT_NEAR(l.lambda2, 0.75, 1e-15);
  EXPECT_NEAR(l.lambda3, 0.75, 1e-15);
  // cross-check on the Bloch basis states: +x, +y, +z
  const BlochVector axes[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i) {
    const auto out = bloch_vector(DensityMatrix(mixture_apply_at(yz, 0.25, from_bloch(axes[i]).matrix())));
    const double component[] = {out.r1, out.r2, out.r3};
    EXPECT_NEAR(component[i], l[i + 1], 1e-15);
  }

  const auto lim = mixture_ptm_at(MixingWeights(1.0, 0.0, 0.0), 0.5);
  EXPECT_NEAR(lim.lambda1, 1.0, 1e-15);
  EXPECT_NEAR(lim.lambda2, 0.0, 1e-15);
  EXPECT_NEAR(lim.lambda3, 0.0, 1e-15);
}

TEST(Ptm, EigenvaluesDecreaseAndStayPositive) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const PauliMixture m{random_weights(rng), DecoherenceFunction(3.0)};
    auto prev = mixture_ptm(m, 0.0);
    // past t ~ 12 the exponential is below double resolution and lambda plateaus
    for (double t = 0.1; t <= 5.0; t += 0.1) {
      const auto cur = mixture_ptm(m, t);
      for (int i = 1; i <= 3; ++i) {
        EXPECT_GT(cur[i], 0.0);
        EXPECT_LE(cur[i], 1.0);
        if (m.weights[i] < 1.0) {
          EXPECT_LT(cur[i], prev[i]);
        }
      }
      prev = cur;
    }
  }
}

// Analytic mixture, Kraus sum and Bloch-space action agree on random inputs.
TEST(Mixture, ThreeRepresentationsAgree) {
  std::mt19937_64 rng(21);
  for (int w = 0; w < 10; ++w) {
    const PauliMixture m{random_weights(rng), DecoherenceFunction(2.0 + w % 2)};
    for (int ti = 0; ti < 10; ++ti) {
      const double t = 0.15 * ti;
      const auto kraus = mixture_kraus(m, t);
      const auto ptm = mixture_ptm(m, t);
      for (int s = 0; s < 20; ++s) {
        const auto rho = random_density(2, rng);
        const auto analytic = mixture_apply(m, rho, t).matrix();
        const auto via_kraus = kraus.apply(rho.matrix());
        const auto via_ptm = from_bloch(ptm.apply(bloch_vector(rho))).matrix();
        EXPECT_LT((analytic - via_kraus).norm(), 1e-12);
        EXPECT_LT((analytic - via_ptm).norm(), 1e-12);
        EXPECT_LT((via_kraus - via_ptm).norm(), 1e-12);
        EXPECT_NEAR(analytic.trace().real(), 1.0, 1e-12);
        EXPECT_LT(hermiticity_defect(analytic), 1e-12);
      }
    }
  }
}

TEST(Mixture, RejectsNonQubitInput) {
  const PauliMixture m{MixingWeights::equal(), DecoherenceFunction(3.0)};
  EXPECT_THROW(mixture_apply(m, DensityMatrix::maximally_mixed(8), 0.1), DomainError);
  EXPECT_THROW(apply_semigroup(PauliAxis(1), m.decoherence, DensityMatrix::maximally_mixed(4), 0.1), DomainError);
}
