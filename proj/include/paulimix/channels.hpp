#pragma once

// Pauli semigroups Lambda_i(t)[rho] = (1 - p) rho + p sigma_i rho sigma_i,
// p(t) = (1 - e^{-ct}) / 2, and their convex mixtures.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paulimix/qmath.hpp"

namespace paulimix {

/// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
inline ComplexMatrix pauli(int index) {
  ComplexMatrix m(2, 2);
  switch (index) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw DomainError("pauli index must be in {0, 1, 2, 3}");
  }
  return m;
}

class DecoherenceFunction {
 public:
  explicit DecoherenceFunction(double c) : c_(c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("decoherence rate c must be positive");
  }

  double c() const noexcept { return c_; }

  double p(double t) const {
    check_time(t);
    return -0.5 * std::expm1(-c_ * t);
  }

  double pdot(double t) const {
    check_time(t);
    return 0.5 * c_ * std::exp(-c_ * t);
  }

 private:
  static void check_time(double t) {
    if (!(t >= 0.0)) throw DomainError("time must be non-negative");
  }

  double c_;
};

inline double p_of_t(const DecoherenceFunction& f, double t) { return f.p(t); }
inline double pdot_of_t(const DecoherenceFunction& f, double t) { return f.pdot(t); }

class PauliAxis {
 public:
  explicit PauliAxis(int index) : index_(index) {
    if (index < 1 || index > 3) throw DomainError("Pauli axis must be 1, 2 or 3");
  }
  int index() const noexcept { return index_; }
  ComplexMatrix matrix() const { return pauli(index_); }

  friend bool operator==(PauliAxis, PauliAxis) = default;

 private:
  int index_;
};

class MixingWeights {
 public:
  MixingWeights(double x1, double x2, double x3) : x_{x1, x2, x3} {
    for (double xi : x_) {
      if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("mixing weights must lie in [0, 1]");
    }
    if (std::abs(x1 + x2 + x3 - 1.0) > 1e-12) throw DomainError("mixing weights must sum to 1");
  }

  /// a * Lambda_3 + (1 - a) * Lambda_2.
  static MixingWeights two_way(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("two-way mixing parameter must lie in [0, 1]");
    return {0.0, 1.0 - a, a};
  }

  static MixingWeights equal() { return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}; }

  double x1() const noexcept { return x_[0]; }
  double x2() const noexcept { return x_[1]; }
  double x3() const noexcept { return x_[2]; }
  /// Weight of axis i in {1, 2, 3}.
  double operator[](int axis) const { return x_.at(static_cast<std::size_t>(axis - 1)); }
  const std::array<double, 3>& values() const noexcept { return x_; }

 private:
  std::array<double, 3> x_;
};

struct PauliMixture {
  MixingWeights weights;
  DecoherenceFunction decoherence;
};

struct KrausSet {
  std::vector<ComplexMatrix> operators;

  ComplexMatrix apply(const ComplexMatrix& rho) const {
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (const auto& e : operators) out += e * rho * e.adjoint();
    return out;
  }

  /// max |sum_k E_k^dag E_k - I|
  double completeness_defect() const {
    ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
    for (const auto& e : operators) sum += e.adjoint() * e;
    return max_abs(sum - identity(2));
  }
};

/// Eigenvalues of a Pauli-diagonal map on sigma_1, sigma_2, sigma_3.
struct PauliTransferDiagonal {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double lambda3 = 1.0;

  double operator[](int axis) const {
    switch (axis) {
      case 1: return lambda1;
      case 2: return lambda2;
      case 3: return lambda3;
      default: throw DomainError("axis must be 1, 2 or 3");
    }
  }

  BlochVector apply(const BlochVector& r) const {
    return {lambda1 * r.r1, lambda2 * r.r2, lambda3 * r.r3};
  }
};

namespace detail {

inline void require_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DomainError("expected a single-qubit state");
}

inline ComplexMatrix dephase(const ComplexMatrix& rho, int axis, double p) {
  const ComplexMatrix s = pauli(axis);
  return (1.0 - p) * rho + p * s * rho * s;
}

}  // namespace detail

/// Lambda_axis at decoherence value p, without validating the output.
inline ComplexMatrix apply_semigroup_at(int axis, double p, const ComplexMatrix& rho) {
  return detail::dephase(rho, axis, p);
}

inline DensityMatrix apply_semigroup(PauliAxis axis, const DecoherenceFunction& f, const DensityMatrix& rho,
                                     double t) {
  detail::require_qubit(rho);
  return DensityMatrix(detail::dephase(rho.matrix(), axis.index(), f.p(t)));
}

/// sum_i x_i Lambda_i evaluated at decoherence value p.
inline ComplexMatrix mixture_apply_at(const MixingWeights& w, double p, const ComplexMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (int i = 1; i <= 3; ++i) {
    if (w[i] != 0.0) out += w[i] * detail::dephase(rho, i, p);
  }
  return out;
}

inline DensityMatrix mixture_apply(const PauliMixture& m, const DensityMatrix& rho, double t) {
  detail::require_qubit(rho);
  return DensityMatrix(mixture_apply_at(m.weights, m.decoherence.p(t), rho.matrix()));
}

inline KrausSet mixture_kraus_at(const MixingWeights& w, double p) {
  KrausSet k;
  k.operators.push_back(std::sqrt(1.0 - p) * pauli(0));
  for (int i = 1; i <= 3; ++i) k.operators.push_back(std::sqrt(w[i] * p) * pauli(i));
  return k;
}

inline KrausSet mixture_kraus(const PauliMixture& m, double t) {
  return mixture_kraus_at(m.weights, m.decoherence.p(t));
}

/// lambda_i = 1 - 2 p (1 - x_i)
inline PauliTransferDiagonal mixture_ptm_at(const MixingWeights& w, double p) {
  return {1.0 - 2.0 * p * (1.0 - w.x1()), 1.0 - 2.0 * p * (1.0 - w.x2()), 1.0 - 2.0 * p * (1.0 - w.x3())};
}

inline PauliTransferDiagonal mixture_ptm(const PauliMixture& m, double t) {
  return mixture_ptm_at(m.weights, m.decoherence.p(t));
}

// ---------------------------------------------------------------------------
// Named configurations of the five experiments.

struct Preset {
  std::string name;
  PauliMixture mixture;
  std::optional<double> two_way_a;  // set for the two-way presets
  std::string description;
};

inline std::vector<Preset> presets() {
  const DecoherenceFunction c2(2.0);
  const DecoherenceFunction c3(3.0);
  return {
      {"fig2", {MixingWeights::two_way(0.5), c2}, 0.5, "two-way equal mixing a=0.5, c=2"},
      {"fig3", {MixingWeights::two_way(0.25), c2}, 0.25, "two-way unequal mixing a=0.25, c=2"},
      {"fig4", {MixingWeights::equal(), c3}, std::nullopt, "three-way equal mixing x=(1/3,1/3,1/3), c=3"},
      {"fig5", {MixingWeights(0.3, 0.4, 0.3), c3}, std::nullopt, "three-way mixing x=(0.3,0.4,0.3), c=3"},
      {"fig6", {MixingWeights(0.2, 0.4, 0.4), c3}, std::nullopt, "three-way mixing x=(0.2,0.4,0.4), c=3"},
  };
}

inline std::optional<Preset> find_preset(std::string_view name) {
  for (auto& p : presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace paulimix
