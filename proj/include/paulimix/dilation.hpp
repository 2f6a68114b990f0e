#pragma once

// Three-qubit dilation of a Pauli mixture: ancillas start in |00>, V rotates
// them, U applies sigma_k to the system when the ancillas are in |k>, and W
// (identity here) acts on the ancillas last. Tracing out the ancillas leaves
//   E_k = sum_i W_ki V_i0 sigma_i.

#include <cmath>
#include <variant>

#include "paulimix/channels.hpp"

namespace paulimix {

struct TwoMix {
  double a = 0.5;
};

struct ThreeMix {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

/// Generic completion of the prescribed first column (any weights).
struct Completed {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

using AncillaKind = std::variant<TwoMix, ThreeMix, Completed>;

struct AncillaUnitary {
  ComplexMatrix matrix;
  AncillaKind kind;
  double p = 0.0;
};

namespace detail {

inline void check_p(double p) {
  if (!(p >= 0.0 && p < 0.5)) throw DomainError("decoherence value p must lie in [0, 1/2)");
}

}  // namespace detail

inline double unitarity_defect(const ComplexMatrix& u) {
  return max_abs(u.adjoint() * u - identity(u.cols()));
}

inline AncillaUnitary build_v_two_mix(double a, double p) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("two-way mixing parameter must lie in [0, 1]");
  detail::check_p(p);
  const double q = 1.0 - p;
  ComplexMatrix v(4, 4);
  v << std::sqrt(q), std::sqrt(p), 0, 0,
       0, 0, 1, 0,
       std::sqrt(p * (1 - a)), -std::sqrt((1 - a) * q), 0, std::sqrt(a),
       std::sqrt(a * p), -std::sqrt(a * q), 0, -std::sqrt(1 - a);
  return {v, TwoMix{a}, p};
}

/// Requires x1 > 0 and x2 > 0. The (3, 3) entry uses -sqrt(x2 / (1 - x1)),
/// equal to -x2 / sqrt(x2 (1 - x1)) wherever the latter is defined.
inline AncillaUnitary build_v_three_mix(const MixingWeights& w, double p) {
  detail::check_p(p);
  const double x1 = w.x1();
  const double x2 = w.x2();
  const double x3 = w.x3();
  if (!(x1 > 0.0) || !(x2 > 0.0) || !(x1 < 1.0)) {
    throw DegenerateParametrizationError(
        "three-way ancilla unitary needs x1 > 0 and x2 > 0; use build_v_two_mix when x1 = 0");
  }
  const double q = 1.0 - p;
  const double r = 1.0 - x1;
  ComplexMatrix v(4, 4);
  v << std::sqrt(q), std::sqrt(p), 0, 0,
       std::sqrt(x1 * p), -std::sqrt(x1 * q), std::sqrt(r), 0,
       std::sqrt(x2 * p), -std::sqrt(x2 * q), -std::sqrt(x1 * x2 / r), std::sqrt(x3 / r),
       std::sqrt(x3 * p), -std::sqrt(x3 * q), -std::sqrt(x1 * x3 / r), -std::sqrt(x2 / r);
  return {v, ThreeMix{x1, x2, x3}, p};
}

/// Householder reflection whose first column is
/// (sqrt(1-p), sqrt(x1 p), sqrt(x2 p), sqrt(x3 p)).
inline AncillaUnitary build_v_completed(const MixingWeights& w, double p) {
  detail::check_p(p);
  Eigen::Vector4d col(std::sqrt(1.0 - p), std::sqrt(w.x1() * p), std::sqrt(w.x2() * p), std::sqrt(w.x3() * p));
  col.normalize();
  Eigen::Vector4d u = col - Eigen::Vector4d::UnitX();
  ComplexMatrix v = identity(4);
  const double n2 = u.squaredNorm();
  if (n2 > 1e-30) {
    const Eigen::Matrix4d h = Eigen::Matrix4d::Identity() - 2.0 * u * u.transpose() / n2;
    v = h.cast<Complex>();
  }
  return {v, Completed{w.x1(), w.x2(), w.x3()}, p};
}

/// Picks the two-way form when x1 = 0, the three-way form when x1, x2 > 0,
/// and the Householder completion otherwise.
inline AncillaUnitary ancilla_unitary_for(const MixingWeights& w, double p) {
  if (w.x1() == 0.0) return build_v_two_mix(w.x3(), p);
  if (w.x2() > 0.0 && w.x1() < 1.0) return build_v_three_mix(w, p);
  return build_v_completed(w, p);
}

/// U = sigma_0 (x) |00><00| + sigma_1 (x) |01><01| + sigma_2 (x) |10><10| + sigma_3 (x) |11><11|
inline ComplexMatrix build_controlled_u() {
  ComplexMatrix u = ComplexMatrix::Zero(8, 8);
  for (int k = 0; k < 4; ++k) {
    ComplexMatrix proj = ComplexMatrix::Zero(4, 4);
    proj(k, k) = 1.0;
    u += tensor(pauli(k), proj);
  }
  return u;
}

struct DilationCircuit {
  AncillaUnitary v;
  ComplexMatrix u;
  ComplexMatrix w;
  ComplexMatrix total;  // (I (x) W) U (I (x) V)
};

inline DilationCircuit assemble(AncillaUnitary v) {
  if (v.matrix.rows() != 4 || v.matrix.cols() != 4) throw DimensionError("ancilla unitary must be 4x4");
  DilationCircuit c{std::move(v), build_controlled_u(), identity(4), {}};
  c.total = tensor(identity(2), c.w) * c.u * tensor(identity(2), c.v.matrix);
  return c;
}

/// Circuit realizing the mixture at time t.
inline DilationCircuit circuit_for(const PauliMixture& m, double t) {
  return assemble(ancilla_unitary_for(m.weights, m.decoherence.p(t)));
}

/// E_k = sum_i W_ki V_i0 sigma_i
inline KrausSet kraus_from_dilation(const DilationCircuit& c) {
  KrausSet out;
  for (int k = 0; k < 4; ++k) {
    ComplexMatrix e = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 4; ++i) e += c.w(k, i) * c.v.matrix(i, 0) * pauli(i);
    out.operators.push_back(e);
  }
  return out;
}

/// Reads E_k straight off the total unitary: (E_k)_{s's} = <s', k| T |s, 00>.
inline KrausSet kraus_from_total(const DilationCircuit& c) {
  KrausSet out;
  for (int k = 0; k < 4; ++k) {
    ComplexMatrix e(2, 2);
    for (int sp = 0; sp < 2; ++sp) {
      for (int s = 0; s < 2; ++s) e(sp, s) = c.total(4 * sp + k, 4 * s);
    }
    out.operators.push_back(e);
  }
  return out;
}

}  // namespace paulimix
