#pragma once

// Dense complex linear algebra for one system qubit plus two ancillas.
//
// Basis ordering for three-qubit objects: index = 4*s + 2*a1 + a2, i.e. the
// system qubit is the most significant bit.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "paulimix/errors.hpp"

namespace paulimix {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

struct Tolerances {
  double validity = 1e-10;
  double algebraic = 1e-12;
};

inline Tolerances default_tolerances() { return {}; }

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double hermiticity_defect(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline ComplexMatrix projector(const ComplexVector& psi) { return psi * psi.adjoint(); }

/// Computational basis ket |index> in dimension dim.
inline ComplexVector basis_ket(Eigen::Index dim, Eigen::Index index) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition (cyclic Jacobi)

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Pairs (p, q) are
/// swept in row-major order; each rotation first removes the phase of the
/// off-diagonal element, then applies a real Jacobi rotation.
template <typename Derived>
HermitianEigen hermitian_eigen(const Eigen::MatrixBase<Derived>& input, int max_sweeps = 100) {
  if (input.rows() != input.cols()) {
    throw DimensionError("hermitian_eigen: matrix is not square");
  }
  const Eigen::Index n = input.rows();
  ComplexMatrix a = 0.5 * (input + input.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double scale = std::max(a.norm(), 1e-300);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(off) <= 1e-15 * scale) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double mag = std::abs(b);
        if (mag <= 1e-300) continue;
        const Complex phase = b / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] restricted to (p, q).
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        const ComplexVector colp = a.col(p);
        const ComplexVector colq = a.col(q);
        a.col(p) = colp * gpp + colq * gqp;
        a.col(q) = colp * gpq + colq * gqq;
        const Eigen::RowVectorXcd rowp = a.row(p);
        const Eigen::RowVectorXcd rowq = a.row(q);
        a.row(p) = std::conj(gpp) * rowp + std::conj(gqp) * rowq;
        a.row(q) = std::conj(gpq) * rowp + std::conj(gqq) * rowq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        const ComplexVector vp = v.col(p);
        const ComplexVector vq = v.col(q);
        v.col(p) = vp * gpp + vq * gqp;
        v.col(q) = vp * gpq + vq * gqq;
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

/// Euclidean projection onto the probability simplex {w >= 0, sum w = 1}.
inline RealVector project_to_simplex(const RealVector& v) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double running = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    running += u[j];
    const double candidate = (running - 1.0) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).cwiseMax(0.0).matrix();
}

// ---------------------------------------------------------------------------
// States

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity at `tol.validity`.
  explicit DensityMatrix(ComplexMatrix m, const Tolerances& tol = default_tolerances())
      : m_(std::move(m)) {
    const Eigen::Index d = m_.rows();
    if (m_.cols() != d || (d != 2 && d != 4 && d != 8)) {
      std::ostringstream os;
      os << "density matrix must be 2x2, 4x4 or 8x8, got " << m_.rows() << "x" << m_.cols();
      throw DimensionError(os.str());
    }
    if (hermiticity_defect(m_) > tol.validity) {
      throw DomainError("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0)) > tol.validity) {
      throw DomainError("density matrix trace differs from 1");
    }
    if (hermitian_eigen(m_).values.minCoeff() < -tol.validity) {
      throw DomainError("density matrix has a negative eigenvalue");
    }
  }

  static DensityMatrix pure(const ComplexVector& psi) {
    return DensityMatrix(projector(psi / psi.norm()));
  }

  static DensityMatrix maximally_mixed(Eigen::Index dim) {
    return DensityMatrix(identity(dim) / static_cast<double>(dim));
  }

  /// |index><index|
  static DensityMatrix basis(Eigen::Index dim, Eigen::Index index) {
    return pure(basis_ket(dim, index));
  }

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

struct BlochVector {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  double norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }
};

inline BlochVector bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("bloch_vector: expected a single-qubit state");
  // rho = (I + r.sigma)/2
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

inline DensityMatrix from_bloch(const BlochVector& r, const Tolerances& tol = default_tolerances()) {
  if (r.norm() > 1.0 + tol.validity) throw DomainError("Bloch vector lies outside the unit ball");
  ComplexMatrix m(2, 2);
  m << 0.5 * (1.0 + r.r3), 0.5 * Complex(r.r1, -r.r2), 0.5 * Complex(r.r1, r.r2), 0.5 * (1.0 - r.r3);
  return DensityMatrix(m, tol);
}

/// Traces out both ancillas of a system (x) ancilla1 (x) ancilla2 state.
inline ComplexMatrix partial_trace_ancilla(const ComplexMatrix& rho) {
  if (rho.rows() != 8 || rho.cols() != 8) {
    throw DimensionError("partial_trace_ancilla: expected an 8x8 matrix");
  }
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 4; ++k) out(i, j) += rho(4 * i + k, 4 * j + k);
    }
  }
  return out;
}

inline DensityMatrix partial_trace_ancilla(const DensityMatrix& rho) {
  return DensityMatrix(partial_trace_ancilla(rho.matrix()));
}

/// Normalized Hilbert-Schmidt overlap |Tr(A B^dag)| / sqrt(Tr(A^dag A) Tr(B^dag B)).
inline double fidelity(const ComplexMatrix& expt, const ComplexMatrix& theo) {
  if (expt.rows() != theo.rows() || expt.cols() != theo.cols()) {
    throw DimensionError("fidelity: dimension mismatch");
  }
  const double ne = expt.squaredNorm();
  const double nt = theo.squaredNorm();
  if (ne == 0.0 || nt == 0.0) throw DomainError("fidelity: zero-norm argument");
  const Complex overlap = (expt.array() * theo.conjugate().array()).sum();
  return std::min(1.0, std::abs(overlap) / std::sqrt(ne * nt));
}

inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_distance: dimension mismatch");
  return 0.5 * hermitian_eigen(a.matrix() - b.matrix()).values.cwiseAbs().sum();
}

/// Closest trace-one positive semidefinite matrix in Frobenius norm.
inline DensityMatrix nearest_density_matrix(const ComplexMatrix& h,
                                            const Tolerances& tol = default_tolerances()) {
  if (h.rows() != h.cols()) throw DimensionError("nearest_density_matrix: matrix is not square");
  const HermitianEigen eig = hermitian_eigen(0.5 * (h + h.adjoint()));
  const RealVector w = project_to_simplex(eig.values);
  ComplexMatrix out = eig.vectors * w.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  out = 0.5 * (out + out.adjoint());
  return DensityMatrix(out, tol);
}

inline DensityMatrix nearest_density_matrix(const DensityMatrix& rho) {
  return nearest_density_matrix(rho.matrix());
}

}  // namespace paulimix
