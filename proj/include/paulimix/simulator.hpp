#pragma once

// Exact simulation of the dilation circuit, Pauli-expectation measurement
// with optional Gaussian noise, and tomographic reconstruction.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "paulimix/dilation.hpp"

namespace paulimix {

/// Runs rho_s (x) |00><00| through the circuit; returns the 8x8 output.
inline DensityMatrix evolve_full(const DilationCircuit& c, const DensityMatrix& rho_s) {
  if (rho_s.dim() != 2) throw DimensionError("run_dilation: expected a single-qubit input state");
  const ComplexMatrix in = tensor(rho_s.matrix(), DensityMatrix::basis(4, 0).matrix());
  ComplexMatrix out = c.total * in * c.total.adjoint();
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

inline DensityMatrix run_dilation(const DilationCircuit& c, const DensityMatrix& rho_s) {
  return partial_trace_ancilla(evolve_full(c, rho_s));
}

// ---------------------------------------------------------------------------
// Pauli strings. The first character acts on the most significant qubit.

inline ComplexMatrix pauli_string_matrix(std::string_view label) {
  ComplexMatrix m = identity(1);
  for (char ch : label) {
    int idx = 0;
    switch (ch) {
      case 'I': idx = 0; break;
      case 'X': idx = 1; break;
      case 'Y': idx = 2; break;
      case 'Z': idx = 3; break;
      default: throw DomainError(std::string("invalid Pauli label character '") + ch + "'");
    }
    m = tensor(m, pauli(idx));
  }
  return m;
}

/// All 4^n - 1 non-identity labels in lexicographic I < X < Y < Z order.
inline std::vector<std::string> pauli_labels(int n_qubits) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  std::vector<std::string> out;
  int total = 1;
  for (int i = 0; i < n_qubits; ++i) total *= 4;
  for (int code = 1; code < total; ++code) {
    std::string label(static_cast<std::size_t>(n_qubits), 'I');
    int rest = code;
    for (int q = n_qubits - 1; q >= 0; --q) {
      label[static_cast<std::size_t>(q)] = kChars[rest % 4];
      rest /= 4;
    }
    out.push_back(std::move(label));
  }
  return out;
}

struct MeasurementRecord {
  int n_qubits = 1;
  std::map<std::string, double> expectations;
};

inline int qubit_count(Eigen::Index dim) {
  switch (dim) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: throw DimensionError("unsupported state dimension");
  }
}

/// Exact Tr(rho P) for every non-identity Pauli string P.
inline MeasurementRecord pauli_expectations(const DensityMatrix& rho) {
  MeasurementRecord rec;
  rec.n_qubits = qubit_count(rho.dim());
  for (const auto& label : pauli_labels(rec.n_qubits)) {
    rec.expectations[label] = (rho.matrix() * pauli_string_matrix(label)).trace().real();
  }
  return rec;
}

struct NoiseModel {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint32_t lo32(std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffULL); }
inline std::uint32_t hi32(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

}  // namespace detail

/// Adds N(0, sigma^2) to every expectation. Each label draws from its own
/// generator seeded by (seed, stream, label), so results do not depend on
/// evaluation order.
inline MeasurementRecord add_noise(const MeasurementRecord& rec, const NoiseModel& nm, std::uint64_t stream = 0) {
  if (!(nm.sigma >= 0.0)) throw DomainError("noise sigma must be non-negative");
  if (nm.sigma == 0.0) return rec;
  MeasurementRecord out = rec;
  for (auto& [label, value] : out.expectations) {
    const std::uint64_t h = detail::fnv1a(label);
    std::seed_seq seq{detail::lo32(nm.seed), detail::hi32(nm.seed), detail::lo32(stream), detail::hi32(stream),
                      detail::lo32(h),       detail::hi32(h)};
    std::mt19937_64 gen(seq);
    std::normal_distribution<double> dist(0.0, nm.sigma);
    value += dist(gen);
  }
  return out;
}

struct TomographyResult {
  DensityMatrix state;
  std::optional<double> fidelity_to_target;
};

/// Linear inversion (I + sum_P <P> P) / 2^n followed by projection onto the
/// density matrices.
inline TomographyResult tomo_reconstruct(const MeasurementRecord& rec,
                                         const std::optional<DensityMatrix>& target = std::nullopt) {
  if (rec.n_qubits < 1 || rec.n_qubits > 3) throw DimensionError("tomography supports 1 to 3 qubits");
  const Eigen::Index dim = Eigen::Index{1} << rec.n_qubits;
  ComplexMatrix lin = identity(dim);
  for (const auto& label : pauli_labels(rec.n_qubits)) {
    const auto it = rec.expectations.find(label);
    if (it == rec.expectations.end()) throw MissingObservableError(label);
    lin += it->second * pauli_string_matrix(label);
  }
  lin /= static_cast<double>(dim);
  TomographyResult out{nearest_density_matrix(lin), std::nullopt};
  if (target) out.fidelity_to_target = fidelity(out.state.matrix(), target->matrix());
  return out;
}

// ---------------------------------------------------------------------------
// End-to-end synthetic experiment

struct ExperimentPoint {
  double t = 0.0;
  double p = 0.0;
  TomographyResult full;      // reconstructed three-qubit state vs. ideal circuit output
  DensityMatrix system;       // reconstructed state with ancillas traced out
  DensityMatrix theory;       // analytic mixture output
  double system_fidelity = 0.0;
};

/// For each t: build the circuit at p(t), evolve rho0 (x) |00><00|, measure
/// all 63 three-qubit Pauli expectations (noisy), reconstruct, trace out the
/// ancillas. Time index i uses noise stream i.
inline std::vector<ExperimentPoint> synthetic_experiment(const PauliMixture& m, const std::vector<double>& grid,
                                                         const NoiseModel& nm, const DensityMatrix& rho0) {
  if (rho0.dim() != 2) throw DimensionError("initial state must be a single-qubit state");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("time grid must be strictly increasing");
  }
  std::vector<ExperimentPoint> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const DilationCircuit circ = circuit_for(m, t);
    const DensityMatrix ideal = evolve_full(circ, rho0);
    const MeasurementRecord rec = add_noise(pauli_expectations(ideal), nm, i);
    TomographyResult full = tomo_reconstruct(rec, ideal);
    DensityMatrix system = partial_trace_ancilla(full.state);
    DensityMatrix theory = mixture_apply(m, rho0, t);
    const double f = fidelity(system.matrix(), theory.matrix());
    out.push_back({t, m.decoherence.p(t), std::move(full), std::move(system), std::move(theory), f});
  }
  return out;
}

}  // namespace paulimix
