#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsim/states.hpp"

namespace qsim {

enum class Axis { X, Y, Z };

// Markovian Pauli noise: each listed axis acts on every qubit at rate kappa,
// i.e. Lindblad operators L_{q,axis} = sqrt(kappa) sigma_axis^(q).
struct NoiseChannel {
  std::vector<Axis> axes;  // sorted X < Y < Z, duplicates rejected
  double kappa = 0.0;
  int n_qubits = 0;

  NoiseChannel(std::vector<Axis> ax, double k, int n);
  static NoiseChannel single(Axis ax, double kappa, int n_qubits);
  static NoiseChannel isotropic(double kappa, int n_qubits);
  // Names accepted by the CLI: x, y, z, iso.
  static NoiseChannel from_name(const std::string& name, double kappa, int n_qubits);

  int op_count() const { return static_cast<int>(axes.size()) * n_qubits; }
};

inline constexpr double kDefaultStep = 1e-3;

// The full operator list, qubit-major with axes ordered X < Y < Z per qubit.
std::vector<ComplexMatrix> lindblad_ops(const NoiseChannel& ch);

// Dissipator sum_L (L rho L^dag - 1/2 {L^dag L, rho}); the optional
// Hamiltonian adds -i [H, rho]. The state catalog never sets H.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const NoiseChannel& ch,
                           const ComplexMatrix* hamiltonian = nullptr);

// First-order step rho + rhs(rho) * dt; validation against the short-time
// matrices only, not an integrator.
DensityMatrix euler_step(const DensityMatrix& rho, const NoiseChannel& ch, double dt);

struct PropagationStats {
  double max_trace_drift = 0.0;
  long steps = 0;
};

// Classical fixed-step RK4; the state is re-Hermitized after every step and
// the run aborts (StepTooLarge) if the trace drifts by more than 1e-6.
DensityMatrix propagate(const DensityMatrix& rho0, const NoiseChannel& ch, double t_final,
                        double step = kDefaultStep, PropagationStats* stats = nullptr);

// Single pass through an ascending time grid, invoking on_sample at each
// requested time (including t=0 when present).
void propagate_sampled(const DensityMatrix& rho0, const NoiseChannel& ch,
                       std::span<const double> times, double step,
                       const std::function<void(double, const DensityMatrix&)>& on_sample,
                       PropagationStats* stats = nullptr);

// Entry-equivalence classes of the propagated trajectory: entries are grouped
// when they agree within a 1e-9 relative tolerance at every sample time;
// entries below 1e-12 at all samples form the zero class.
struct OrbitPartition {
  std::vector<std::vector<std::pair<int, int>>> classes;
  std::vector<std::pair<int, int>> zero_class;
};

OrbitPartition orbit_classes(const DensityMatrix& rho0, const NoiseChannel& ch,
                             std::vector<double> sample_times, double step = kDefaultStep);

}  // namespace qsim
