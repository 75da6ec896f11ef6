#pragma once

#include <string>
#include <vector>

#include "qsim/complex_matrix.hpp"

namespace qsim {

// Pure state of an n-qubit register, big-endian amplitude ordering
// (the first ket symbol is the most significant bit: |1000> has index 8).
struct PureState {
  int n_qubits = 0;
  std::vector<cdouble> amplitudes;

  int dim() const { return 1 << n_qubits; }
  double norm() const;
};

// |W_N>: amplitude 1/sqrt(n) on every single-excitation basis state.
PureState w_state(int n);

// |GHZ_N>: (|0...0> + |1...1>)/sqrt(2).
PureState ghz_state(int n);

// Catalog ids: w3, w4, phi1, phi2, phi3, w:N, ghz:N.
PureState catalog_state(const std::string& id);
bool is_catalog_state(const std::string& id);

class DensityMatrix {
 public:
  DensityMatrix() = default;
  // Validates: dim a power of two, Hermitian within 1e-10, trace one within 1e-10.
  explicit DensityMatrix(ComplexMatrix m);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return mat_.dim(); }
  const ComplexMatrix& matrix() const { return mat_; }

  double min_eigenvalue() const;

 private:
  int n_qubits_ = 0;
  ComplexMatrix mat_;
};

// Outer product |psi><psi| of a normalized state.
DensityMatrix density(const PureState& psi);

// Reduced density matrix on the kept qubits (1-based labels, ascending output
// order). Throws InvalidSubset on an empty or out-of-range subset.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

}  // namespace qsim
