#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qsim/states.hpp"

namespace qsim {

// Real antisymmetric SO(d) generators E_ij - E_ji, i < j, lexicographic order.
std::vector<ComplexMatrix> so_generators(int d);

// Number of generator terms per bipartite cut for an N-qubit register:
// K = 2^{N-2} (2^{N-1} - 1).
int cut_term_count(int n_qubits);

// S_k^n: the SO(2) generator on qubit n tensored with the k-th SO(2^{N-1})
// generator on the remaining qubits (ascending order), embedded via a qubit
// permutation. Real symmetric, rank 4.
struct CutGenerator {
  int cut = 0;
  int k = 0;
  ComplexMatrix matrix;
};

CutGenerator s_matrix(int n, int k, int n_qubits);

// S rho* S, Hermitian PSD of rank <= 4.
ComplexMatrix tilde_rho(const DensityMatrix& rho, const CutGenerator& s);

// Square roots of the four largest eigenvalues of sqrt(rho) rho_tilde
// sqrt(rho), descending; eigenvalues below 1e-12 are clamped to zero. When
// rho_tilde has structurally-zero rows the identical nonzero spectrum is
// extracted on its support instead of forming the full product.
std::array<double, 4> lambda4(const DensityMatrix& rho, const ComplexMatrix& rho_tilde);

// max{0, l1 - l2 - l3 - l4}; input must be sorted descending.
double c_term(const std::array<double, 4>& lambdas);

struct TauResult {
  double tau = 0.0;
  std::vector<double> per_cut;                          // sum_k (C_k^n)^2 per cut
  std::optional<std::vector<std::vector<double>>> per_term;  // [cut][k], on request
};

// The multipartite concurrence lower bound
//   tau_N(rho) = sqrt( (1/N) sum_n sum_k (C_k^n)^2 ).
TauResult tau_lower_bound(const DensityMatrix& rho, bool with_terms = false);

// Independent oracles.
double pure_bipartite_concurrence(const PureState& psi, int cut);  // sqrt(2(1 - Tr rho_n^2))
double wootters_concurrence(const DensityMatrix& rho);             // two-qubit spin flip

}  // namespace qsim
