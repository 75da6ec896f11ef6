#pragma once

#include <vector>

#include "qsim/complex_matrix.hpp"

namespace qsim {

// Eigendecomposition of a Hermitian matrix. Eigenvalues sorted descending
// (stable for ties); eigenvectors are the columns of a unitary matrix.
struct HermitianEig {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// Cyclic complex Jacobi; converges when the off-diagonal Frobenius norm drops
// below 1e-12. Throws NotHermitian when the asymmetry exceeds 1e-10.
HermitianEig hermitian_eig(const ComplexMatrix& m);

// Eigenvalues only (skips accumulating the rotations).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Hermitian PSD square root. Eigenvalues in [-1e-8, 0) are clamped to zero;
// anything below -1e-8 raises NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

}  // namespace qsim
