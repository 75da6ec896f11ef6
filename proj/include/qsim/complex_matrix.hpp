#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "qsim/errors.hpp"

namespace qsim {

using cdouble = std::complex<double>;

// Dense row-major complex matrix sized for registers of up to ~10 qubits.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(0) {}
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cdouble>> rows);

  int dim() const { return dim_; }
  cdouble& at(int r, int c) { return data_[static_cast<size_t>(r) * dim_ + c]; }
  const cdouble& at(int r, int c) const { return data_[static_cast<size_t>(r) * dim_ + c]; }
  cdouble* data() { return data_.data(); }
  const cdouble* data() const { return data_.data(); }
  size_t size() const { return data_.size(); }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(double alpha);
  // *this += alpha * o (real alpha); the RK4 workhorse.
  void add_scaled(const ComplexMatrix& o, double alpha);

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  cdouble trace() const;

  double max_abs() const;
  double max_abs_diff(const ComplexMatrix& o) const;
  // Equality within an explicit absolute tolerance.
  bool approx_equal(const ComplexMatrix& o, double tol) const;

  double hermiticity_error() const;  // max |a_ij - conj(a_ji)|
  void hermitize();                  // a <- (a + a^dagger)/2

 private:
  int dim_;
  std::vector<cdouble> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(double alpha, ComplexMatrix a);

// Kronecker product, row-major blocks of a scaled by b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Conjugation by the basis permutation that relocates qubit q (1-based,
// big-endian: qubit 1 is the most significant bit) to slot perm[q-1].
ComplexMatrix permute_qubits(const ComplexMatrix& m, const std::vector<int>& perm, int n_qubits);

// Index of the basis state obtained by relocating the qubits of `index`.
int permute_basis_index(int index, const std::vector<int>& perm, int n_qubits);

}  // namespace qsim
