#include "qsim/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qsim/kernels.hpp"

namespace qsim {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw InvalidArgument("matrix dimension must be >= 1");
  data_.assign(static_cast<size_t>(dim) * dim, cdouble(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cdouble>> rows) {
  const int n = static_cast<int>(rows.size());
  ComplexMatrix m(n);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw DimensionMismatch("from_rows: ragged initializer");
    int c = 0;
    for (const cdouble& v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("operator+=: dimension mismatch");
  kernels::active().axpy(data(), o.data(), 1.0, static_cast<int>(size()));
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("operator-=: dimension mismatch");
  kernels::active().axpy(data(), o.data(), -1.0, static_cast<int>(size()));
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double alpha) {
  kernels::active().scale(data(), alpha, static_cast<int>(size()));
  return *this;
}

void ComplexMatrix::add_scaled(const ComplexMatrix& o, double alpha) {
  if (o.dim_ != dim_) throw DimensionMismatch("add_scaled: dimension mismatch");
  kernels::active().axpy(data(), o.data(), alpha, static_cast<int>(size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(j, i) = std::conj(at(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(dim_);
  for (size_t i = 0; i < size(); ++i) r.data_[i] = std::conj(data_[i]);
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

cdouble ComplexMatrix::trace() const {
  cdouble t(0.0, 0.0);
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cdouble& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
  if (o.dim_ != dim_) throw DimensionMismatch("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (size_t i = 0; i < size(); ++i) m = std::max(m, std::abs(data_[i] - o.data_[i]));
  return m;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& o, double tol) const {
  return o.dim_ == dim_ && max_abs_diff(o) <= tol;
}

double ComplexMatrix::hermiticity_error() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      m = std::max(m, std::abs(at(i, j) - std::conj(at(j, i))));
  return m;
}

void ComplexMatrix::hermitize() {
  for (int i = 0; i < dim_; ++i) {
    at(i, i) = cdouble(at(i, i).real(), 0.0);
    for (int j = i + 1; j < dim_; ++j) {
      const cdouble v = 0.5 * (at(i, j) + std::conj(at(j, i)));
      at(i, j) = v;
      at(j, i) = std::conj(v);
    }
  }
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("operator*: dimension mismatch");
  ComplexMatrix c(a.dim());
  kernels::active().cgemm(a.data(), b.data(), c.data(), a.dim());
  return c;
}

ComplexMatrix operator*(double alpha, ComplexMatrix a) { return a *= alpha; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const cdouble aij = a.at(i, j);
      if (aij == cdouble(0.0, 0.0)) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) r.at(i * nb + k, j * nb + l) = aij * b.at(k, l);
    }
  return r;
}

int permute_basis_index(int index, const std::vector<int>& perm, int n_qubits) {
  int out = 0;
  for (int q = 1; q <= n_qubits; ++q) {
    const int bit = (index >> (n_qubits - q)) & 1;
    out |= bit << (n_qubits - perm[static_cast<size_t>(q) - 1]);
  }
  return out;
}

ComplexMatrix permute_qubits(const ComplexMatrix& m, const std::vector<int>& perm, int n_qubits) {
  if (m.dim() != (1 << n_qubits))
    throw DimensionMismatch("permute_qubits: dim != 2^n_qubits");
  if (static_cast<int>(perm.size()) != n_qubits)
    throw InvalidArgument("permute_qubits: permutation size != n_qubits");
  std::vector<bool> seen(static_cast<size_t>(n_qubits), false);
  for (int p : perm) {
    if (p < 1 || p > n_qubits || seen[static_cast<size_t>(p) - 1])
      throw InvalidArgument("permute_qubits: not a bijection on {1..n}");
    seen[static_cast<size_t>(p) - 1] = true;
  }
  const int d = m.dim();
  std::vector<int> mu(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) mu[static_cast<size_t>(i)] = permute_basis_index(i, perm, n_qubits);
  ComplexMatrix r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      r.at(mu[static_cast<size_t>(i)], mu[static_cast<size_t>(j)]) = m.at(i, j);
  return r;
}

}  // namespace qsim
