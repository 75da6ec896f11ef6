#include "qsim/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsim/kernels.hpp"

namespace qsim {
namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kOffDiagTol = 1e-12;
constexpr int kMaxSweeps = 60;

double offdiag_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(a.at(i, j));
  return std::sqrt(s);
}

// Diagonalizes A in place; when vt is non-null accumulates the transposed
// eigenvector matrix (rows of vt are eigenvectors).
void jacobi(ComplexMatrix& a, ComplexMatrix* vt) {
  const int n = a.dim();
  const auto& ops = kernels::active();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_frobenius(a) < kOffDiagTol) return;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cdouble apq = a.at(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const cdouble phase = apq / mag;
        // tan(2 theta) = 2|apq| / (app - aqq), smaller-angle root.
        const double tau = (app - aqq) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cdouble w = s * phase;

        // Column update B = A U with U = [[c, -w],[conj(w)..., c]] embedded at (p,q):
        //   B(i,p) = c A(i,p) + conj(w) A(i,q);  B(i,q) = c A(i,q) - w A(i,p)
        for (int i = 0; i < n; ++i) {
          const cdouble aip = a.at(i, p);
          const cdouble aiq = a.at(i, q);
          a.at(i, p) = c * aip + std::conj(w) * aiq;
          a.at(i, q) = c * aiq - w * aip;
        }
        // Row update A' = U^dagger B:
        //   A'(p,j) = c B(p,j) + w B(q,j);  A'(q,j) = c B(q,j) - conj(w) B(p,j)
        ops.rotate_pair(a.data() + static_cast<size_t>(p) * n,
                        a.data() + static_cast<size_t>(q) * n, c, w, n);
        // vt = V^T accumulates as vt <- U^T vt, a rotation with conj(w).
        if (vt)
          ops.rotate_pair(vt->data() + static_cast<size_t>(p) * n,
                          vt->data() + static_cast<size_t>(q) * n, c, std::conj(w), n);
        a.at(p, q) = cdouble(0.0, 0.0);
        a.at(q, p) = cdouble(0.0, 0.0);
        a.at(p, p) = cdouble(a.at(p, p).real(), 0.0);
        a.at(q, q) = cdouble(a.at(q, q).real(), 0.0);
      }
    }
  }
  if (offdiag_frobenius(a) >= kOffDiagTol)
    throw NotConverged("jacobi: no convergence within sweep limit");
}

void check_hermitian(const ComplexMatrix& m) {
  const double err = m.hermiticity_error();
  if (err > kHermitianTol)
    throw NotHermitian("input asymmetry " + std::to_string(err) + " exceeds 1e-10");
}

std::vector<int> descending_order(const std::vector<double>& w) {
  std::vector<int> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return w[static_cast<size_t>(i)] > w[static_cast<size_t>(j)]; });
  return idx;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  check_hermitian(m);
  ComplexMatrix a = m;
  a.hermitize();
  ComplexMatrix vt = ComplexMatrix::identity(m.dim());
  jacobi(a, &vt);

  const int n = m.dim();
  std::vector<double> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = a.at(i, i).real();
  const std::vector<int> order = descending_order(w);

  HermitianEig out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  out.eigenvectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<size_t>(k)];
    out.eigenvalues[static_cast<size_t>(k)] = w[static_cast<size_t>(src)];
    for (int i = 0; i < n; ++i) out.eigenvectors.at(i, k) = vt.at(src, i);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  check_hermitian(m);
  ComplexMatrix a = m;
  a.hermitize();
  jacobi(a, nullptr);
  const int n = m.dim();
  std::vector<double> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = a.at(i, i).real();
  std::sort(w.begin(), w.end(), std::greater<double>());
  return w;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  HermitianEig eig = hermitian_eig(m);
  const int n = m.dim();
  for (double w : eig.eigenvalues)
    if (w < -1e-8) throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(w) + " below -1e-8");
  // B = V diag(sqrt(max(w,0)))
  ComplexMatrix b(n);
  for (int j = 0; j < n; ++j) {
    const double w = eig.eigenvalues[static_cast<size_t>(j)];
    const double sq = w > 0.0 ? std::sqrt(w) : 0.0;
    for (int i = 0; i < n; ++i) b.at(i, j) = eig.eigenvectors.at(i, j) * sq;
  }
  ComplexMatrix r = b * eig.eigenvectors.adjoint();
  r.hermitize();
  return r;
}

}  // namespace qsim
