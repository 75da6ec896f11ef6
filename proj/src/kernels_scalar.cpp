#include "qsim/kernels.hpp"

namespace qsim::kernels {
namespace {

void cgemm_scalar(const cdouble* a, const cdouble* b, cdouble* c, int n) {
  for (int i = 0; i < n; ++i) {
    cdouble* crow = c + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j) crow[j] = cdouble(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      const cdouble aik = a[static_cast<size_t>(i) * n + k];
      if (aik == cdouble(0.0, 0.0)) continue;
      const cdouble* brow = b + static_cast<size_t>(k) * n;
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

void axpy_scalar(cdouble* y, const cdouble* x, double alpha, int n) {
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  for (int i = 0; i < 2 * n; ++i) yd[i] += alpha * xd[i];
}

void scale_scalar(cdouble* y, double alpha, int n) {
  double* yd = reinterpret_cast<double*>(y);
  for (int i = 0; i < 2 * n; ++i) yd[i] *= alpha;
}

void rotate_pair_scalar(cdouble* u, cdouble* v, double c, cdouble s, int n) {
  const cdouble sc = std::conj(s);
  for (int i = 0; i < n; ++i) {
    const cdouble ui = u[i];
    const cdouble vi = v[i];
    u[i] = c * ui + s * vi;
    v[i] = c * vi - sc * ui;
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{"scalar", cgemm_scalar, axpy_scalar, scale_scalar, rotate_pair_scalar};
  return table;
}

}  // namespace qsim::kernels
