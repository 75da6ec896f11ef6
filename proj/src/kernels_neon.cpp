// NEON kernel variants for aarch64, where NEON is baseline.

#include "qsim/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace qsim::kernels {
namespace {

// One float64x2_t holds a single complex double: [re, im].
const float64x2_t kAddSubSign = {-1.0, 1.0};

// acc + (ar + i*ai) * b for one complex lane.
inline float64x2_t cmul_acc(float64x2_t acc, double ar, double ai, float64x2_t b) {
  float64x2_t t = vfmaq_n_f64(acc, b, ar);            // acc + ar*(br, bi)
  const float64x2_t bs = vextq_f64(b, b, 1);          // (bi, br)
  return vfmaq_f64(t, vmulq_n_f64(bs, ai), kAddSubSign);  // +(-ai*bi, ai*br)
}

void cgemm_neon(const cdouble* a, const cdouble* b, cdouble* c, int n) {
  for (int i = 0; i < n; ++i) {
    double* crow = reinterpret_cast<double*>(c + static_cast<size_t>(i) * n);
    for (int j = 0; j < n; ++j) vst1q_f64(crow + 2 * j, vdupq_n_f64(0.0));
    for (int k = 0; k < n; ++k) {
      const cdouble aik = a[static_cast<size_t>(i) * n + k];
      if (aik == cdouble(0.0, 0.0)) continue;
      const double ar = aik.real(), ai = aik.imag();
      const double* brow = reinterpret_cast<const double*>(b + static_cast<size_t>(k) * n);
      for (int j = 0; j < n; ++j) {
        float64x2_t acc = vld1q_f64(crow + 2 * j);
        acc = cmul_acc(acc, ar, ai, vld1q_f64(brow + 2 * j));
        vst1q_f64(crow + 2 * j, acc);
      }
    }
  }
}

void axpy_neon(cdouble* y, const cdouble* x, double alpha, int n) {
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  for (int i = 0; i < 2 * n; i += 2)
    vst1q_f64(yd + i, vfmaq_n_f64(vld1q_f64(yd + i), vld1q_f64(xd + i), alpha));
}

void scale_neon(cdouble* y, double alpha, int n) {
  double* yd = reinterpret_cast<double*>(y);
  for (int i = 0; i < 2 * n; i += 2)
    vst1q_f64(yd + i, vmulq_n_f64(vld1q_f64(yd + i), alpha));
}

void rotate_pair_neon(cdouble* u, cdouble* v, double c, cdouble s, int n) {
  double* ud = reinterpret_cast<double*>(u);
  double* vd = reinterpret_cast<double*>(v);
  for (int i = 0; i < n; ++i) {
    const float64x2_t uv = vld1q_f64(ud + 2 * i);
    const float64x2_t vv = vld1q_f64(vd + 2 * i);
    const float64x2_t un = cmul_acc(vmulq_n_f64(uv, c), s.real(), s.imag(), vv);
    const float64x2_t vn = cmul_acc(vmulq_n_f64(vv, c), -s.real(), s.imag(), uv);
    vst1q_f64(ud + 2 * i, un);
    vst1q_f64(vd + 2 * i, vn);
  }
}

}  // namespace

const Ops* neon_ops_or_null() {
  static const Ops table{"neon", cgemm_neon, axpy_neon, scale_neon, rotate_pair_neon};
  return &table;
}

}  // namespace qsim::kernels

#else

namespace qsim::kernels {
const Ops* neon_ops_or_null() { return nullptr; }
}  // namespace qsim::kernels

#endif
