// AVX2 kernel variants. This TU is compiled with -mavx2 -mfma on x86-64 only;
// callers must gate on avx2_ops_or_null(), which checks CPU support at runtime.

#include "qsim/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace qsim::kernels {
namespace {

// One __m256d holds two complex doubles: [re0, im0, re1, im1].

// acc += (ar + i*ai) * b for a 2-complex lane.
inline __m256d cmul_acc(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
  const __m256d t1 = _mm256_mul_pd(b, ar);                 // (ar*br, ar*bi, ...)
  const __m256d bs = _mm256_permute_pd(b, 0x5);            // (bi, br, ...)
  const __m256d t2 = _mm256_mul_pd(bs, ai);                // (ai*bi, ai*br, ...)
  return _mm256_add_pd(acc, _mm256_addsub_pd(t1, t2));     // (+re, +im)
}

void cgemm_avx2(const cdouble* a, const cdouble* b, cdouble* c, int n) {
  const int pairs = n / 2;
  for (int i = 0; i < n; ++i) {
    double* crow = reinterpret_cast<double*>(c + static_cast<size_t>(i) * n);
    for (int p = 0; p < pairs; ++p) _mm256_storeu_pd(crow + 4 * p, _mm256_setzero_pd());
    if (n & 1) c[static_cast<size_t>(i) * n + n - 1] = cdouble(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      const cdouble aik = a[static_cast<size_t>(i) * n + k];
      if (aik == cdouble(0.0, 0.0)) continue;
      const __m256d ar = _mm256_set1_pd(aik.real());
      const __m256d ai = _mm256_set1_pd(aik.imag());
      const double* brow = reinterpret_cast<const double*>(b + static_cast<size_t>(k) * n);
      for (int p = 0; p < pairs; ++p) {
        const __m256d bv = _mm256_loadu_pd(brow + 4 * p);
        __m256d acc = _mm256_loadu_pd(crow + 4 * p);
        acc = cmul_acc(acc, ar, ai, bv);
        _mm256_storeu_pd(crow + 4 * p, acc);
      }
      if (n & 1) c[static_cast<size_t>(i) * n + n - 1] += aik * b[static_cast<size_t>(k) * n + n - 1];
    }
  }
}

void axpy_avx2(cdouble* y, const cdouble* x, double alpha, int n) {
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  const __m256d av = _mm256_set1_pd(alpha);
  const int len = 2 * n;
  int i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d xv = _mm256_loadu_pd(xd + i);
    const __m256d yv = _mm256_loadu_pd(yd + i);
    _mm256_storeu_pd(yd + i, _mm256_fmadd_pd(av, xv, yv));
  }
  for (; i < len; ++i) yd[i] += alpha * xd[i];
}

void scale_avx2(cdouble* y, double alpha, int n) {
  double* yd = reinterpret_cast<double*>(y);
  const __m256d av = _mm256_set1_pd(alpha);
  const int len = 2 * n;
  int i = 0;
  for (; i + 4 <= len; i += 4)
    _mm256_storeu_pd(yd + i, _mm256_mul_pd(av, _mm256_loadu_pd(yd + i)));
  for (; i < len; ++i) yd[i] *= alpha;
}

void rotate_pair_avx2(cdouble* u, cdouble* v, double c, cdouble s, int n) {
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  double* ud = reinterpret_cast<double*>(u);
  double* vd = reinterpret_cast<double*>(v);
  const int pairs = n / 2;
  for (int p = 0; p < pairs; ++p) {
    const __m256d uv = _mm256_loadu_pd(ud + 4 * p);
    const __m256d vv = _mm256_loadu_pd(vd + 4 * p);
    __m256d un = cmul_acc(_mm256_mul_pd(cv, uv), sr, si, vv);     // c*u + s*v
    __m256d vn = cmul_acc(_mm256_mul_pd(cv, vv), _mm256_sub_pd(_mm256_setzero_pd(), sr), si, uv);
    // vn so far = c*v + (-sr + i*si)*u = c*v - conj(s)*u  (since conj(s) = sr - i*si)
    _mm256_storeu_pd(ud + 4 * p, un);
    _mm256_storeu_pd(vd + 4 * p, vn);
  }
  if (n & 1) {
    const int i = n - 1;
    const cdouble ui = u[i], vi = v[i];
    u[i] = c * ui + s * vi;
    v[i] = c * vi - std::conj(s) * ui;
  }
}

}  // namespace

const Ops* avx2_ops_or_null() {
  static const Ops table{"avx2", cgemm_avx2, axpy_avx2, scale_avx2, rotate_pair_avx2};
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? &table : nullptr;
}

}  // namespace qsim::kernels

#else

namespace qsim::kernels {
const Ops* avx2_ops_or_null() { return nullptr; }
}  // namespace qsim::kernels

#endif
