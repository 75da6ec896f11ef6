#pragma once

#include <complex>
#include <string>

// Inner-loop kernels behind the dense-matrix layer. Every kernel exists as a
// scalar reference implementation plus SIMD variants (AVX2 on x86-64, NEON on
// aarch64) compiled in their own translation units; the active table is picked
// once at runtime from CPU capabilities. QSIM_KERNELS=scalar|avx2|neon forces
// a specific table (falls back to scalar when the requested one is absent).

namespace qsim::kernels {

using cdouble = std::complex<double>;

struct Ops {
  const char* name;
  // c = a * b for n x n row-major complex matrices; c must not alias a or b.
  void (*cgemm)(const cdouble* a, const cdouble* b, cdouble* c, int n);
  // y += alpha * x over n complex elements (alpha real).
  void (*axpy)(cdouble* y, const cdouble* x, double alpha, int n);
  // y *= alpha over n complex elements.
  void (*scale)(cdouble* y, double alpha, int n);
  // Plane rotation on two complex vectors (c real, s complex):
  //   u' = c*u + s*v,  v' = c*v - conj(s)*u
  void (*rotate_pair)(cdouble* u, cdouble* v, double c, cdouble s, int n);
};

const Ops& scalar_ops();
const Ops* avx2_ops_or_null();  // null when not compiled in or CPU lacks AVX2
const Ops* neon_ops_or_null();

const Ops& active();
std::string active_name();

}  // namespace qsim::kernels
