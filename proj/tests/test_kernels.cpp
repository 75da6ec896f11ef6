#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qsim/kernels.hpp"

using qsim::kernels::cdouble;
using qsim::kernels::Ops;

namespace {

std::vector<cdouble> random_array(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<cdouble> v(static_cast<size_t>(n));
  for (auto& z : v) z = cdouble(dist(rng), dist(rng));
  return v;
}

double max_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Every SIMD table available on this machine, for equivalence testing.
std::vector<const Ops*> simd_tables() {
  std::vector<const Ops*> tables;
  if (const Ops* t = qsim::kernels::avx2_ops_or_null()) tables.push_back(t);
  if (const Ops* t = qsim::kernels::neon_ops_or_null()) tables.push_back(t);
  return tables;
}

}  // namespace

TEST_CASE("scalar cgemm multiplies by identity") {
  const int n = 5;
  std::mt19937_64 rng(7);
  const auto a = random_array(rng, n * n);
  std::vector<cdouble> eye(static_cast<size_t>(n) * n, cdouble(0, 0));
  for (int i = 0; i < n; ++i) eye[static_cast<size_t>(i) * n + i] = 1.0;
  std::vector<cdouble> c(static_cast<size_t>(n) * n);
  qsim::kernels::scalar_ops().cgemm(a.data(), eye.data(), c.data(), n);
  CHECK(max_diff(a, c) == 0.0);
}

TEST_CASE("SIMD kernels match the scalar reference") {
  const auto tables = simd_tables();
  if (tables.empty()) return;  // nothing beyond scalar on this machine
  std::mt19937_64 rng(21);
  const Ops& ref = qsim::kernels::scalar_ops();

  for (const Ops* simd : tables) {
    CAPTURE(simd->name);
    for (int n : {2, 3, 4, 7, 8, 16}) {
      const auto a = random_array(rng, n * n);
      const auto b = random_array(rng, n * n);
      std::vector<cdouble> c0(static_cast<size_t>(n) * n), c1(c0);
      ref.cgemm(a.data(), b.data(), c0.data(), n);
      simd->cgemm(a.data(), b.data(), c1.data(), n);
      CHECK(max_diff(c0, c1) < 1e-13 * n);

      auto y0 = random_array(rng, n * n);
      auto y1 = y0;
      ref.axpy(y0.data(), a.data(), 0.37, n * n);
      simd->axpy(y1.data(), a.data(), 0.37, n * n);
      CHECK(max_diff(y0, y1) < 1e-14);

      auto s0 = y0;
      auto s1 = y0;
      ref.scale(s0.data(), -1.25, n * n);
      simd->scale(s1.data(), -1.25, n * n);
      CHECK(max_diff(s0, s1) < 1e-14);

      auto u0 = random_array(rng, n);
      auto v0 = random_array(rng, n);
      auto u1 = u0;
      auto v1 = v0;
      const cdouble s(0.6, -0.3);
      ref.rotate_pair(u0.data(), v0.data(), 0.8, s, n);
      simd->rotate_pair(u1.data(), v1.data(), 0.8, s, n);
      CHECK(max_diff(u0, u1) < 1e-14);
      CHECK(max_diff(v0, v1) < 1e-14);
    }
  }
}

TEST_CASE("rotate_pair with unit-norm (c,s) preserves the two-vector norm") {
  std::mt19937_64 rng(5);
  auto u = random_array(rng, 9);
  auto v = random_array(rng, 9);
  double before = 0.0;
  for (size_t i = 0; i < u.size(); ++i) before += std::norm(u[i]) + std::norm(v[i]);
  const double c = 0.6;
  const cdouble s = cdouble(0.48, 0.64);  // |s| = 0.8, c^2 + |s|^2 = 1
  qsim::kernels::active().rotate_pair(u.data(), v.data(), c, s, 9);
  double after = 0.0;
  for (size_t i = 0; i < u.size(); ++i) after += std::norm(u[i]) + std::norm(v[i]);
  CHECK(after == doctest::Approx(before).epsilon(1e-13));
}

TEST_CASE("dispatch resolves to a known table") {
  const std::string name = qsim::kernels::active_name();
  CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}
