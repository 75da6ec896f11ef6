#include "qsim/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qsim::kernels {
namespace {

const Ops& pick() {
  if (const char* env = std::getenv("QSIM_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_ops();
    if (std::strcmp(env, "avx2") == 0) {
      if (const Ops* t = avx2_ops_or_null()) return *t;
      return scalar_ops();
    }
    if (std::strcmp(env, "neon") == 0) {
      if (const Ops* t = neon_ops_or_null()) return *t;
      return scalar_ops();
    }
  }
  if (const Ops* t = avx2_ops_or_null()) return *t;
  if (const Ops* t = neon_ops_or_null()) return *t;
  return scalar_ops();
}

}  // namespace

const Ops& active() {
  static const Ops& table = pick();
  return table;
}

std::string active_name() { return active().name; }

}  // namespace qsim::kernels
