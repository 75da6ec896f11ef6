#include "qsim/lindblad.hpp"

#include <algorithm>
#include <cmath>

namespace qsim {
namespace {

const ComplexMatrix& pauli(Axis ax) {
  static const ComplexMatrix sx = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  static const ComplexMatrix sy =
      ComplexMatrix::from_rows({{0.0, cdouble(0.0, -1.0)}, {cdouble(0.0, 1.0), 0.0}});
  static const ComplexMatrix sz = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  switch (ax) {
    case Axis::X: return sx;
    case Axis::Y: return sy;
    default: return sz;
  }
}

// acc += sigma_ax^(q) rho sigma_ax^(q) computed by index/sign transforms.
void add_pauli_sandwich(const ComplexMatrix& rho, Axis ax, int bit_mask, ComplexMatrix& acc) {
  const int d = rho.dim();
  switch (ax) {
    case Axis::X:
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) acc.at(r, c) += rho.at(r ^ bit_mask, c ^ bit_mask);
      break;
    case Axis::Y:
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          const bool same = ((r & bit_mask) != 0) == ((c & bit_mask) != 0);
          const cdouble v = rho.at(r ^ bit_mask, c ^ bit_mask);
          acc.at(r, c) += same ? v : -v;
        }
      break;
    case Axis::Z:
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          const bool same = ((r & bit_mask) != 0) == ((c & bit_mask) != 0);
          const cdouble v = rho.at(r, c);
          acc.at(r, c) += same ? v : -v;
        }
      break;
  }
}

}  // namespace

NoiseChannel::NoiseChannel(std::vector<Axis> ax, double k, int n)
    : axes(std::move(ax)), kappa(k), n_qubits(n) {
  if (axes.empty()) throw InvalidArgument("NoiseChannel: axes must be nonempty");
  if (!(kappa > 0.0)) throw InvalidArgument("NoiseChannel: kappa must be positive");
  if (n_qubits < 1) throw InvalidArgument("NoiseChannel: n_qubits must be >= 1");
  std::sort(axes.begin(), axes.end());
  if (std::adjacent_find(axes.begin(), axes.end()) != axes.end())
    throw InvalidArgument("NoiseChannel: duplicate axis");
}

NoiseChannel NoiseChannel::single(Axis ax, double kappa, int n_qubits) {
  return NoiseChannel({ax}, kappa, n_qubits);
}

NoiseChannel NoiseChannel::isotropic(double kappa, int n_qubits) {
  return NoiseChannel({Axis::X, Axis::Y, Axis::Z}, kappa, n_qubits);
}

NoiseChannel NoiseChannel::from_name(const std::string& name, double kappa, int n_qubits) {
  if (name == "x") return single(Axis::X, kappa, n_qubits);
  if (name == "y") return single(Axis::Y, kappa, n_qubits);
  if (name == "z") return single(Axis::Z, kappa, n_qubits);
  if (name == "iso") return isotropic(kappa, n_qubits);
  throw InvalidArgument("unknown channel '" + name + "' (expected x|y|z|iso)");
}

std::vector<ComplexMatrix> lindblad_ops(const NoiseChannel& ch) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<size_t>(ch.op_count()));
  const double root_kappa = std::sqrt(ch.kappa);
  for (int q = 1; q <= ch.n_qubits; ++q) {
    for (Axis ax : ch.axes) {
      ComplexMatrix op = ComplexMatrix::identity(1);
      for (int i = 1; i <= ch.n_qubits; ++i)
        op = kron(op, i == q ? pauli(ax) : ComplexMatrix::identity(2));
      op *= root_kappa;
      ops.push_back(std::move(op));
    }
  }
  return ops;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const NoiseChannel& ch,
                           const ComplexMatrix* hamiltonian) {
  const int d = 1 << ch.n_qubits;
  if (rho.dim() != d) throw DimensionMismatch("lindblad_rhs: state/channel dimension mismatch");
  ComplexMatrix acc(d);
  for (int q = 1; q <= ch.n_qubits; ++q) {
    const int mask = 1 << (ch.n_qubits - q);
    for (Axis ax : ch.axes) add_pauli_sandwich(rho, ax, mask, acc);
  }
  // sigma^dag sigma = I, so the anticommutator term collapses to op_count * rho.
  acc.add_scaled(rho, -static_cast<double>(ch.op_count()));
  acc *= ch.kappa;
  if (hamiltonian) {
    if (hamiltonian->dim() != d)
      throw DimensionMismatch("lindblad_rhs: Hamiltonian dimension mismatch");
    // -i [H, rho] with hbar = 1
    const ComplexMatrix comm = (*hamiltonian) * rho - rho * (*hamiltonian);
    const cdouble minus_i(0.0, -1.0);
    for (size_t i = 0; i < comm.size(); ++i) acc.data()[i] += minus_i * comm.data()[i];
  }
  return acc;
}

DensityMatrix euler_step(const DensityMatrix& rho, const NoiseChannel& ch, double dt) {
  if (dt < 0.0) throw InvalidArgument("euler_step: dt must be >= 0");
  ComplexMatrix m = rho.matrix();
  if (dt > 0.0) m.add_scaled(lindblad_rhs(rho.matrix(), ch, nullptr), dt);
  return DensityMatrix(std::move(m));
}

namespace {

void rk4_step(ComplexMatrix& rho, const NoiseChannel& ch, double h, ComplexMatrix& k1,
              ComplexMatrix& k2, ComplexMatrix& k3, ComplexMatrix& k4, ComplexMatrix& tmp) {
  k1 = lindblad_rhs(rho, ch);
  tmp = rho;
  tmp.add_scaled(k1, 0.5 * h);
  k2 = lindblad_rhs(tmp, ch);
  tmp = rho;
  tmp.add_scaled(k2, 0.5 * h);
  k3 = lindblad_rhs(tmp, ch);
  tmp = rho;
  tmp.add_scaled(k3, h);
  k4 = lindblad_rhs(tmp, ch);
  rho.add_scaled(k1, h / 6.0);
  rho.add_scaled(k2, h / 3.0);
  rho.add_scaled(k3, h / 3.0);
  rho.add_scaled(k4, h / 6.0);
  rho.hermitize();
}

}  // namespace

void propagate_sampled(const DensityMatrix& rho0, const NoiseChannel& ch,
                       std::span<const double> times, double step,
                       const std::function<void(double, const DensityMatrix&)>& on_sample,
                       PropagationStats* stats) {
  if (!(step > 0.0)) throw InvalidArgument("propagate: step must be positive");
  if (rho0.dim() != (1 << ch.n_qubits))
    throw DimensionMismatch("propagate: state/channel dimension mismatch");
  for (size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0) throw InvalidArgument("propagate: negative sample time");
    if (i > 0 && times[i] < times[i - 1]) throw InvalidArgument("propagate: unsorted sample grid");
  }

  ComplexMatrix rho = rho0.matrix();
  ComplexMatrix k1, k2, k3, k4, tmp;
  PropagationStats local;
  double t = 0.0;
  for (double target : times) {
    while (target - t > 1e-13) {
      const double h = std::min(step, target - t);
      rk4_step(rho, ch, h, k1, k2, k3, k4, tmp);
      t += h;
      ++local.steps;
      const double drift = std::abs(rho.trace() - cdouble(1.0, 0.0));
      local.max_trace_drift = std::max(local.max_trace_drift, drift);
      if (drift > 1e-6)
        throw StepTooLarge("propagate: trace drift " + std::to_string(drift) +
                           " exceeds 1e-6; reduce the step");
    }
    on_sample(target, DensityMatrix(rho));
  }
  if (stats) *stats = local;
}

DensityMatrix propagate(const DensityMatrix& rho0, const NoiseChannel& ch, double t_final,
                        double step, PropagationStats* stats) {
  if (t_final < 0.0) throw InvalidArgument("propagate: t_final must be >= 0");
  DensityMatrix out = rho0;
  const double times[1] = {t_final};
  propagate_sampled(rho0, ch, times, step,
                    [&](double, const DensityMatrix& r) { out = r; }, stats);
  return out;
}

OrbitPartition orbit_classes(const DensityMatrix& rho0, const NoiseChannel& ch,
                             std::vector<double> sample_times, double step) {
  if (sample_times.size() < 5)
    throw InvalidArgument("orbit_classes: need at least 5 sample times");
  std::sort(sample_times.begin(), sample_times.end());
  if (sample_times.front() <= 0.0)
    throw InvalidArgument("orbit_classes: sample times must be positive");

  std::vector<ComplexMatrix> mats;
  mats.reserve(sample_times.size());
  propagate_sampled(rho0, ch, sample_times, step,
                    [&](double, const DensityMatrix& r) { mats.push_back(r.matrix()); });

  const int d = rho0.dim();
  const size_t ns = mats.size();
  OrbitPartition part;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      bool zero = true;
      for (const ComplexMatrix& m : mats)
        if (std::abs(m.at(r, c)) >= 1e-12) {
          zero = false;
          break;
        }
      if (zero) {
        part.zero_class.emplace_back(r, c);
        continue;
      }
      bool placed = false;
      for (auto& cls : part.classes) {
        const auto [r0, c0] = cls.front();
        bool match = true;
        for (size_t s = 0; s < ns; ++s) {
          const cdouble a = mats[s].at(r, c);
          const cdouble b = mats[s].at(r0, c0);
          if (std::abs(a - b) > 1e-9 * std::max(std::abs(a), std::abs(b))) {
            match = false;
            break;
          }
        }
        if (match) {
          cls.emplace_back(r, c);
          placed = true;
          break;
        }
      }
      if (!placed) part.classes.push_back({{r, c}});
    }
  }
  return part;
}

}  // namespace qsim
