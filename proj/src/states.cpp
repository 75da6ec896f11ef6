#include "qsim/states.hpp"

#include <algorithm>
#include <cmath>

#include "qsim/hermitian_eig.hpp"

namespace qsim {

double PureState::norm() const {
  double s = 0.0;
  for (const cdouble& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

PureState w_state(int n) {
  if (n < 1) throw InvalidArgument("w_state: n must be >= 1");
  PureState psi{n, std::vector<cdouble>(static_cast<size_t>(1) << n, cdouble(0.0, 0.0))};
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) psi.amplitudes[static_cast<size_t>(1) << j] = a;
  return psi;
}

PureState ghz_state(int n) {
  if (n < 1) throw InvalidArgument("ghz_state: n must be >= 1");
  PureState psi{n, std::vector<cdouble>(static_cast<size_t>(1) << n, cdouble(0.0, 0.0))};
  psi.amplitudes.front() = 1.0 / std::sqrt(2.0);
  psi.amplitudes.back() = 1.0 / std::sqrt(2.0);
  return psi;
}

namespace {

PureState sparse_state(int n, std::initializer_list<std::pair<int, double>> amps) {
  PureState psi{n, std::vector<cdouble>(static_cast<size_t>(1) << n, cdouble(0.0, 0.0))};
  for (const auto& [idx, a] : amps) psi.amplitudes[static_cast<size_t>(idx)] = a;
  return psi;
}

bool parse_sized_id(const std::string& id, const std::string& prefix, int* n) {
  if (id.rfind(prefix, 0) != 0) return false;
  const std::string num = id.substr(prefix.size());
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) return false;
  *n = std::stoi(num);
  return true;
}

}  // namespace

PureState catalog_state(const std::string& id) {
  if (id == "w3") return w_state(3);
  if (id == "w4") return w_state(4);
  if (id == "phi1") return ghz_state(4);
  if (id == "phi2") {
    const double h = 0.5;  // (|1111> + |1100> + |0010> + |0001>)/2
    return sparse_state(4, {{15, h}, {12, h}, {2, h}, {1, h}});
  }
  if (id == "phi3") {
    // (sqrt2 |1111> + |1000> + |0100> + |0010> + |0001>)/sqrt6
    const double a = 1.0 / std::sqrt(6.0);
    return sparse_state(4, {{15, std::sqrt(2.0) * a}, {8, a}, {4, a}, {2, a}, {1, a}});
  }
  int n = 0;
  if (parse_sized_id(id, "w:", &n)) {
    if (n < 1) throw UnknownState("catalog_state: w:N needs N >= 1");
    return w_state(n);
  }
  if (parse_sized_id(id, "ghz:", &n)) {
    if (n < 1) throw UnknownState("catalog_state: ghz:N needs N >= 1");
    return ghz_state(n);
  }
  throw UnknownState("catalog_state: unknown id '" + id + "'");
}

bool is_catalog_state(const std::string& id) {
  try {
    catalog_state(id);
    return true;
  } catch (const UnknownState&) {
    return false;
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  const int d = mat_.dim();
  int n = 0;
  while ((1 << n) < d) ++n;
  if ((1 << n) != d) throw DimensionMismatch("DensityMatrix: dim is not a power of two");
  n_qubits_ = n;
  const double herr = mat_.hermiticity_error();
  if (herr > 1e-10)
    throw NotHermitian("DensityMatrix: asymmetry " + std::to_string(herr));
  const cdouble tr = mat_.trace();
  if (std::abs(tr - cdouble(1.0, 0.0)) > 1e-10)
    throw InvalidArgument("DensityMatrix: trace deviates from one by " +
                          std::to_string(std::abs(tr - cdouble(1.0, 0.0))));
}

double DensityMatrix::min_eigenvalue() const {
  const std::vector<double> w = hermitian_eigenvalues(mat_);
  return w.back();
}

DensityMatrix density(const PureState& psi) {
  const double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > 1e-12)
    throw InvalidArgument("density: state norm deviates from one");
  const int d = psi.dim();
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i) {
    const cdouble ai = psi.amplitudes[static_cast<size_t>(i)];
    if (ai == cdouble(0.0, 0.0)) continue;
    for (int j = 0; j < d; ++j)
      m.at(i, j) = ai * std::conj(psi.amplitudes[static_cast<size_t>(j)]);
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.n_qubits();
  if (keep.empty()) throw InvalidSubset("partial_trace: empty subset");
  std::vector<bool> mark(static_cast<size_t>(n), false);
  for (int q : keep) {
    if (q < 1 || q > n || mark[static_cast<size_t>(q) - 1])
      throw InvalidSubset("partial_trace: invalid qubit subset");
    mark[static_cast<size_t>(q) - 1] = true;
  }
  std::vector<int> kept;  // ascending qubit order
  for (int q = 1; q <= n; ++q)
    if (mark[static_cast<size_t>(q) - 1]) kept.push_back(q);

  const int nk = static_cast<int>(kept.size());
  const int dk = 1 << nk;
  const int d = rho.dim();
  // Bit position (from LSB) of qubit q is n - q.
  auto spread = [&](int kept_bits, int traced_bits) {
    int idx = 0;
    int kb = nk - 1, used = 0;
    for (int q = 1; q <= n; ++q) {
      const int pos = n - q;
      if (mark[static_cast<size_t>(q) - 1]) {
        idx |= ((kept_bits >> kb) & 1) << pos;
        --kb;
      } else {
        idx |= ((traced_bits >> (n - nk - 1 - used)) & 1) << pos;
        ++used;
      }
    }
    return idx;
  };

  ComplexMatrix red(dk);
  const int dt = d / dk;
  for (int r = 0; r < dk; ++r)
    for (int c = 0; c < dk; ++c) {
      cdouble s(0.0, 0.0);
      for (int t = 0; t < dt; ++t) s += rho.matrix().at(spread(r, t), spread(c, t));
      red.at(r, c) = s;
    }
  return DensityMatrix(std::move(red));
}

}  // namespace qsim
