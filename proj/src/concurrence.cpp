#include "qsim/concurrence.hpp"

#include <algorithm>
#include <cmath>

#include "qsim/hermitian_eig.hpp"

namespace qsim {
namespace {

constexpr double kEigClamp = 1e-12;

std::array<double, 4> top4_sqrt(std::vector<double> eigs_desc) {
  std::array<double, 4> lam{0.0, 0.0, 0.0, 0.0};
  for (size_t i = 0; i < 4 && i < eigs_desc.size(); ++i) {
    double w = eigs_desc[i];
    if (w < kEigClamp) w = 0.0;
    lam[i] = std::sqrt(w);
  }
  return lam;
}

}  // namespace

std::vector<ComplexMatrix> so_generators(int d) {
  if (d < 2) throw InvalidArgument("so_generators: d must be >= 2");
  std::vector<ComplexMatrix> gens;
  gens.reserve(static_cast<size_t>(d) * (d - 1) / 2);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      ComplexMatrix g(d);
      g.at(i, j) = 1.0;
      g.at(j, i) = -1.0;
      gens.push_back(std::move(g));
    }
  return gens;
}

int cut_term_count(int n_qubits) {
  if (n_qubits < 2) throw WrongDimension("cut_term_count: need N >= 2");
  return (1 << (n_qubits - 2)) * ((1 << (n_qubits - 1)) - 1);
}

CutGenerator s_matrix(int n, int k, int n_qubits) {
  if (n < 1 || n > n_qubits) throw IndexOutOfRange("s_matrix: cut index out of range");
  const int K = cut_term_count(n_qubits);
  if (k < 1 || k > K) throw IndexOutOfRange("s_matrix: generator index out of range");

  static const ComplexMatrix so2 = ComplexMatrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
  const std::vector<ComplexMatrix> rest = so_generators(1 << (n_qubits - 1));
  ComplexMatrix t = kron(so2, rest[static_cast<size_t>(k) - 1]);

  // t lives in the ordering (qubit n, remaining qubits ascending); send each
  // qubit back to its original slot.
  std::vector<int> perm(static_cast<size_t>(n_qubits));
  int slot = 1;
  perm[static_cast<size_t>(n) - 1] = slot++;
  for (int q = 1; q <= n_qubits; ++q)
    if (q != n) perm[static_cast<size_t>(q) - 1] = slot++;
  // perm maps original qubit -> its slot in t; invert to go back.
  std::vector<int> inv(static_cast<size_t>(n_qubits));
  for (int q = 1; q <= n_qubits; ++q) inv[static_cast<size_t>(perm[static_cast<size_t>(q) - 1]) - 1] = q;
  return CutGenerator{n, k, permute_qubits(t, inv, n_qubits)};
}

ComplexMatrix tilde_rho(const DensityMatrix& rho, const CutGenerator& s) {
  if (s.matrix.dim() != rho.dim()) throw DimensionMismatch("tilde_rho: dimension mismatch");
  ComplexMatrix out = s.matrix * rho.matrix().conjugate() * s.matrix;
  out.hermitize();
  return out;
}

std::array<double, 4> lambda4(const DensityMatrix& rho, const ComplexMatrix& rho_tilde) {
  const int d = rho.dim();
  if (rho_tilde.dim() != d) throw DimensionMismatch("lambda4: dimension mismatch");
  if (rho_tilde.hermiticity_error() > 1e-8) throw NotHermitian("lambda4: rho_tilde not Hermitian");

  // Support of rho_tilde (rows holding any nonzero entry). The generator
  // sandwich S rho* S leaves exact zeros outside a <= 4-state support.
  std::vector<int> support;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (rho_tilde.at(r, c) != cdouble(0.0, 0.0)) {
        support.push_back(r);
        break;
      }

  if (support.empty()) return {0.0, 0.0, 0.0, 0.0};
  if (static_cast<int>(support.size()) < d) {
    // Nonzero spectrum of sqrt(rho) T sqrt(rho) equals that of
    // T_s^{1/2} rho[s,s] T_s^{1/2} on the support s.
    const int ds = static_cast<int>(support.size());
    ComplexMatrix ts(ds), rs(ds);
    for (int i = 0; i < ds; ++i)
      for (int j = 0; j < ds; ++j) {
        ts.at(i, j) = rho_tilde.at(support[static_cast<size_t>(i)], support[static_cast<size_t>(j)]);
        rs.at(i, j) = rho.matrix().at(support[static_cast<size_t>(i)], support[static_cast<size_t>(j)]);
      }
    const ComplexMatrix root = psd_sqrt(ts);
    ComplexMatrix herm = root * rs * root;
    herm.hermitize();
    return top4_sqrt(hermitian_eigenvalues(herm));
  }

  const ComplexMatrix root = psd_sqrt(rho.matrix());
  ComplexMatrix herm = root * rho_tilde * root;
  herm.hermitize();
  return top4_sqrt(hermitian_eigenvalues(herm));
}

double c_term(const std::array<double, 4>& lambdas) {
  for (int i = 0; i + 1 < 4; ++i)
    if (lambdas[static_cast<size_t>(i)] < lambdas[static_cast<size_t>(i) + 1])
      throw NotSorted("c_term: lambdas must be descending");
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

TauResult tau_lower_bound(const DensityMatrix& rho, bool with_terms) {
  const int n = rho.n_qubits();
  if (n < 2) throw WrongDimension("tau_lower_bound: need N >= 2");
  const int K = cut_term_count(n);

  TauResult res;
  res.per_cut.assign(static_cast<size_t>(n), 0.0);
  if (with_terms) res.per_term.emplace(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(K), 0.0));

  double total = 0.0;
  for (int cut = 1; cut <= n; ++cut) {
    double cut_sum = 0.0;
    for (int k = 1; k <= K; ++k) {
      const CutGenerator s = s_matrix(cut, k, n);
      const double c = c_term(lambda4(rho, tilde_rho(rho, s)));
      cut_sum += c * c;
      if (with_terms) (*res.per_term)[static_cast<size_t>(cut) - 1][static_cast<size_t>(k) - 1] = c;
    }
    res.per_cut[static_cast<size_t>(cut) - 1] = cut_sum;
    total += cut_sum;
  }
  res.tau = std::sqrt(total / n);
  return res;
}

double pure_bipartite_concurrence(const PureState& psi, int cut) {
  if (cut < 1 || cut > psi.n_qubits)
    throw IndexOutOfRange("pure_bipartite_concurrence: cut out of range");
  if (std::abs(psi.norm() - 1.0) > 1e-12)
    throw InvalidArgument("pure_bipartite_concurrence: state not normalized");
  const DensityMatrix red = partial_trace(density(psi), {cut});
  double purity = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      purity += (red.matrix().at(i, j) * red.matrix().at(j, i)).real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) throw WrongDimension("wootters_concurrence: need exactly 2 qubits");
  static const ComplexMatrix yy = [] {
    const ComplexMatrix sy =
        ComplexMatrix::from_rows({{0.0, cdouble(0.0, -1.0)}, {cdouble(0.0, 1.0), 0.0}});
    return kron(sy, sy);
  }();
  ComplexMatrix flipped = yy * rho.matrix().conjugate() * yy;
  flipped.hermitize();
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  ComplexMatrix herm = root * flipped * root;
  herm.hermitize();
  const std::array<double, 4> lam = top4_sqrt(hermitian_eigenvalues(herm));
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

}  // namespace qsim
