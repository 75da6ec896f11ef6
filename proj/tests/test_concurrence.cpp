#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qsim/analytic.hpp"
#include "qsim/concurrence.hpp"
#include "qsim/hermitian_eig.hpp"

using qsim::cdouble;
using qsim::ComplexMatrix;
using qsim::DensityMatrix;
using qsim::PureState;

namespace {

PureState random_pure(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  PureState psi{n, std::vector<cdouble>(static_cast<size_t>(1) << n)};
  double nrm = 0.0;
  for (auto& a : psi.amplitudes) {
    a = cdouble(dist(rng), dist(rng));
    nrm += std::norm(a);
  }
  for (auto& a : psi.amplitudes) a /= std::sqrt(nrm);
  return psi;
}

DensityMatrix random_mixed(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  const int d = 1 << n;
  ComplexMatrix g(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g.at(i, j) = cdouble(dist(rng), dist(rng));
  ComplexMatrix m = g * g.adjoint();
  m.hermitize();
  m *= 1.0 / m.trace().real();
  return DensityMatrix(std::move(m));
}

DensityMatrix werner(double p) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m *= (1.0 - p) / 4.0;
  const double h = p / 2.0;
  m.at(0, 0) += h;
  m.at(0, 3) += h;
  m.at(3, 0) += h;
  m.at(3, 3) += h;
  return DensityMatrix(std::move(m));
}

}  // namespace

TEST_CASE("so_generators: counts and the d=2 generator") {
  const auto g2 = qsim::so_generators(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].at(0, 1) == cdouble(1.0, 0.0));
  CHECK(g2[0].at(1, 0) == cdouble(-1.0, 0.0));

  CHECK(qsim::so_generators(4).size() == 6);
  CHECK(qsim::so_generators(8).size() == 28);
  CHECK(qsim::cut_term_count(4) == 28);
  CHECK(qsim::cut_term_count(3) == 6);
  CHECK(qsim::cut_term_count(2) == 1);
  CHECK_THROWS_AS(qsim::so_generators(1), qsim::InvalidArgument);
}

TEST_CASE("s_matrix: symmetry, rank and the N=2 spin flip") {
  // N=2 single generator is s0 x s0 = -sigma_y x sigma_y
  const auto s = qsim::s_matrix(1, 1, 2);
  const ComplexMatrix expected = ComplexMatrix::from_rows({
      {0.0, 0.0, 0.0, 1.0},
      {0.0, 0.0, -1.0, 0.0},
      {0.0, -1.0, 0.0, 0.0},
      {1.0, 0.0, 0.0, 0.0},
  });
  CHECK(s.matrix.approx_equal(expected, 0.0));
  CHECK(qsim::s_matrix(2, 1, 2).matrix.approx_equal(expected, 0.0));

  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> kd(1, qsim::cut_term_count(4));
  for (int rep = 0; rep < 10; ++rep) {
    const auto sk = qsim::s_matrix(1 + static_cast<int>(rng() % 4), kd(rng), 4);
    CHECK(sk.matrix.max_abs_diff(sk.matrix.transpose()) == 0.0);  // symmetric
    // S^2 has exactly four unit eigenvalues (rank-2 x rank-2 tensor)
    const auto eigs = qsim::hermitian_eigenvalues(sk.matrix * sk.matrix);
    int nonzero = 0;
    for (double w : eigs)
      if (std::abs(w) > 1e-12) {
        ++nonzero;
        CHECK(w == doctest::Approx(1.0));
      }
    CHECK(nonzero == 4);
  }

  CHECK_THROWS_AS(qsim::s_matrix(0, 1, 4), qsim::IndexOutOfRange);
  CHECK_THROWS_AS(qsim::s_matrix(1, 29, 4), qsim::IndexOutOfRange);
}

TEST_CASE("tilde_rho fixed cases") {
  const auto s = qsim::s_matrix(1, 1, 2);

  // real diagonal: populations reflect across the antidiagonal
  ComplexMatrix diag(4);
  diag.at(0, 0) = 0.4;
  diag.at(1, 1) = 0.3;
  diag.at(2, 2) = 0.2;
  diag.at(3, 3) = 0.1;
  const ComplexMatrix t = qsim::tilde_rho(DensityMatrix(diag), s);
  CHECK(t.at(0, 0).real() == doctest::Approx(0.1));
  CHECK(t.at(1, 1).real() == doctest::Approx(0.2));
  CHECK(t.at(2, 2).real() == doctest::Approx(0.3));
  CHECK(t.at(3, 3).real() == doctest::Approx(0.4));

  // rank-1 input stays rank <= 1
  std::mt19937_64 rng(8);
  const auto psi = random_pure(rng, 2);
  const auto eigs = qsim::hermitian_eigenvalues(qsim::tilde_rho(qsim::density(psi), s));
  CHECK(std::abs(eigs[1]) < 1e-12);

  // maximally mixed: tilde = S^2 / 4, four nonzero eigenvalues 1/4
  ComplexMatrix mixed = ComplexMatrix::identity(4);
  mixed *= 0.25;
  const auto tm = qsim::tilde_rho(DensityMatrix(mixed), s);
  for (double w : qsim::hermitian_eigenvalues(tm)) CHECK(w == doctest::Approx(0.25));
}

TEST_CASE("lambda4 fixed cases") {
  const auto s = qsim::s_matrix(1, 1, 2);

  PureState bell{2, {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)}};
  const auto rho_bell = qsim::density(bell);
  const auto lam = qsim::lambda4(rho_bell, qsim::tilde_rho(rho_bell, s));
  CHECK(lam[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lam[1] == 0.0);
  CHECK(lam[2] == 0.0);
  CHECK(lam[3] == 0.0);

  PureState prod{2, {1.0, 0.0, 0.0, 0.0}};
  const auto rho_prod = qsim::density(prod);
  for (double l : qsim::lambda4(rho_prod, qsim::tilde_rho(rho_prod, s))) CHECK(l == 0.0);

  ComplexMatrix mixed = ComplexMatrix::identity(4);
  mixed *= 0.25;
  const DensityMatrix rho_mixed(mixed);
  for (double l : qsim::lambda4(rho_mixed, qsim::tilde_rho(rho_mixed, s)))
    CHECK(l == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("lambda4: support-reduced and full routes agree") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const auto rho = random_mixed(rng, 3);
    const auto s = qsim::s_matrix(1 + static_cast<int>(rng() % 3),
                                  1 + static_cast<int>(rng() % qsim::cut_term_count(3)), 3);
    const ComplexMatrix tilde = qsim::tilde_rho(rho, s);
    const auto fast = qsim::lambda4(rho, tilde);

    // Full route, forced by making the zero entries inexact zeros.
    const ComplexMatrix root = qsim::psd_sqrt(rho.matrix());
    ComplexMatrix herm = root * tilde * root;
    herm.hermitize();
    auto eigs = qsim::hermitian_eigenvalues(herm);
    for (int i = 0; i < 4; ++i) {
      const double w = eigs[static_cast<size_t>(i)] < 1e-12 ? 0.0 : eigs[static_cast<size_t>(i)];
      CHECK(std::sqrt(w) == doctest::Approx(fast[static_cast<size_t>(i)]).epsilon(1e-10));
    }
    // rank bound: eigenvalues 5.. of the full product vanish
    for (size_t i = 4; i < eigs.size(); ++i) CHECK(std::abs(eigs[i]) < 1e-8);
  }
}

TEST_CASE("c_term clamps and validates ordering") {
  CHECK(qsim::c_term({1.0, 0.0, 0.0, 0.0}) == 1.0);
  CHECK(qsim::c_term({0.25, 0.25, 0.25, 0.25}) == 0.0);
  CHECK(qsim::c_term({0.5, 0.1, 0.1, 0.1}) == doctest::Approx(0.2));
  CHECK_THROWS_AS(qsim::c_term({0.1, 0.5, 0.0, 0.0}), qsim::NotSorted);
}

TEST_CASE("tau_lower_bound on reference states") {
  // product pure state
  PureState prod{3, std::vector<cdouble>(8, 0.0)};
  prod.amplitudes[5] = 1.0;  // |101>
  CHECK(qsim::tau_lower_bound(qsim::density(prod)).tau < 1e-12);

  // pure W4: sqrt(3)/2 with per-cut sums 3/4
  const auto w4 = qsim::tau_lower_bound(qsim::density(qsim::w_state(4)), true);
  CHECK(w4.tau == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
  for (double pc : w4.per_cut) CHECK(pc == doctest::Approx(0.75).epsilon(1e-12));
  REQUIRE(w4.per_term.has_value());
  CHECK(w4.per_term->size() == 4);
  CHECK((*w4.per_term)[0].size() == 28);

  // maximally mixed 4-qubit state: every term clamps to zero
  ComplexMatrix mixed = ComplexMatrix::identity(16);
  mixed *= 1.0 / 16.0;
  CHECK(qsim::tau_lower_bound(DensityMatrix(mixed)).tau == 0.0);

  // term counts: N * K terms evaluated
  const auto w3 = qsim::tau_lower_bound(qsim::density(qsim::w_state(3)), true);
  CHECK(w3.per_term->size() == 3);
  CHECK((*w3.per_term)[0].size() == 6);

  CHECK_THROWS_AS(qsim::tau_lower_bound(qsim::density(qsim::w_state(1))), qsim::WrongDimension);
}

TEST_CASE("phase-flip law: tau of the Z-evolved W4 decays as e^{-4kt}") {
  const double tau0 = qsim::tau_lower_bound(qsim::closed_form_density("w4", "z", 0.0)).tau;
  for (double kt : {0.1, 0.5, 1.2}) {
    const double tau = qsim::tau_lower_bound(qsim::closed_form_density("w4", "z", kt)).tau;
    CHECK(tau / tau0 == doctest::Approx(std::exp(-4.0 * kt)).epsilon(1e-10));
  }
}

TEST_CASE("pure-state cut identity against the partial-trace oracle") {
  std::mt19937_64 rng(77);
  for (int n : {2, 3, 4}) {
    for (int rep = 0; rep < 8; ++rep) {
      const auto psi = random_pure(rng, n);
      const auto res = qsim::tau_lower_bound(qsim::density(psi));
      for (int cut = 1; cut <= n; ++cut) {
        const double oracle = qsim::pure_bipartite_concurrence(psi, cut);
        CHECK(res.per_cut[static_cast<size_t>(cut) - 1] ==
              doctest::Approx(oracle * oracle).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("N=2 degeneration equals the Wootters concurrence") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 25; ++rep) {
    const auto rho = random_mixed(rng, 2);
    CHECK(qsim::tau_lower_bound(rho).tau ==
          doctest::Approx(qsim::wootters_concurrence(rho)).epsilon(1e-8));
  }
}

TEST_CASE("tau is covariant under qubit permutations") {
  std::mt19937_64 rng(13);
  const auto rho = random_mixed(rng, 3);
  const double tau0 = qsim::tau_lower_bound(rho).tau;
  std::vector<int> perm{1, 2, 3};
  do {
    const DensityMatrix permuted(qsim::permute_qubits(rho.matrix(), perm, 3));
    CHECK(qsim::tau_lower_bound(permuted).tau == doctest::Approx(tau0).epsilon(1e-10));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("negating a generator leaves every term unchanged") {
  std::mt19937_64 rng(55);
  const auto rho = random_mixed(rng, 3);
  for (int k = 1; k <= qsim::cut_term_count(3); ++k) {
    auto s = qsim::s_matrix(2, k, 3);
    const auto lam = qsim::lambda4(rho, qsim::tilde_rho(rho, s));
    s.matrix *= -1.0;
    const auto lam_neg = qsim::lambda4(rho, qsim::tilde_rho(rho, s));
    for (int i = 0; i < 4; ++i)
      CHECK(lam[static_cast<size_t>(i)] == lam_neg[static_cast<size_t>(i)]);
  }
}

TEST_CASE("oracles on fixed states") {
  // GHZ4: every cut gives concurrence 1
  for (int cut = 1; cut <= 4; ++cut)
    CHECK(qsim::pure_bipartite_concurrence(qsim::ghz_state(4), cut) ==
          doctest::Approx(1.0).epsilon(1e-12));
  // W4: sqrt(3)/2 per cut
  for (int cut = 1; cut <= 4; ++cut)
    CHECK(qsim::pure_bipartite_concurrence(qsim::w_state(4), cut) ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
  // product state: zero
  PureState prod{2, {0.0, 0.0, 1.0, 0.0}};
  CHECK(qsim::pure_bipartite_concurrence(prod, 1) < 1e-12);

  // Wootters: Bell = 1, I/4 = 0, Werner p=0.5 = 0.25
  PureState bell{2, {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)}};
  CHECK(qsim::wootters_concurrence(qsim::density(bell)) == doctest::Approx(1.0).epsilon(1e-12));
  ComplexMatrix mixed = ComplexMatrix::identity(4);
  mixed *= 0.25;
  CHECK(qsim::wootters_concurrence(DensityMatrix(mixed)) == 0.0);
  CHECK(qsim::wootters_concurrence(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(qsim::wootters_concurrence(werner(0.25)) == 0.0);

  CHECK_THROWS_AS(qsim::wootters_concurrence(qsim::density(qsim::w_state(3))),
                  qsim::WrongDimension);
}
