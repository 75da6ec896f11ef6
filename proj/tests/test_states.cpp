#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qsim/hermitian_eig.hpp"
#include "qsim/states.hpp"

using qsim::cdouble;

TEST_CASE("w_state amplitudes") {
  const auto w1 = qsim::w_state(1);
  CHECK(w1.amplitudes[1] == cdouble(1.0, 0.0));
  CHECK(w1.amplitudes[0] == cdouble(0.0, 0.0));

  const auto w2 = qsim::w_state(2);
  CHECK(w2.amplitudes[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(w2.amplitudes[2].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  const auto w4 = qsim::w_state(4);
  for (int idx : {1, 2, 4, 8}) CHECK(w4.amplitudes[static_cast<size_t>(idx)].real() == doctest::Approx(0.5));
  CHECK(w4.amplitudes[3] == cdouble(0.0, 0.0));

  CHECK_THROWS_AS(qsim::w_state(0), qsim::InvalidArgument);
}

TEST_CASE("catalog state amplitudes match their definitions") {
  const auto phi1 = qsim::catalog_state("phi1");
  CHECK(phi1.amplitudes[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(phi1.amplitudes[15].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  const auto phi2 = qsim::catalog_state("phi2");
  for (int idx : {15, 12, 2, 1}) CHECK(phi2.amplitudes[static_cast<size_t>(idx)].real() == doctest::Approx(0.5));

  const auto phi3 = qsim::catalog_state("phi3");
  CHECK(phi3.amplitudes[15].real() == doctest::Approx(std::sqrt(2.0 / 6.0)));
  for (int idx : {8, 4, 2, 1})
    CHECK(phi3.amplitudes[static_cast<size_t>(idx)].real() == doctest::Approx(1.0 / std::sqrt(6.0)));

  CHECK(qsim::catalog_state("w:5").n_qubits == 5);
  CHECK(qsim::catalog_state("ghz:3").n_qubits == 3);
  CHECK_THROWS_AS(qsim::catalog_state("nope"), qsim::UnknownState);
  CHECK_THROWS_AS(qsim::catalog_state("w:x"), qsim::UnknownState);
}

TEST_CASE("every catalog state is normalized") {
  for (const char* id : {"w3", "w4", "phi1", "phi2", "phi3", "w:6", "ghz:5"})
    CHECK(qsim::catalog_state(id).norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("density is a rank-one projector") {
  const auto rho = qsim::density(qsim::catalog_state("phi3"));
  const auto eigs = qsim::hermitian_eigenvalues(rho.matrix());
  CHECK(eigs[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(eigs[1]) < 1e-10);
}

TEST_CASE("density fixed entries") {
  qsim::PureState zero{1, {1.0, 0.0}};
  const auto rho0 = qsim::density(zero);
  CHECK(rho0.matrix().at(0, 0) == cdouble(1.0, 0.0));
  CHECK(rho0.matrix().at(1, 1) == cdouble(0.0, 0.0));

  const auto w4 = qsim::density(qsim::w_state(4));
  for (int i : {1, 2, 4, 8})
    for (int j : {1, 2, 4, 8})
      CHECK(w4.matrix().at(i, j).real() == doctest::Approx(0.25));

  const auto ghz = qsim::density(qsim::catalog_state("phi1"));
  CHECK(ghz.matrix().at(0, 15).real() == doctest::Approx(0.5));
  CHECK(ghz.matrix().at(15, 15).real() == doctest::Approx(0.5));
}

TEST_CASE("partial_trace fixed cases") {
  // product state |0> x |1>, keep qubit 2
  qsim::PureState prod{2, {0.0, 1.0, 0.0, 0.0}};
  const auto red = qsim::partial_trace(qsim::density(prod), {2});
  CHECK(red.matrix().at(0, 0).real() == doctest::Approx(0.0));
  CHECK(red.matrix().at(1, 1).real() == doctest::Approx(1.0));

  // GHZ4: any single-qubit reduction is I/2
  const auto ghz = qsim::density(qsim::ghz_state(4));
  for (int q = 1; q <= 4; ++q) {
    const auto r = qsim::partial_trace(ghz, {q});
    CHECK(r.matrix().at(0, 0).real() == doctest::Approx(0.5));
    CHECK(r.matrix().at(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(r.matrix().at(0, 1)) < 1e-14);
  }

  // W4: any single-qubit reduction is diag(3/4, 1/4)
  const auto w4 = qsim::density(qsim::w_state(4));
  for (int q = 1; q <= 4; ++q) {
    const auto r = qsim::partial_trace(w4, {q});
    CHECK(r.matrix().at(0, 0).real() == doctest::Approx(0.75));
    CHECK(r.matrix().at(1, 1).real() == doctest::Approx(0.25));
  }
}

TEST_CASE("partial_trace preserves trace and Hermiticity") {
  const auto rho = qsim::density(qsim::catalog_state("phi2"));
  for (const auto& keep : std::vector<std::vector<int>>{{1}, {2, 3}, {1, 4}, {1, 2, 3}}) {
    const auto r = qsim::partial_trace(rho, keep);
    CHECK(std::abs(r.matrix().trace() - cdouble(1.0, 0.0)) < 1e-12);
    CHECK(r.matrix().hermiticity_error() == 0.0);
  }
}

TEST_CASE("partial_trace rejects bad subsets") {
  const auto rho = qsim::density(qsim::w_state(3));
  CHECK_THROWS_AS(qsim::partial_trace(rho, {}), qsim::InvalidSubset);
  CHECK_THROWS_AS(qsim::partial_trace(rho, {4}), qsim::InvalidSubset);
  CHECK_THROWS_AS(qsim::partial_trace(rho, {1, 1}), qsim::InvalidSubset);
}

TEST_CASE("DensityMatrix validates Hermiticity and trace") {
  qsim::ComplexMatrix bad(2);
  bad.at(0, 0) = 0.5;
  bad.at(1, 1) = 0.5;
  bad.at(0, 1) = cdouble(0.0, 0.3);
  bad.at(1, 0) = cdouble(0.0, 0.3);  // conj would be -0.3i
  CHECK_THROWS_AS(qsim::DensityMatrix{bad}, qsim::NotHermitian);

  qsim::ComplexMatrix off(2);
  off.at(0, 0) = 0.9;
  CHECK_THROWS_AS(qsim::DensityMatrix{off}, qsim::InvalidArgument);
}
