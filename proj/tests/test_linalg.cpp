#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "cavent/dynamics.hpp"
#include "cavent/linalg.hpp"
#include "cavent/tolerances.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cavent;
using test_support::max_gap;

TEST_CASE("tensor product: identity blocks") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const ComplexMatrix k = tensor_product(i2, i2);
  CHECK(max_gap(k, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("tensor product: 1x1 factor acts as a scalar") {
  std::mt19937 rng(11);
  const ComplexMatrix m = test_support::random_matrix(3, rng);
  const ComplexMatrix two = ComplexMatrix::from_rows({{2.0}});
  CHECK(max_gap(tensor_product(two, m), cxd{2.0, 0.0} * m) == 0.0);
}

TEST_CASE("tensor product: raising operator against a truncated annihilator") {
  // <e,0| sigma+ (x) a |g,1> picks up a[0,1] = sqrt(1) = 1
  const ComplexMatrix sigma_plus = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
  const ComplexMatrix a3 = ComplexMatrix::from_rows(
      {{0, 1, 0}, {0, 0, std::sqrt(2.0)}, {0, 0, 0}});
  const ComplexMatrix k = tensor_product(sigma_plus, a3);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  CHECK(k(0, 4) == cxd{1.0, 0.0});
  // hand expansion: the only nonzero entries are a3 copied into block (0,1)
  CHECK(k(0, 3) == cxd{0.0, 0.0});
  CHECK(k(1, 5) == cxd{std::sqrt(2.0), 0.0});
  for (std::size_t i = 3; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(k(i, j) == cxd{0.0, 0.0});
}

TEST_CASE("tensor product: associative on integer matrices") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> d(-3, 3);
  ComplexMatrix a(2, 3), b(3, 2), c(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = static_cast<double>(d(rng));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = static_cast<double>(d(rng));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) c(i, j) = static_cast<double>(d(rng));
  const ComplexMatrix left = tensor_product(tensor_product(a, b), c);
  const ComplexMatrix right = tensor_product(a, tensor_product(b, c));
  CHECK(max_gap(left, right) == 0.0);
}

TEST_CASE("tensor product: rejects runaway dimensions") {
  const ComplexMatrix big(200, 200);
  CHECK_THROWS_AS(tensor_product(big, big), std::invalid_argument);
}

TEST_CASE("partial trace: factorised product state returns the kept factor") {
  std::mt19937 rng(21);
  const ComplexMatrix rho_a = test_support::random_density(3, rng);
  const ComplexMatrix rho_b = test_support::random_density(4, rng);
  const ComplexMatrix joint = tensor_product(rho_a, rho_b);
  CHECK(max_gap(partial_trace_last(joint, 3, 4), rho_a) < 1e-13);
}

TEST_CASE("partial trace: Bell state reduces to the maximally mixed qubit") {
  ComplexMatrix bell(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const ComplexMatrix red = partial_trace_last(bell, 2, 2);
  CHECK(red(0, 0) == cxd{0.5, 0.0});
  CHECK(red(1, 1) == cxd{0.5, 0.0});
  CHECK(red(0, 1) == cxd{0.0, 0.0});
  CHECK(red(1, 0) == cxd{0.0, 0.0});
}

TEST_CASE("partial trace: preserves the trace of random Hermitian inputs") {
  std::mt19937 rng(22);
  for (auto [keep, drop] : {std::pair<std::size_t, std::size_t>{2, 3},
                            {3, 4},
                            {4, 2},
                            {5, 5}}) {
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix h = test_support::random_hermitian(keep * drop, rng);
      const ComplexMatrix red = partial_trace_last(h, keep, drop);
      CHECK(std::abs(red.trace() - h.trace()) < 1e-12);
    }
  }
}

TEST_CASE("partial trace: full pure two-pass density reduces to the analytic state") {
  // brute force: amplitudes of |e1 e2 0>, |e1 g2 1>, |g1 e2 1>, |g1 g2 2> in
  // a 4 x 5 truncated space, outer product, then the field sum
  const RabiAngle gt(2.0);
  const TwoAtomCoefficients a = two_atom_coefficients(0, gt);
  const std::size_t field_dim = 5;
  ComplexVector psi(4 * field_dim);
  psi[0 * field_dim + 0] = a.alpha1;
  psi[1 * field_dim + 1] = a.alpha2;
  psi[2 * field_dim + 1] = a.alpha3;
  psi[3 * field_dim + 2] = a.alpha4;
  const ComplexMatrix full = outer_product(psi, psi);
  const ComplexMatrix red = partial_trace_last(full, 4, field_dim);
  CHECK(max_gap(red, fock_two_atom_density(0, gt).matrix()) < 1e-12);
}

TEST_CASE("partial trace: dimension mismatch is rejected") {
  const ComplexMatrix h(6, 6);
  CHECK_THROWS_AS(partial_trace_last(h, 4, 2), std::invalid_argument);
}

TEST_CASE("hermitian eigenvalues: diagonal matrix, descending order") {
  const ComplexMatrix h = ComplexMatrix::from_rows(
      {{3, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  const std::vector<double> v = hermitian_eigenvalues(h);
  CHECK(v == std::vector<double>{3.0, 2.0, 1.0});
}

TEST_CASE("hermitian eigenvalues: spin-x spectrum") {
  const ComplexMatrix h = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
  const std::vector<double> v = hermitian_eigenvalues(h);
  REQUIRE(v.size() == 2);
  CHECK(std::abs(v[0] - 1.0) < 1e-14);
  CHECK(std::abs(v[1] + 1.0) < 1e-14);
}

TEST_CASE("hermitian eigenvalues: complex off-diagonal phase") {
  const ComplexMatrix h =
      ComplexMatrix::from_rows({{2.0, cxd{0.0, 1.0}}, {cxd{0.0, -1.0}, 2.0}});
  const std::vector<double> v = hermitian_eigenvalues(h);
  CHECK(std::abs(v[0] - 3.0) < 1e-14);
  CHECK(std::abs(v[1] - 1.0) < 1e-14);
}

TEST_CASE("hermitian eigenvalues: sum equals trace") {
  std::mt19937 rng(31);
  for (std::size_t n : {2, 4, 6, 9}) {
    for (int trial = 0; trial < 4; ++trial) {
      const ComplexMatrix h = test_support::random_hermitian(n, rng);
      const std::vector<double> v = hermitian_eigenvalues(h);
      double sum = 0.0;
      for (double x : v) sum += x;
      CHECK(std::abs(sum - h.trace().real()) < 1e-10);
      for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(v[i] >= v[i + 1]);
    }
  }
}

TEST_CASE("hermitian eigenvalues: block direct sum merges the spectra") {
  std::mt19937 rng(32);
  const ComplexMatrix h1 = test_support::random_hermitian(3, rng);
  const ComplexMatrix h2 = test_support::random_hermitian(4, rng);
  ComplexMatrix block(7, 7);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) block(i, j) = h1(i, j);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) block(3 + i, 3 + j) = h2(i, j);

  std::vector<double> merged = hermitian_eigenvalues(h1);
  const std::vector<double> v2 = hermitian_eigenvalues(h2);
  merged.insert(merged.end(), v2.begin(), v2.end());
  std::sort(merged.begin(), merged.end(), std::greater<>());

  const std::vector<double> whole = hermitian_eigenvalues(block);
  REQUIRE(whole.size() == merged.size());
  for (std::size_t i = 0; i < whole.size(); ++i) {
    CHECK(std::abs(whole[i] - merged[i]) < 1e-12);
  }
}

TEST_CASE("hermitian eigenvalues: non-Hermitian input is rejected") {
  const ComplexMatrix m = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
  CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("psd sqrt: identity and diagonal cases") {
  const ComplexMatrix i4 = ComplexMatrix::identity(4);
  CHECK(max_gap(psd_sqrt(i4), i4) == 0.0);

  const ComplexMatrix d = ComplexMatrix::from_rows(
      {{4, 0, 0, 0}, {0, 9, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}});
  const ComplexMatrix expected = ComplexMatrix::from_rows(
      {{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}});
  CHECK(max_gap(psd_sqrt(d), expected) == 0.0);
}

TEST_CASE("psd sqrt: squares back to the input") {
  std::mt19937 rng(41);
  for (std::size_t n : {2, 4, 6}) {
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix rho = test_support::random_density(n, rng);
      const ComplexMatrix s = psd_sqrt(rho);
      CHECK(s.hermiticity_defect() < 1e-13);
      CHECK(max_gap(s * s, rho) < tol::psd_sqrt_roundtrip);
    }
  }
  const ComplexMatrix model = fock_two_atom_density(0, RabiAngle(2.0)).matrix();
  const ComplexMatrix s = psd_sqrt(model);
  CHECK(max_gap(s * s, model) < tol::psd_sqrt_roundtrip);
}

TEST_CASE("psd sqrt: clamp window accepts dust, rejects genuine negatives") {
  const ComplexMatrix dusty =
      ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1e-13}});
  const ComplexMatrix s = psd_sqrt(dusty);
  CHECK(s(1, 1) == cxd{0.0, 0.0});

  const ComplexMatrix bad = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1e-6}});
  CHECK_THROWS_AS(psd_sqrt(bad), std::invalid_argument);
}

TEST_CASE("complex vector: basis states and norms") {
  const ComplexVector e2 = ComplexVector::basis(5, 2);
  CHECK(e2.norm() == 1.0);
  CHECK(e2.is_normalized(tol::state_norm));
  CHECK_THROWS_AS(ComplexVector::basis(3, 3), std::invalid_argument);
}
