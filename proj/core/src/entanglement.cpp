#include "cavent/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "cavent/tolerances.hpp"

namespace cavent {

namespace {

// sigma_y x sigma_y in the {|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>} basis is the
// anti-diagonal (-1, 1, 1, -1); conjugation by it reverses both spins.
const ComplexMatrix& spin_flip_operator() {
  static const ComplexMatrix yy = ComplexMatrix::from_rows({
      {0.0, 0.0, 0.0, -1.0},
      {0.0, 0.0, 1.0, 0.0},
      {0.0, 1.0, 0.0, 0.0},
      {-1.0, 0.0, 0.0, 0.0},
  });
  return yy;
}

double eof_from_concurrence(double c) {
  const double arg = 1.0 - c * c;
  return binary_entropy(0.5 * (1.0 + std::sqrt(arg > 0.0 ? arg : 0.0)));
}

}  // namespace

ComplexMatrix spin_flip(const TwoAtomDensity& rho) {
  const ComplexMatrix& yy = spin_flip_operator();
  return yy * rho.matrix().conjugate() * yy;
}

EntanglementResult concurrence_general(const TwoAtomDensity& rho) {
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  const ComplexMatrix m = root * spin_flip(rho) * root;
  const std::vector<double> raw = hermitian_eigenvalues(m);

  EntanglementResult r;
  double c = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double v = raw[i];
    if (v < tol::eigenvalue_clamp) {
      throw std::invalid_argument(
          "concurrence_general: spectrum eigenvalue below the clamp window");
    }
    if (std::abs(v) < tol::lambda_dust) v = 0.0;
    r.lambdas[i] = v;
    const double s = v > 0.0 ? std::sqrt(v) : 0.0;
    c += (i == 0) ? s : -s;
  }
  r.concurrence = c > 0.0 ? c : 0.0;
  r.eof = eof_from_concurrence(r.concurrence);
  return r;
}

double concurrence_xstate(const TwoAtomDensity& rho) {
  // TwoAtomDensity construction already rejects anything outside the model
  // sparsity class, so the closed form applies to every reachable input.
  const ComplexMatrix& m = rho.matrix();
  const double corner = m(0, 0).real() * m(3, 3).real();
  const double c =
      2.0 * (std::abs(m(1, 2)) - std::sqrt(corner > 0.0 ? corner : 0.0));
  return c > 0.0 ? c : 0.0;
}

double binary_entropy(double x) {
  if (x < -tol::density_structure || x > 1.0 + tol::density_structure) {
    throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
  }
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

EntanglementResult entanglement_of_formation(const TwoAtomDensity& rho) {
  return concurrence_general(rho);
}

}  // namespace cavent
