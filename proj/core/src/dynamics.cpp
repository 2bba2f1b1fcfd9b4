#include "cavent/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "cavent/tolerances.hpp"

namespace cavent {

RabiAngle::RabiAngle(double value) : gt(value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("RabiAngle: gt must be finite and >= 0");
  }
}

std::pair<double, double> jc_amplitudes(int n, RabiAngle gt) {
  if (n < 0) throw std::invalid_argument("jc_amplitudes: n must be >= 0");
  const double theta = std::sqrt(static_cast<double>(n) + 1.0) * gt.gt;
  return {std::cos(theta), std::sin(theta)};
}

TwoAtomCoefficients two_atom_coefficients(int n, RabiAngle gt) {
  if (n < 0) {
    throw std::invalid_argument("two_atom_coefficients: n must be >= 0");
  }
  const double theta1 = std::sqrt(static_cast<double>(n) + 1.0) * gt.gt;
  const double theta2 = std::sqrt(static_cast<double>(n) + 2.0) * gt.gt;
  const double c1 = std::cos(theta1);
  const double s1 = std::sin(theta1);
  TwoAtomCoefficients a;
  a.n = n;
  a.alpha1 = c1 * c1;
  a.alpha2 = c1 * s1;
  a.alpha3 = std::cos(theta2) * s1;
  a.alpha4 = s1 * std::sin(theta2);
  return a;
}

TwoAtomDensity TwoAtomDensity::from_betas(double b1, double b2, double b3,
                                          double b4, double b5) {
  if (std::abs(b1 + b2 + b3 + b5 - 1.0) > tol::density_structure) {
    throw std::invalid_argument("TwoAtomDensity: populations must sum to 1");
  }
  ComplexMatrix m(4, 4);
  m(0, 0) = b1;
  m(1, 1) = b2;
  m(2, 2) = b3;
  m(3, 3) = b5;
  m(1, 2) = b4;
  m(2, 1) = b4;
  return TwoAtomDensity(m);
}

TwoAtomDensity TwoAtomDensity::from_matrix(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() != 4) {
    throw std::invalid_argument("TwoAtomDensity: matrix must be 4x4");
  }
  if (!m.all_finite()) {
    throw std::invalid_argument("TwoAtomDensity: entries must be finite");
  }
  if (m.hermiticity_defect() > tol::density_structure) {
    throw std::invalid_argument("TwoAtomDensity: matrix not Hermitian");
  }
  if (std::abs(m.trace() - cxd{1.0, 0.0}) > tol::density_structure) {
    throw std::invalid_argument("TwoAtomDensity: trace must be 1");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const bool on_pattern =
          i == j || (i == 1 && j == 2) || (i == 2 && j == 1);
      if (!on_pattern && std::abs(m(i, j)) > tol::density_structure) {
        throw std::invalid_argument(
            "TwoAtomDensity: entry outside the model sparsity pattern");
      }
    }
  }
  if (std::abs(m(1, 2).imag()) > tol::density_structure) {
    throw std::invalid_argument("TwoAtomDensity: coherence must be real");
  }
  return TwoAtomDensity(m);
}

TwoAtomDensity two_atom_density(const PhotonDistribution& d, RabiAngle gt) {
  if (d.weights.empty()) {
    throw std::invalid_argument("two_atom_density: empty distribution");
  }
  double b1 = 0.0, b2 = 0.0, b3 = 0.0, b4 = 0.0, b5 = 0.0;
  double total = 0.0;
  for (std::size_t n = 0; n < d.weights.size(); ++n) {
    const double p = d.weights[n];
    if (p == 0.0) continue;
    const TwoAtomCoefficients a =
        two_atom_coefficients(static_cast<int>(n), gt);
    b1 += p * a.alpha1 * a.alpha1;
    b2 += p * a.alpha2 * a.alpha2;
    b3 += p * a.alpha3 * a.alpha3;
    b4 += p * a.alpha2 * a.alpha3;
    b5 += p * a.alpha4 * a.alpha4;
    total += p;
  }
  if (total <= 0.0) {
    throw std::invalid_argument("two_atom_density: distribution has no mass");
  }
  // absorb the truncation tail so the state is exactly trace-1
  return TwoAtomDensity::from_betas(b1 / total, b2 / total, b3 / total,
                                    b4 / total, b5 / total);
}

TwoAtomDensity fock_two_atom_density(int m, RabiAngle gt) {
  return two_atom_density(fock_distribution(m), gt);
}

}  // namespace cavent
