#pragma once

#include <utility>

#include "cavent/field.hpp"
#include "cavent/linalg.hpp"

// Resonant Jaynes-Cummings evolution for two excited atoms crossing a
// single-mode cavity one after the other, both with the same Rabi angle.
//
// Conventions used everywhere in this library:
//   * atom basis index 0 = |e>, 1 = |g>
//   * two-atom basis order {|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>}
//   * tensor order atom1 (x) atom2 (x) field; the field is always the
//     rightmost (fastest-varying, traced-out) factor
//   * atom 1 is the first to cross the cavity

namespace cavent {

// Dimensionless product of the coupling strength and the transit time.
struct RabiAngle {
  double gt = 0.0;
  explicit RabiAngle(double value);
};

// Amplitudes of the joint two-atom state over a Fock field |n>, after both
// atoms have crossed:
//   alpha1 |e1 e2, n> + alpha2 |e1 g2, n+1> + alpha3 |g1 e2, n+1>
//                     + alpha4 |g1 g2, n+2>
// with theta1 = sqrt(n+1) gt (first atom and second atom over |n>) and
// theta2 = sqrt(n+2) gt (second atom over |n+1>). alpha1^2 + .. + alpha4^2
// is identically 1.
struct TwoAtomCoefficients {
  int n = 0;
  double alpha1 = 1.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  double alpha4 = 0.0;

  double norm_squared() const {
    return alpha1 * alpha1 + alpha2 * alpha2 + alpha3 * alpha3 +
           alpha4 * alpha4;
  }
};

// 4x4 reduced two-atom density matrix. The model only ever populates the
// diagonal and the real |e1 g2><g1 e2| coherence:
//   diag(b1, b2, b3, b5), entries (1,2) and (2,1) equal to b4 (0-indexed).
class TwoAtomDensity {
 public:
  static TwoAtomDensity from_betas(double b1, double b2, double b3, double b4,
                                   double b5);
  // Validates shape, Hermiticity, unit trace and the sparsity pattern
  // (tolerance tol::density_structure) before accepting a raw matrix.
  static TwoAtomDensity from_matrix(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return m_; }
  double diagonal(std::size_t i) const { return m_(i, i).real(); }
  double coherence() const { return m_(1, 2).real(); }

 private:
  explicit TwoAtomDensity(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

// One excited atom across a Fock field |n>: amplitudes of |e,n> and |g,n+1>,
// i.e. (cos(sqrt(n+1) gt), sin(sqrt(n+1) gt)).
std::pair<double, double> jc_amplitudes(int n, RabiAngle gt);

TwoAtomCoefficients two_atom_coefficients(int n, RabiAngle gt);

// Reduced two-atom state for a photon-number mixture: incoherent average of
// the per-n pure-state contributions, renormalised by the (possibly
// truncated) total weight.
TwoAtomDensity two_atom_density(const PhotonDistribution& d, RabiAngle gt);

// Shorthand for two_atom_density(fock_distribution(m), gt).
TwoAtomDensity fock_two_atom_density(int m, RabiAngle gt);

}  // namespace cavent
