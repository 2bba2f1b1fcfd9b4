#pragma once

#include <array>

#include "cavent/dynamics.hpp"
#include "cavent/linalg.hpp"

// Mixed-state two-qubit entanglement measures: Wootters concurrence and the
// entanglement of formation it determines.

namespace cavent {

struct EntanglementResult {
  double concurrence = 0.0;        // in [0, 1]
  double eof = 0.0;                // in [0, 1], ebits (log base 2)
  std::array<double, 4> lambdas{}; // concurrence spectrum, descending
};

// Spin-flipped density rhotilde = (sigma_y x sigma_y) conj(rho)
// (sigma_y x sigma_y); Hermitian, PSD, trace 1.
ComplexMatrix spin_flip(const TwoAtomDensity& rho);

// Wootters concurrence through the spectrum route. The lambdas are taken
// from the Hermitian matrix sqrt(rho) rhotilde sqrt(rho), which shares its
// spectrum with rho*rhotilde but keeps the Jacobi solver applicable.
// C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)). Eigenvalue dust
// with |lambda| < tol::lambda_dust is zeroed before the square roots.
// This route is authoritative; concurrence_xstate is the cross-check.
EntanglementResult concurrence_general(const TwoAtomDensity& rho);

// Closed form for the model's sparsity class (diagonal plus one real
// |e1 g2><g1 e2| coherence): C = 2 max(0, |rho23| - sqrt(rho11 rho44)).
// TwoAtomDensity construction rejects inputs outside that class.
double concurrence_xstate(const TwoAtomDensity& rho);

// Shannon binary entropy h(x) = -x log2 x - (1-x) log2(1-x), with
// h(0) = h(1) = 0 by continuity. Accepts 1e-12 of slack outside [0, 1].
double binary_entropy(double x);

// E_F = h((1 + sqrt(1 - C^2)) / 2), a strictly increasing function of the
// concurrence; 0 for separable states, 1 for Bell states.
EntanglementResult entanglement_of_formation(const TwoAtomDensity& rho);

}  // namespace cavent
