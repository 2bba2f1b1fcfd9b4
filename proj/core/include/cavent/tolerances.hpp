#pragma once

// Central numeric tolerance record. Every absolute threshold used by the
// library lives here; nothing else hard-codes an epsilon.

namespace cavent::tol {

// Maximum |A - A^dagger| entry accepted as Hermitian.
inline constexpr double hermiticity = 1e-10;

// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
inline constexpr double jacobi_off_diagonal = 1e-14;

// Eigenvalues in [eigenvalue_clamp, 0) are floating-point dust and are
// treated as exact zeros; anything more negative is a hard error.
inline constexpr double eigenvalue_clamp = -1e-12;

// |lambda| below this is indistinguishable from the dust injected when the
// spin-flip eigenproblem matrix is formed in doubles; such values are zeroed
// before square roots are taken so they cannot leak ~sqrt(eps) into the
// concurrence.
inline constexpr double lambda_dust = 1e-15;

// Entrywise bound accepted for S*S == rho after a PSD square root.
inline constexpr double psd_sqrt_roundtrip = 1e-10;

// Density-matrix structure checks (Hermiticity, unit trace, sparsity).
inline constexpr double density_structure = 1e-12;

// State-vector normalisation check.
inline constexpr double state_norm = 1e-12;

// Propagator unitarity check.
inline constexpr double unitarity = 1e-12;

// Oracle vs analytic agreement, entrywise.
inline constexpr double oracle_match_fock = 1e-12;
inline constexpr double oracle_match_thermal = 1e-10;

// General-route vs closed-form concurrence agreement.
inline constexpr double concurrence_routes = 1e-10;

// Largest matrix dimension tensor_product may produce; a request beyond this
// signals a runaway field truncation upstream.
inline constexpr int max_tensor_dim = 16384;

// Default truncation tail for thermal photon distributions.
inline constexpr double default_tail_epsilon = 1e-12;

}  // namespace cavent::tol
