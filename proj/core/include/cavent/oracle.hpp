#pragma once

#include "cavent/dynamics.hpp"
#include "cavent/field.hpp"
#include "cavent/linalg.hpp"

// Brute-force validator for the analytic two-atom state: exact propagation
// in a truncated atom1 (x) atom2 (x) field Hilbert space followed by an
// explicit trace over the field. Everything here is derived from 2x2 block
// rotations, tensor embeddings and index sums; none of the closed-form
// two-pass coefficient or population formulas are used. Deliberately slow
// and dumb.

namespace cavent::oracle {

// Fock levels retained. Two excited atoms can raise the field by at most 2,
// so field_dim = n_max + 3 leaves one guard level that must stay empty.
struct TruncatedSpace {
  int field_dim;

  explicit TruncatedSpace(int levels);
  static TruncatedSpace for_max_photon(int n_max);

  int total_dim() const { return 4 * field_dim; }
};

// Single-pass propagator on atom (x) field (dimension 2*field_dim, atom slow
// index, |e> = 0). Built from the closed-form rotation on each
// {|e,n>, |g,n+1>} pair: |e,n> -> cos(theta)|e,n> + sin(theta)|g,n+1> with
// theta = sqrt(n+1) gt. |g,0> is stationary, and the dangling top level
// |e, field_dim-1> (whose partner lies outside the space) is kept
// stationary as well.
ComplexMatrix jc_propagator(int field_dim, RabiAngle gt);

// Full pipeline: for every occupied photon number, start from
// |e1> (x) |e2> (x) |n>, apply the atom1 propagator (atom2 spectator), then
// the atom2 propagator (atom1 spectator), trace the field out of the pure
// density, and average with weights P_n. Throws if any amplitude ever
// reaches the guard level.
TwoAtomDensity oracle_two_atom_density(const PhotonDistribution& d,
                                       RabiAngle gt);

// Max entrywise difference between the atom1-first and atom2-first
// pipelines. The atoms pass sequentially, so this must be far from zero at
// a generic point; a symmetric result would mean the spectator embedding is
// wrong.
double order_sensitivity_gap(const PhotonDistribution& d, RabiAngle gt);

}  // namespace cavent::oracle
