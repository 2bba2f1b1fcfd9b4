#include "cavent/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "cavent/tolerances.hpp"

namespace cavent::oracle {

namespace {

// Full-space index of |a1, a2, k>: ((a1 * 2) + a2) * field_dim + k.
std::size_t idx(int a1, int a2, int k, int field_dim) {
  return static_cast<std::size_t>((a1 * 2 + a2) * field_dim + k);
}

// Embed the atom (x) field propagator with atom1 active and atom2 as a
// spectator. Atom2 sits between the two active factors, so this is an
// explicit index-permuted embedding rather than a plain Kronecker product.
ComplexMatrix embed_atom1(const ComplexMatrix& u, int field_dim) {
  const std::size_t d = static_cast<std::size_t>(4 * field_dim);
  ComplexMatrix w(d, d);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a1p = 0; a1p < 2; ++a1p)
      for (int k = 0; k < field_dim; ++k)
        for (int kp = 0; kp < field_dim; ++kp) {
          const cxd v = u(static_cast<std::size_t>(a1 * field_dim + k),
                          static_cast<std::size_t>(a1p * field_dim + kp));
          if (v == 0.0) continue;
          for (int a2 = 0; a2 < 2; ++a2) {
            w(idx(a1, a2, k, field_dim), idx(a1p, a2, kp, field_dim)) = v;
          }
        }
  return w;
}

// Atom2 and the field are adjacent factors, so the spectator embedding for
// atom1 is a plain Kronecker product.
ComplexMatrix embed_atom2(const ComplexMatrix& u, int /*field_dim*/) {
  return tensor_product(ComplexMatrix::identity(2), u);
}

int occupied_max_photon(const PhotonDistribution& d) {
  int n_max = -1;
  for (std::size_t n = 0; n < d.weights.size(); ++n) {
    if (d.weights[n] > 0.0) n_max = static_cast<int>(n);
  }
  if (n_max < 0) {
    throw std::invalid_argument("oracle: distribution has no occupied level");
  }
  return n_max;
}

// The propagator for a given pass must never see amplitude on its dangling
// top state |e_active, field_dim-1>; with the +3 margin that would mean the
// truncation policy is broken.
void check_guard_level(const ComplexVector& psi, int active_atom,
                       int field_dim) {
  for (int spectator = 0; spectator < 2; ++spectator) {
    const int a1 = active_atom == 0 ? 0 : spectator;
    const int a2 = active_atom == 0 ? spectator : 0;
    if (psi[idx(a1, a2, field_dim - 1, field_dim)] != 0.0) {
      throw std::runtime_error(
          "oracle: guard level populated; field truncation too small");
    }
  }
}

// Propagate |e1 e2 n> through both passes in the given order and return the
// field-traced 4x4 density of the pure state.
ComplexMatrix single_fock_run(int n, int field_dim, const ComplexMatrix& first,
                              const ComplexMatrix& second, int first_atom,
                              int second_atom) {
  const std::size_t d = static_cast<std::size_t>(4 * field_dim);
  ComplexVector psi = ComplexVector::basis(d, idx(0, 0, n, field_dim));
  check_guard_level(psi, first_atom, field_dim);
  psi = apply(first, psi);
  check_guard_level(psi, second_atom, field_dim);
  psi = apply(second, psi);
  if (!psi.is_normalized(tol::state_norm)) {
    throw std::runtime_error("oracle: propagated state lost normalisation");
  }
  // Partial trace of |psi><psi| over the field index.
  ComplexMatrix red(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      cxd acc = 0.0;
      for (int k = 0; k < field_dim; ++k) {
        acc += psi[a * static_cast<std::size_t>(field_dim) +
                   static_cast<std::size_t>(k)] *
               std::conj(psi[b * static_cast<std::size_t>(field_dim) +
                             static_cast<std::size_t>(k)]);
      }
      red(a, b) = acc;
    }
  return red;
}

ComplexMatrix mixture_density(const PhotonDistribution& d, RabiAngle gt,
                              bool atom1_first) {
  const int n_max = occupied_max_photon(d);
  const TruncatedSpace space = TruncatedSpace::for_max_photon(n_max);
  const ComplexMatrix u = jc_propagator(space.field_dim, gt);
  const ComplexMatrix u1 = embed_atom1(u, space.field_dim);
  const ComplexMatrix u2 = embed_atom2(u, space.field_dim);

  ComplexMatrix acc(4, 4);
  double total = 0.0;
  // ascending n keeps the accumulation order deterministic
  for (std::size_t n = 0; n < d.weights.size(); ++n) {
    const double p = d.weights[n];
    if (p == 0.0) continue;
    const ComplexMatrix red =
        atom1_first
            ? single_fock_run(static_cast<int>(n), space.field_dim, u1, u2, 0, 1)
            : single_fock_run(static_cast<int>(n), space.field_dim, u2, u1, 1, 0);
    acc += cxd{p, 0.0} * red;
    total += p;
  }
  acc *= cxd{1.0 / total, 0.0};
  return acc;
}

}  // namespace

TruncatedSpace::TruncatedSpace(int levels) : field_dim(levels) {
  if (levels < 3) {
    throw std::invalid_argument("TruncatedSpace: need at least 3 field levels");
  }
}

TruncatedSpace TruncatedSpace::for_max_photon(int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("TruncatedSpace: n_max must be >= 0");
  }
  return TruncatedSpace(n_max + 3);
}

ComplexMatrix jc_propagator(int field_dim, RabiAngle gt) {
  if (field_dim < 2) {
    throw std::invalid_argument("jc_propagator: field_dim must be >= 2");
  }
  const std::size_t f = static_cast<std::size_t>(field_dim);
  ComplexMatrix u(2 * f, 2 * f);
  u(f, f) = 1.0;              // |g,0>
  u(f - 1, f - 1) = 1.0;      // dangling |e, field_dim-1>
  for (std::size_t n = 0; n + 1 < f; ++n) {
    const double theta = std::sqrt(static_cast<double>(n) + 1.0) * gt.gt;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const std::size_t e_n = n;
    const std::size_t g_n1 = f + n + 1;
    u(e_n, e_n) = c;
    u(g_n1, e_n) = s;
    u(e_n, g_n1) = -s;
    u(g_n1, g_n1) = c;
  }
  return u;
}

TwoAtomDensity oracle_two_atom_density(const PhotonDistribution& d,
                                       RabiAngle gt) {
  return TwoAtomDensity::from_matrix(mixture_density(d, gt, true));
}

double order_sensitivity_gap(const PhotonDistribution& d, RabiAngle gt) {
  const ComplexMatrix forward = mixture_density(d, gt, true);
  const ComplexMatrix reversed = mixture_density(d, gt, false);
  return (forward - reversed).max_abs();
}

}  // namespace cavent::oracle
