#pragma once

#include <cstddef>
#include <vector>

// Photon-number distributions of the cavity field and their statistics.

namespace cavent {

enum class FieldKind { fock, thermal };

// Weights P_n over photon numbers n = 0..weights.size()-1. Fock
// distributions are exact deltas; thermal ones are geometric, truncated so
// that the discarded tail mass stays below the construction epsilon.
struct PhotonDistribution {
  std::vector<double> weights;
  FieldKind kind = FieldKind::fock;
  double nominal_mean = 0.0;  // m for fock, requested <n> for thermal
  double tail_mass = 0.0;     // probability truncated away

  std::size_t max_photon() const { return weights.size() - 1; }
  double weight_sum() const;
};

// Delta distribution P_m = 1, zero-padded up to m so thermal and Fock share
// one iteration path.
PhotonDistribution fock_distribution(int m);

// Geometric distribution P_n = nbar^n / (1+nbar)^(n+1), truncated at the
// smallest N with tail mass below tail_epsilon (closed-form bound, then
// verified by summation). nbar = 0 degenerates to the vacuum delta.
PhotonDistribution thermal_distribution(double nbar, double tail_epsilon);

// <n>
double mean_photon(const PhotonDistribution& d);

// Noise metric (<n^2> - <n>) / <n^2>. Note: this is the normalisation used
// throughout this model family, not the conventional Fano factor
// (<n^2> - <n>^2)/<n>; 1 for a coherent field, below 1 for non-classical
// fields, 1 - 1/m for an m-photon Fock field. Undefined for the vacuum.
double variance_metric(const PhotonDistribution& d);

// Bose-Einstein mean occupation 1/(e^x - 1) for the dimensionless ratio
// x = (hbar*omega)/(k*T) > 0.
double nbar_from_temperature(double x);

}  // namespace cavent
