#include "cavent/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cavent/tolerances.hpp"

namespace cavent {

double PhotonDistribution::weight_sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

PhotonDistribution fock_distribution(int m) {
  if (m < 0) throw std::invalid_argument("fock_distribution: m must be >= 0");
  PhotonDistribution d;
  d.weights.assign(static_cast<std::size_t>(m) + 1, 0.0);
  d.weights.back() = 1.0;
  d.kind = FieldKind::fock;
  d.nominal_mean = static_cast<double>(m);
  d.tail_mass = 0.0;
  return d;
}

PhotonDistribution thermal_distribution(double nbar, double tail_epsilon) {
  if (!(nbar >= 0.0)) {
    throw std::invalid_argument("thermal_distribution: nbar must be >= 0");
  }
  if (!(tail_epsilon > 0.0) || tail_epsilon > 1e-6) {
    throw std::invalid_argument(
        "thermal_distribution: tail_epsilon must lie in (0, 1e-6]");
  }
  PhotonDistribution d;
  d.kind = FieldKind::thermal;
  d.nominal_mean = nbar;
  if (nbar == 0.0) {
    d.weights = {1.0};
    d.tail_mass = 0.0;
    return d;
  }

  // Tail beyond N is q^(N+1) with q = nbar/(1+nbar); solve for the smallest
  // N that pushes it under tail_epsilon.
  const double q = nbar / (1.0 + nbar);
  std::size_t n_max = static_cast<std::size_t>(
      std::ceil(std::log(tail_epsilon) / std::log(q)));

  const auto fill = [&](std::size_t count) {
    d.weights.clear();
    d.weights.reserve(count + 1);
    double p = 1.0 / (1.0 + nbar);  // P_0; successive weights scale by q
    for (std::size_t n = 0; n <= count; ++n) {
      d.weights.push_back(p);
      p *= q;
    }
  };
  fill(n_max);
  // The closed-form bound is exact in real arithmetic; re-check the summed
  // mass anyway and extend if rounding ever leaves it short.
  while (1.0 - d.weight_sum() >= tail_epsilon) {
    n_max += 8;
    fill(n_max);
  }
  d.tail_mass = std::max(0.0, 1.0 - d.weight_sum());
  return d;
}

double mean_photon(const PhotonDistribution& d) {
  if (d.weights.empty()) {
    throw std::invalid_argument("mean_photon: empty distribution");
  }
  double m = 0.0;
  for (std::size_t n = 0; n < d.weights.size(); ++n) {
    m += static_cast<double>(n) * d.weights[n];
  }
  return m;
}

double variance_metric(const PhotonDistribution& d) {
  if (d.weights.empty()) {
    throw std::invalid_argument("variance_metric: empty distribution");
  }
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t n = 0; n < d.weights.size(); ++n) {
    const double nn = static_cast<double>(n);
    mean += nn * d.weights[n];
    second += nn * nn * d.weights[n];
  }
  if (second == 0.0) {
    throw std::domain_error(
        "variance_metric: undefined for the vacuum (<n^2> = 0)");
  }
  return (second - mean) / second;
}

double nbar_from_temperature(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("nbar_from_temperature: ratio must be > 0");
  }
  return 1.0 / std::expm1(x);
}

}  // namespace cavent
