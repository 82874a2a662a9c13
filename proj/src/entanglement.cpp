#include "enttopo/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace enttopo {

namespace {

constexpr double kLn2 = 0.6931471805599453;

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

}  // namespace

double binary_entropy(double x) {
  check_unit_interval(x, "entropy argument");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -(x * std::log2(x) + (1.0 - x) * std::log2(1.0 - x));
}

double distillable_rank2(double lambda) {
  check_unit_interval(lambda, "fidelity");
  // 1 - H2(lambda) rewritten around the mixing point: with
  // delta = |2 lambda - 1|,
  //   1 - H2 = [(1+delta) log(1+delta) + (1-delta) log(1-delta)] / (2 ln 2).
  // Unlike the textbook form this loses no precision as delta -> 0, so
  // equal biases reached along different routes score equal entanglement.
  const double delta = std::fabs(2.0 * lambda - 1.0);
  if (delta >= 1.0) return 1.0;  // pure state either way
  const double e = 0.5 *
                   ((1.0 + delta) * std::log1p(delta) +
                    (1.0 - delta) * std::log1p(-delta)) /
                   kLn2;
  return e > 0.0 ? e : 0.0;
}

double swap_fidelity(double fid_a, double fid_b) {
  check_unit_interval(fid_a, "fidelity");
  check_unit_interval(fid_b, "fidelity");
  // Both pairs on target or both off target leave the joined pair on
  // target; equivalently the bias is multiplicative:
  // 2F-1 = (2Fa-1)(2Fb-1).
  return 1.0 + 2.0 * fid_a * fid_b - fid_a - fid_b;
}

double chain_swap(std::span<const double> fidelities) {
  if (fidelities.empty()) {
    throw std::invalid_argument("chain_swap needs at least one link");
  }
  double fid = fidelities.front();
  check_unit_interval(fid, "fidelity");
  for (std::size_t i = 1; i < fidelities.size(); ++i) {
    fid = swap_fidelity(fid, fidelities[i]);
  }
  return fid;
}

double chain_swap(std::initializer_list<double> fidelities) {
  return chain_swap(std::span<const double>(fidelities.begin(),
                                            fidelities.size()));
}

double pure_state_entanglement(double amplitude_zero, double amplitude_one) {
  const double n2 =
      amplitude_zero * amplitude_zero + amplitude_one * amplitude_one;
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw std::invalid_argument("state amplitudes must not both vanish");
  }
  return binary_entropy(amplitude_one * amplitude_one / n2);
}

double procrustean_success(double amplitude_zero, double amplitude_one) {
  const double n2 =
      amplitude_zero * amplitude_zero + amplitude_one * amplitude_one;
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw std::invalid_argument("state amplitudes must not both vanish");
  }
  const double p0 = amplitude_zero * amplitude_zero / n2;
  return 2.0 * std::min(p0, 1.0 - p0);
}

}  // namespace enttopo
