#include "enttopo/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace enttopo {

namespace {

void check_distance(double distance) {
  if (!(distance >= 0.0) || !std::isfinite(distance)) {
    throw std::invalid_argument("channel distance must be finite and >= 0");
  }
}

}  // namespace

double bitflip_lambda(double distance) {
  check_distance(distance);
  return 0.5 * (1.0 + std::exp(-distance));
}

BellDiagonalPair transmit_bitflip(const BellDiagonalPair& pair,
                                  double distance) {
  check_distance(distance);
  if (pair.fidelity < 0.0 || pair.fidelity > 1.0) {
    throw std::invalid_argument("pair fidelity must lie in [0, 1]");
  }
  // The bias 2F-1 decays exponentially, so repeated short trips compose
  // into one long trip.
  const double bias = (2.0 * pair.fidelity - 1.0) * std::exp(-distance);
  return BellDiagonalPair{0.5 * (1.0 + bias)};
}

double WatchedJointState::norm_squared() const {
  return no_loss * no_loss + loss_first * loss_first +
         loss_second * loss_second + loss_both * loss_both;
}

WatchedJointState watched_joint_state(double distance) {
  check_distance(distance);
  const double kRoot2Inv = std::sqrt(0.5);
  WatchedJointState state;
  state.distance = distance;
  // Each wire transmits an excitation with amplitude e^-d and leaks it to
  // its watcher with amplitude sqrt(1 - e^-2d); the |00> component never
  // leaks, so the no-loss branch keeps both the |00> and the doubly
  // transmitted |11> amplitude.
  const double keep = std::exp(-distance);
  const double leak = std::sqrt(1.0 - keep * keep);
  state.no_loss = kRoot2Inv * std::sqrt(1.0 + std::pow(keep, 4));
  state.loss_first = kRoot2Inv * keep * leak;
  state.loss_second = state.loss_first;
  state.loss_both = kRoot2Inv * leak * leak;
  return state;
}

ConditionalPureState watched_no_loss_state(double distance) {
  check_distance(distance);
  const double e4 = std::exp(-4.0 * distance);
  ConditionalPureState cond;
  cond.observe_probability = 0.5 * (1.0 + e4);
  const double norm = std::sqrt(1.0 + e4);
  cond.amplitude_zero = 1.0 / norm;
  cond.amplitude_one = std::exp(-2.0 * distance) / norm;
  return cond;
}

}  // namespace enttopo
