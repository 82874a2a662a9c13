#pragma once

namespace enttopo {

/// Rank-2 Bell-diagonal pair: fidelity is the weight on the target Bell
/// component, the remainder sits on the bit-flipped partner state.
struct BellDiagonalPair {
  double fidelity = 1.0;
};

/// Fidelity (1 + e^-d)/2 that a perfect pair retains after one half travels
/// a distance d through the bit-flip channel.
double bitflip_lambda(double distance);

/// Send one half of `pair` a further distance d through the bit-flip
/// channel. Contracts the fidelity towards 1/2: 2F'-1 = (2F-1) e^-d.
BellDiagonalPair transmit_bitflip(const BellDiagonalPair& pair,
                                  double distance);

/// Joint (system + environment-flag) amplitudes after both halves of a
/// maximally entangled pair cross amplitude-damping wires of length d that
/// are continuously watched for a loss event. Basis order: no loss, photon
/// lost on the first wire, lost on the second, lost on both.
struct WatchedJointState {
  double distance = 0.0;
  double no_loss = 0.0;
  double loss_first = 0.0;
  double loss_second = 0.0;
  double loss_both = 0.0;

  double norm_squared() const;
};

WatchedJointState watched_joint_state(double distance);

/// Pure two-qubit state a0|00> + a1|11> kept when the watchers report no
/// loss, together with the probability of that report.
struct ConditionalPureState {
  double amplitude_zero = 0.0;
  double amplitude_one = 0.0;
  double observe_probability = 0.0;
};

ConditionalPureState watched_no_loss_state(double distance);

}  // namespace enttopo
