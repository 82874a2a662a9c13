#pragma once

#include <initializer_list>
#include <span>

namespace enttopo {

/// H2(x) = -x log2 x - (1-x) log2(1-x); 0 at the endpoints.
/// Throws std::invalid_argument outside [0, 1].
double binary_entropy(double x);

/// Distillable entanglement of a rank-2 Bell-diagonal pair with fidelity
/// `lambda`: max(0, 1 - H2(lambda)). Evaluated in a cancellation-free form
/// so nearby lambdas stay distinguishable right down to lambda = 1/2.
double distillable_rank2(double lambda);

/// Fidelity after entanglement swapping joins two rank-2 pairs at a relay:
/// F = F_a F_b + (1 - F_a)(1 - F_b).
double swap_fidelity(double fid_a, double fid_b);

/// Fold a whole chain of rank-2 pairs into one end-to-end pair. Empty chains
/// are rejected; a single link passes through unchanged. The result does not
/// depend on the order links are joined.
double chain_swap(std::span<const double> fidelities);
double chain_swap(std::initializer_list<double> fidelities);

/// Entropy of entanglement of the pure state a0|00> + a1|11>, i.e.
/// H2(a1^2 / (a0^2 + a1^2)).
double pure_state_entanglement(double amplitude_zero, double amplitude_one);

/// Probability that the Procrustean filter turns one copy of
/// a0|00> + a1|11> into a maximally entangled pair: 2 min(a0^2, a1^2),
/// with amplitudes normalised first.
double procrustean_success(double amplitude_zero, double amplitude_one);

}  // namespace enttopo
