#pragma once

#include "enttopo/report.hpp"

namespace enttopo {

/// Success/failure bookkeeping for relaying entanglement across hops when
/// each hop only succeeds with probability p_success. A fully successful
/// relay yields e_distillable + delta_success per pair; any failure leaves
/// e_distillable - delta_fail.
struct HeuristicParams {
  double e_distillable = 0.0;
  double delta_success = 0.0;
  double delta_fail = 0.0;
  double p_success = 0.0;
};

/// Throws std::invalid_argument unless p_success is in [0, 1], both deltas
/// are >= 0, and the success/failure payoffs stay inside [0, 1].
void validate_params(const HeuristicParams& params);

/// Expected per-pair yield across `hops` independent relays:
/// p^n (E + dS) + (1 - p^n)(E - dF).
double heuristic_chain(const HeuristicParams& params, int hops);

/// Parameters describing watched amplitude-damping wires of length
/// `distance` per hop: every hop must observe no loss (p = e^-4d), success
/// pays out a full unit of entanglement and failure pays nothing, so the
/// expected yield collapses to e^-4nd.
HeuristicParams amplitude_damp_params(double distance, double e_distillable);

/// Star-vs-ring sweep under the heuristic yield, N = 2 .. n_max. The star
/// always relays over 2 hops; ring relays are averaged over shortest paths.
ComparisonReport heuristic_compare(const HeuristicParams& params, int n_max);

}  // namespace enttopo
