#pragma once

#include <functional>

#include "enttopo/heuristic.hpp"
#include "enttopo/report.hpp"

namespace enttopo {

enum class RegimeKind {
  /// Unlimited pairs per wire: rate is the channel's distillable
  /// entanglement at the wire distance, independent of hop count.
  Asymptotic,
  /// A single pair, one half carried the whole route before relaying:
  /// total travelled distance is hops * wirelength.
  OnePairTraveling,
  /// One pair per wire segment, joined end-to-end by swapping at relays.
  OnePairPerWirelength,
  /// Probabilistic relay model with explicit success/failure payoffs.
  Heuristic,
};

/// Resource accounting used when scoring a connection. The asymptotic
/// regime may carry a custom per-distance entanglement curve; by default it
/// uses the bit-flip channel's distillable entanglement.
struct ResourceRegime {
  RegimeKind kind = RegimeKind::Asymptotic;
  HeuristicParams heuristic;
  std::function<double(double)> entanglement_at;

  static ResourceRegime asymptotic();
  static ResourceRegime asymptotic_with(std::function<double(double)> e_of_d);
  static ResourceRegime one_pair_traveling();
  static ResourceRegime one_pair_per_wirelength();
  static ResourceRegime heuristic_model(const HeuristicParams& params);
};

/// Entanglement delivered between two parties joined by `hops` wire
/// segments of length `wirelength` each, under the given accounting.
double pair_entanglement(const ResourceRegime& regime, double wirelength,
                         int hops);

/// Average entanglement between one party and the other N-1, for each
/// layout on a circle of the given radius.
double avg_entanglement_star(const ResourceRegime& regime, int n_parties,
                             double radius);
double avg_entanglement_ring(const ResourceRegime& regime, int n_parties,
                             double radius);

/// Full star-vs-ring sweep for N = 2 .. n_max at one radius.
ComparisonReport compare(const ResourceRegime& regime, double radius,
                         int n_max);

}  // namespace enttopo
