#include "enttopo/scenarios.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "enttopo/channels.hpp"
#include "enttopo/entanglement.hpp"
#include "enttopo/topology.hpp"

namespace enttopo {

namespace {

double bitflip_distillable(double distance) {
  return distillable_rank2(bitflip_lambda(distance));
}

}  // namespace

ResourceRegime ResourceRegime::asymptotic() {
  ResourceRegime regime;
  regime.kind = RegimeKind::Asymptotic;
  return regime;
}

ResourceRegime ResourceRegime::asymptotic_with(
    std::function<double(double)> e_of_d) {
  if (!e_of_d) {
    throw std::invalid_argument("asymptotic regime needs a valid E(d)");
  }
  ResourceRegime regime;
  regime.kind = RegimeKind::Asymptotic;
  regime.entanglement_at = std::move(e_of_d);
  return regime;
}

ResourceRegime ResourceRegime::one_pair_traveling() {
  ResourceRegime regime;
  regime.kind = RegimeKind::OnePairTraveling;
  return regime;
}

ResourceRegime ResourceRegime::one_pair_per_wirelength() {
  ResourceRegime regime;
  regime.kind = RegimeKind::OnePairPerWirelength;
  return regime;
}

ResourceRegime ResourceRegime::heuristic_model(const HeuristicParams& params) {
  validate_params(params);
  ResourceRegime regime;
  regime.kind = RegimeKind::Heuristic;
  regime.heuristic = params;
  return regime;
}

double pair_entanglement(const ResourceRegime& regime, double wirelength,
                         int hops) {
  if (!(wirelength > 0.0)) {
    throw std::invalid_argument("wirelength must be positive");
  }
  if (hops < 1) {
    throw std::invalid_argument("a route needs at least one hop");
  }
  switch (regime.kind) {
    case RegimeKind::Asymptotic:
      // With unbounded pairs per wire, relays distill before swapping, so
      // only the per-wire rate matters, not how many wires the route uses.
      return regime.entanglement_at ? regime.entanglement_at(wirelength)
                                    : bitflip_distillable(wirelength);
    case RegimeKind::OnePairTraveling:
      return distillable_rank2(
          bitflip_lambda(static_cast<double>(hops) * wirelength));
    case RegimeKind::OnePairPerWirelength: {
      const double link = bitflip_lambda(wirelength);
      const std::vector<double> links(static_cast<std::size_t>(hops), link);
      return distillable_rank2(chain_swap(links));
    }
    case RegimeKind::Heuristic:
      return heuristic_chain(regime.heuristic, hops);
  }
  throw std::invalid_argument("unknown resource regime");
}

double avg_entanglement_star(const ResourceRegime& regime, int n_parties,
                             double radius) {
  const NetworkLayout layout{TopologyKind::Star, n_parties, radius};
  validate_layout(layout);
  // Every pair of star parties is two spokes apart, so the average over
  // partners is a single evaluation.
  return pair_entanglement(regime, wirelength(layout), 2);
}

double avg_entanglement_ring(const ResourceRegime& regime, int n_parties,
                             double radius) {
  const NetworkLayout layout{TopologyKind::Ring, n_parties, radius};
  validate_layout(layout);
  const double chord = wirelength(layout);
  return ring_pair_average(n_parties, [&](int hops) {
    return pair_entanglement(regime, chord, hops);
  });
}

ComparisonReport compare(const ResourceRegime& regime, double radius,
                         int n_max) {
  if (n_max < 2) {
    throw std::invalid_argument("comparison needs n_max >= 2");
  }
  if (!(radius > 0.0)) {
    throw std::invalid_argument("comparison radius must be positive");
  }
  ComparisonReport report;
  report.records.reserve(static_cast<std::size_t>(n_max - 1));
  for (int n = 2; n <= n_max; ++n) {
    ComparisonRecord rec;
    rec.n_parties = n;
    rec.e_avg_star = avg_entanglement_star(regime, n, radius);
    rec.e_avg_ring = avg_entanglement_ring(regime, n, radius);
    rec.winner = classify_winner(rec.e_avg_star, rec.e_avg_ring);
    if (!report.crossover && rec.winner == Winner::Ring) {
      report.crossover = n;
    }
    report.records.push_back(rec);
  }
  return report;
}

}  // namespace enttopo
