#pragma once

#include <cstddef>

namespace enttopo {

enum class TopologyKind { Star, Ring };

/// N parties spaced evenly on a circle of radius `radius`. A Star layout
/// wires every party to a central exchange at the circle's centre; a Ring
/// wires each party to its two neighbours along the circle's chords.
struct NetworkLayout {
  TopologyKind kind = TopologyKind::Star;
  int n_parties = 0;
  double radius = 0.0;
};

/// Connection between two parties: physical length of each wire segment on
/// the route and the number of segments (hops) the route uses.
struct PathSpec {
  double wirelength = 0.0;
  int hops = 0;
};

/// Shortest-path bookkeeping for one ring party against all others:
/// hop counts 1..u_bound occur twice (clockwise and anticlockwise) and,
/// for even N, the antipodal hop count N/2 occurs once (mu = 1).
struct RingWeights {
  int u_bound = 0;
  int mu = 0;
};

/// Throws std::invalid_argument unless n_parties >= 2 and radius > 0.
void validate_layout(const NetworkLayout& layout);

/// Length of a single wire segment: the spoke radius for a star, the chord
/// 2 R sin(pi/N) between adjacent parties for a ring.
double wirelength(const NetworkLayout& layout);

/// Total cable laid: N spokes for the star, N chords for the ring.
double total_wire(const NetworkLayout& layout);

/// Route between two distinct parties (1-based labels). Star routes always
/// relay through the hub (2 hops of one spoke each); ring routes take the
/// shorter way round, min(|a-b|, N - |a-b|) hops of one chord each.
PathSpec path(const NetworkLayout& layout, int party_a, int party_b);

RingWeights ring_weights(int n_parties);

/// Average of f(hops) over the connections from one ring party to the other
/// N-1 parties, using the shortest-path multiplicities above.
template <typename F>
double ring_pair_average(int n_parties, F&& f) {
  const RingWeights w = ring_weights(n_parties);
  double sum = 0.0;
  for (int n = 1; n <= w.u_bound; ++n) sum += 2.0 * f(n);
  if (w.mu == 1) sum += f(n_parties / 2);
  return sum / static_cast<double>(n_parties - 1);
}

}  // namespace enttopo
