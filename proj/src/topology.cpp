#include "enttopo/topology.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace enttopo {

void validate_layout(const NetworkLayout& layout) {
  if (layout.n_parties < 2) {
    throw std::invalid_argument("layout needs at least 2 parties, got " +
                                std::to_string(layout.n_parties));
  }
  if (!(layout.radius > 0.0)) {
    throw std::invalid_argument("layout radius must be positive");
  }
}

double wirelength(const NetworkLayout& layout) {
  validate_layout(layout);
  if (layout.kind == TopologyKind::Star) return layout.radius;
  return 2.0 * layout.radius *
         std::sin(M_PI / static_cast<double>(layout.n_parties));
}

double total_wire(const NetworkLayout& layout) {
  return static_cast<double>(layout.n_parties) * wirelength(layout);
}

PathSpec path(const NetworkLayout& layout, int party_a, int party_b) {
  validate_layout(layout);
  if (party_a < 1 || party_a > layout.n_parties || party_b < 1 ||
      party_b > layout.n_parties) {
    throw std::invalid_argument("party label outside 1.." +
                                std::to_string(layout.n_parties));
  }
  if (party_a == party_b) {
    throw std::invalid_argument("path endpoints must be distinct parties");
  }

  PathSpec spec;
  spec.wirelength = wirelength(layout);
  if (layout.kind == TopologyKind::Star) {
    spec.hops = 2;  // out to the hub and back down the other spoke
  } else {
    const int gap = std::abs(party_a - party_b);
    spec.hops = std::min(gap, layout.n_parties - gap);
  }
  return spec;
}

RingWeights ring_weights(int n_parties) {
  if (n_parties < 2) {
    throw std::invalid_argument("ring weights need at least 2 parties");
  }
  RingWeights w;
  if (n_parties % 2 == 0) {
    w.u_bound = n_parties / 2 - 1;
    w.mu = 1;  // the antipodal party is reached one way only
  } else {
    w.u_bound = (n_parties - 1) / 2;
    w.mu = 0;
  }
  return w;
}

}  // namespace enttopo
