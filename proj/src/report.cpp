#include "enttopo/report.hpp"

#include <cmath>
#include <stdexcept>

namespace enttopo {

Winner classify_winner(double e_avg_star, double e_avg_ring,
                       double tolerance) {
  if (!(tolerance >= 0.0)) {
    throw std::invalid_argument("tie tolerance must be non-negative");
  }
  if (std::fabs(e_avg_star - e_avg_ring) <= tolerance) return Winner::Tie;
  return e_avg_star > e_avg_ring ? Winner::Star : Winner::Ring;
}

}  // namespace enttopo
