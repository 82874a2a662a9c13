#pragma once

#include <optional>
#include <vector>

namespace enttopo {

/// Absolute tolerance on |e_star - e_ring| below which the two layouts are
/// declared equivalent instead of one winning.
inline constexpr double kTieTolerance = 1e-9;

enum class Winner { Star, Ring, Tie };

/// One row of a star-vs-ring comparison: the per-pair averages for a given
/// number of parties and which layout delivers more entanglement.
struct ComparisonRecord {
  int n_parties = 0;
  double e_avg_star = 0.0;
  double e_avg_ring = 0.0;
  Winner winner = Winner::Tie;
};

/// Full sweep over party counts. `crossover` is the smallest N whose ring
/// average strictly beats the star (beyond the tie tolerance), if any.
struct ComparisonReport {
  std::vector<ComparisonRecord> records;
  std::optional<int> crossover;
};

Winner classify_winner(double e_avg_star, double e_avg_ring,
                       double tolerance = kTieTolerance);

}  // namespace enttopo
