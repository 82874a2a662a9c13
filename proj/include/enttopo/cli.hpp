#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enttopo/scenarios.hpp"

namespace enttopo::cli {

enum class OutputFormat { Csv, Json };

/// Everything the compare/sweep command needs. The heuristic block is only
/// consulted when regime == Heuristic.
struct SweepConfig {
  RegimeKind regime = RegimeKind::Asymptotic;
  int n_min = 2;
  int n_max = 50;
  std::vector<double> radii = {1.0};
  OutputFormat format = OutputFormat::Csv;
  HeuristicParams heuristic{0.5, 0.5, 0.5, 0.5};
};

/// Throws std::invalid_argument on an unusable config (n_min < 2,
/// n_min > n_max, empty or non-positive radii, bad heuristic params).
void validate_config(const SweepConfig& config);

std::optional<RegimeKind> parse_regime(std::string_view name);
std::string_view regime_name(RegimeKind kind);

/// Run the sweep and serialize it to `out` in the configured format.
void write_compare(const SweepConfig& config, std::ostream& out);

enum class FigureId { Fig2, Fig3, ClassicalWire, HeuristicAd };

std::optional<FigureId> parse_figure_id(std::string_view name);

/// CSV stream behind one named plot. Fig2 sweeps the one-pair-traveling
/// regime, Fig3 one-pair-per-wirelength, ClassicalWire the total cable
/// lengths, HeuristicAd the watched amplitude-damping relay model (radius
/// doubles as the per-hop wire length there).
void write_figure(FigureId id, double radius, int n_max, std::ostream& out);

/// Cross-check the closed-form entanglement algebra against the
/// density-matrix oracle on `trials` random inputs. Prints one line per
/// check; returns the number of failed checks (0 = all within tolerance).
int run_verify(int trials, std::uint64_t seed, std::ostream& out);

/// Full command-line entry point. Exit codes: 0 success, 1 verification
/// failure, 2 usage or I/O error.
int run(int argc, const char* const* argv);

}  // namespace enttopo::cli
