#include "enttopo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "enttopo/channels.hpp"
#include "enttopo/entanglement.hpp"
#include "enttopo/oracle.hpp"
#include "enttopo/topology.hpp"

namespace enttopo::cli {

namespace {

/// Fixed-precision, locale-independent rendering: 12 significant digits,
/// identical bytes for identical doubles on any IEEE-754 platform.
std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string_view winner_name(Winner w) {
  switch (w) {
    case Winner::Star:
      return "star";
    case Winner::Ring:
      return "ring";
    case Winner::Tie:
      return "tie";
  }
  return "tie";
}

ResourceRegime make_regime(const SweepConfig& config) {
  switch (config.regime) {
    case RegimeKind::Asymptotic:
      return ResourceRegime::asymptotic();
    case RegimeKind::OnePairTraveling:
      return ResourceRegime::one_pair_traveling();
    case RegimeKind::OnePairPerWirelength:
      return ResourceRegime::one_pair_per_wirelength();
    case RegimeKind::Heuristic:
      return ResourceRegime::heuristic_model(config.heuristic);
  }
  throw std::invalid_argument("unknown resource regime");
}

struct RadiusBlock {
  double radius = 0.0;
  ComparisonReport report;
};

std::vector<RadiusBlock> run_sweep(const SweepConfig& config) {
  std::vector<RadiusBlock> blocks;
  blocks.reserve(config.radii.size());
  if (config.regime == RegimeKind::Heuristic) {
    // The relay model depends on hop counts only; one sweep serves every
    // radius.
    const ComparisonReport report =
        heuristic_compare(config.heuristic, config.n_max);
    for (double r : config.radii) blocks.push_back({r, report});
  } else {
    const ResourceRegime regime = make_regime(config);
    for (double r : config.radii) {
      blocks.push_back({r, compare(regime, r, config.n_max)});
    }
  }
  return blocks;
}

void write_compare_csv(const SweepConfig& config,
                       const std::vector<RadiusBlock>& blocks,
                       std::ostream& out) {
  out << "radius,n_parties,e_avg_star,e_avg_ring,winner\n";
  for (const auto& block : blocks) {
    for (const auto& rec : block.report.records) {
      if (rec.n_parties < config.n_min) continue;
      out << fmt(block.radius) << ',' << rec.n_parties << ','
          << fmt(rec.e_avg_star) << ',' << fmt(rec.e_avg_ring) << ','
          << winner_name(rec.winner) << '\n';
    }
  }
  for (const auto& block : blocks) {
    out << "# crossover radius=" << fmt(block.radius) << ": ";
    if (block.report.crossover) {
      out << *block.report.crossover;
    } else {
      out << "none in range";
    }
    out << '\n';
  }
}

void write_compare_json(const SweepConfig& config,
                        const std::vector<RadiusBlock>& blocks,
                        std::ostream& out) {
  nlohmann::ordered_json doc;
  auto& meta = doc["meta"];
  meta["command"] = "compare";
  meta["regime"] = std::string(regime_name(config.regime));
  meta["n_min"] = config.n_min;
  meta["n_max"] = config.n_max;
  meta["radii"] = config.radii;
  meta["output_format"] = "json";
  meta["tie_tolerance"] = kTieTolerance;
  if (config.regime == RegimeKind::Heuristic) {
    meta["heuristic"] = {{"e_distillable", config.heuristic.e_distillable},
                         {"delta_success", config.heuristic.delta_success},
                         {"delta_fail", config.heuristic.delta_fail},
                         {"p_success", config.heuristic.p_success}};
  }
  auto& records = doc["records"];
  records = nlohmann::ordered_json::array();
  for (const auto& block : blocks) {
    for (const auto& rec : block.report.records) {
      if (rec.n_parties < config.n_min) continue;
      records.push_back({{"radius", block.radius},
                         {"n_parties", rec.n_parties},
                         {"e_avg_star", rec.e_avg_star},
                         {"e_avg_ring", rec.e_avg_ring},
                         {"winner", std::string(winner_name(rec.winner))}});
    }
  }
  auto& crossovers = doc["crossovers"];
  crossovers = nlohmann::ordered_json::array();
  for (const auto& block : blocks) {
    nlohmann::ordered_json entry{{"radius", block.radius}};
    if (block.report.crossover) {
      entry["crossover"] = *block.report.crossover;
    } else {
      entry["crossover"] = nullptr;
    }
    crossovers.push_back(std::move(entry));
  }
  out << doc.dump(2) << '\n';
}

void check_figure_inputs(double radius, int n_max) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("figure radius must be positive and finite");
  }
  if (n_max < 2) {
    throw std::invalid_argument("figure needs n_max >= 2");
  }
}

void write_series_csv(const ComparisonReport& report, std::ostream& out) {
  out << "n_parties,e_avg_ring,e_avg_star\n";
  for (const auto& rec : report.records) {
    out << rec.n_parties << ',' << fmt(rec.e_avg_ring) << ','
        << fmt(rec.e_avg_star) << '\n';
  }
}

}  // namespace

void validate_config(const SweepConfig& config) {
  if (config.n_min < 2) {
    throw std::invalid_argument("n-min must be at least 2");
  }
  if (config.n_min > config.n_max) {
    throw std::invalid_argument("n-min must not exceed n-max");
  }
  if (config.radii.empty()) {
    throw std::invalid_argument("at least one radius is required");
  }
  for (double r : config.radii) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("radii must be positive and finite");
    }
  }
  if (config.regime == RegimeKind::Heuristic) {
    validate_params(config.heuristic);
  }
}

std::optional<RegimeKind> parse_regime(std::string_view name) {
  if (name == "asymptotic") return RegimeKind::Asymptotic;
  if (name == "one-pair-traveling") return RegimeKind::OnePairTraveling;
  if (name == "one-pair-per-wirelength") {
    return RegimeKind::OnePairPerWirelength;
  }
  if (name == "heuristic") return RegimeKind::Heuristic;
  return std::nullopt;
}

std::string_view regime_name(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::Asymptotic:
      return "asymptotic";
    case RegimeKind::OnePairTraveling:
      return "one-pair-traveling";
    case RegimeKind::OnePairPerWirelength:
      return "one-pair-per-wirelength";
    case RegimeKind::Heuristic:
      return "heuristic";
  }
  return "asymptotic";
}

void write_compare(const SweepConfig& config, std::ostream& out) {
  validate_config(config);
  const std::vector<RadiusBlock> blocks = run_sweep(config);
  if (config.format == OutputFormat::Csv) {
    write_compare_csv(config, blocks, out);
  } else {
    write_compare_json(config, blocks, out);
  }
}

std::optional<FigureId> parse_figure_id(std::string_view name) {
  if (name == "fig2") return FigureId::Fig2;
  if (name == "fig3") return FigureId::Fig3;
  if (name == "classical-wire") return FigureId::ClassicalWire;
  if (name == "heuristic-ad") return FigureId::HeuristicAd;
  return std::nullopt;
}

void write_figure(FigureId id, double radius, int n_max, std::ostream& out) {
  check_figure_inputs(radius, n_max);
  switch (id) {
    case FigureId::Fig2:
      write_series_csv(
          compare(ResourceRegime::one_pair_traveling(), radius, n_max), out);
      return;
    case FigureId::Fig3:
      write_series_csv(
          compare(ResourceRegime::one_pair_per_wirelength(), radius, n_max),
          out);
      return;
    case FigureId::ClassicalWire: {
      out << "n_parties,total_wire_ring,total_wire_star\n";
      for (int n = 2; n <= n_max; ++n) {
        const double ring =
            total_wire({TopologyKind::Ring, n, radius});
        const double star =
            total_wire({TopologyKind::Star, n, radius});
        out << n << ',' << fmt(ring) << ',' << fmt(star) << '\n';
      }
      return;
    }
    case FigureId::HeuristicAd:
      // Radius doubles as the per-hop wire length of the watched
      // amplitude-damping relay model.
      write_series_csv(
          heuristic_compare(amplitude_damp_params(radius, 0.5), n_max), out);
      return;
  }
  throw std::invalid_argument("unknown figure id");
}

namespace {

/// Uniform double in [0, 1) from the top 53 bits of the engine, so the
/// stream is identical on every conforming platform.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct VerifyCheck {
  std::string name;
  double max_delta = 0.0;
  double tolerance = 0.0;
  std::string worst_case;
};

void note_delta(VerifyCheck& check, double delta, std::string describe) {
  if (delta > check.max_delta) {
    check.max_delta = delta;
    check.worst_case = std::move(describe);
  }
}

std::string fmt6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

}  // namespace

int run_verify(int trials, std::uint64_t seed, std::ostream& out) {
  if (trials < 1) {
    throw std::invalid_argument("verify needs at least one trial");
  }
  std::mt19937_64 rng(seed);
  std::vector<VerifyCheck> checks;

  {
    VerifyCheck closed{"swap-closed-form", 0.0, 1e-10, ""};
    VerifyCheck spread{"swap-outcome-spread", 0.0, 1e-10, ""};
    for (int t = 0; t < trials; ++t) {
      const double fa = next_unit(rng);
      const double fb = next_unit(rng);
      const auto rho_a = oracle::bell_diagonal_density(fa);
      const auto rho_b = oracle::bell_diagonal_density(fb);
      const double from_oracle = oracle::bell_overlap(
          oracle::swap_pairs(rho_a, rho_b), oracle::Bell::PsiPlus);
      const double from_formula = swap_fidelity(fa, fb);
      note_delta(closed, std::fabs(from_oracle - from_formula),
                 "F_a=" + fmt6(fa) + " F_b=" + fmt6(fb) + " expected " +
                     fmt6(from_formula) + " got " + fmt6(from_oracle));

      const auto outcomes = oracle::swap_outcome_fidelities(rho_a, rho_b);
      const auto [lo, hi] = std::minmax_element(outcomes.begin(),
                                                outcomes.end());
      note_delta(spread, *hi - *lo,
                 "F_a=" + fmt6(fa) + " F_b=" + fmt6(fb) + " outcome range [" +
                     fmt6(*lo) + ", " + fmt6(*hi) + "]");
    }
    checks.push_back(std::move(closed));
    checks.push_back(std::move(spread));
  }

  {
    VerifyCheck transmit{"transmit-closed-form", 0.0, 1e-12, ""};
    for (int t = 0; t < trials; ++t) {
      const double fid = next_unit(rng);
      const double d = 5.0 * next_unit(rng);
      const double from_oracle = oracle::bell_overlap(
          oracle::apply_bitflip(oracle::bell_diagonal_density(fid), d),
          oracle::Bell::PsiPlus);
      const double from_formula = transmit_bitflip({fid}, d).fidelity;
      note_delta(transmit, std::fabs(from_oracle - from_formula),
                 "F=" + fmt6(fid) + " d=" + fmt6(d) + " expected " +
                     fmt6(from_formula) + " got " + fmt6(from_oracle));
    }
    checks.push_back(std::move(transmit));
  }

  {
    VerifyCheck semigroup{"chain-vs-direct-transmission", 0.0, 1e-12, ""};
    for (int t = 0; t < trials; ++t) {
      const double d = 5.0 * next_unit(rng);
      const int hops = 1 + static_cast<int>(rng() % 64);
      const std::vector<double> links(static_cast<std::size_t>(hops),
                                      bitflip_lambda(d));
      const double chained = chain_swap(links);
      const double direct = bitflip_lambda(static_cast<double>(hops) * d);
      note_delta(semigroup, std::fabs(chained - direct),
                 "d=" + fmt6(d) + " hops=" + std::to_string(hops) +
                     " expected " + fmt6(direct) + " got " + fmt6(chained));
    }
    checks.push_back(std::move(semigroup));
  }

  {
    VerifyCheck folded{"oracle-chain-fold", 0.0, 1e-10, ""};
    const int fold_trials = std::min(trials, 64);
    for (int t = 0; t < fold_trials; ++t) {
      const double d = 2.0 * next_unit(rng);
      const int hops = 2 + static_cast<int>(rng() % 5);
      const double link = bitflip_lambda(d);
      auto rho = oracle::bell_diagonal_density(link);
      for (int h = 1; h < hops; ++h) {
        rho = oracle::swap_pairs(rho, oracle::bell_diagonal_density(link));
      }
      const double from_oracle =
          oracle::bell_overlap(rho, oracle::Bell::PsiPlus);
      const std::vector<double> links(static_cast<std::size_t>(hops), link);
      const double from_formula = chain_swap(links);
      note_delta(folded, std::fabs(from_oracle - from_formula),
                 "d=" + fmt6(d) + " hops=" + std::to_string(hops) +
                     " expected " + fmt6(from_formula) + " got " +
                     fmt6(from_oracle));
    }
    checks.push_back(std::move(folded));
  }

  {
    VerifyCheck entropy{"entropy-vs-binary-entropy", 0.0, 1e-10, ""};
    for (int k = 0; k <= 10; ++k) {
      const double lambda = 0.1 * k;
      const double from_oracle = oracle::von_neumann_entropy(
          oracle::bell_diagonal_density(lambda));
      note_delta(entropy, std::fabs(from_oracle - binary_entropy(lambda)),
                 "lambda=" + fmt6(lambda) + " expected " +
                     fmt6(binary_entropy(lambda)) + " got " +
                     fmt6(from_oracle));
    }
    for (int t = 0; t < trials; ++t) {
      const double lambda = next_unit(rng);
      const double from_oracle = oracle::von_neumann_entropy(
          oracle::bell_diagonal_density(lambda));
      note_delta(entropy, std::fabs(from_oracle - binary_entropy(lambda)),
                 "lambda=" + fmt6(lambda) + " expected " +
                     fmt6(binary_entropy(lambda)) + " got " +
                     fmt6(from_oracle));
    }
    checks.push_back(std::move(entropy));
  }

  int failures = 0;
  for (const auto& check : checks) {
    const bool ok = check.max_delta < check.tolerance;
    out << "check " << check.name << ": max|delta| = " << fmt6(check.max_delta)
        << " (tolerance " << fmt6(check.tolerance) << ") "
        << (ok ? "ok" : "FAIL") << '\n';
    if (!ok) {
      out << "  worst case: " << check.worst_case << '\n';
      ++failures;
    }
  }
  out << "verify: " << (checks.size() - failures) << '/' << checks.size()
      << " checks passed (trials=" << trials << ", seed=" << seed << ")\n";
  return failures;
}

namespace {

/// Run `fn(out)` with `out` bound to the named file, or to stdout when the
/// path is empty. Returns 2 on I/O trouble.
template <typename Fn>
int with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return std::cout ? 0 : 2;
  }
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 2;
  }
  fn(file);
  if (!file) {
    std::cerr << "error: failed while writing '" << path << "'\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Star vs ring layouts for entanglement distribution"};
  app.require_subcommand(1);

  std::string regime_arg = "asymptotic";
  std::string format_arg = "csv";
  std::string output_path;
  SweepConfig config;
  config.radii.clear();

  CLI::App* cmd_compare = app.add_subcommand(
      "compare", "Sweep party counts and report which layout wins");
  cmd_compare->alias("sweep");
  cmd_compare
      ->add_option("--regime", regime_arg,
                   "asymptotic | one-pair-traveling | "
                   "one-pair-per-wirelength | heuristic")
      ->capture_default_str();
  cmd_compare->add_option("--n-min", config.n_min, "smallest party count")
      ->capture_default_str();
  cmd_compare->add_option("--n-max", config.n_max, "largest party count")
      ->capture_default_str();
  cmd_compare->add_option("--radius,-r", config.radii,
                          "circle radius, repeatable (default 1)");
  cmd_compare->add_option("--format", format_arg, "csv | json")
      ->capture_default_str();
  cmd_compare->add_option("--output,-o", output_path,
                          "write to a file instead of stdout");
  cmd_compare->add_option("--p-success", config.heuristic.p_success,
                          "heuristic regime: per-hop success probability")
      ->capture_default_str();
  cmd_compare->add_option("--e-distillable", config.heuristic.e_distillable,
                          "heuristic regime: baseline entanglement")
      ->capture_default_str();
  cmd_compare->add_option("--delta-success", config.heuristic.delta_success,
                          "heuristic regime: payoff above baseline")
      ->capture_default_str();
  cmd_compare->add_option("--delta-fail", config.heuristic.delta_fail,
                          "heuristic regime: payoff below baseline")
      ->capture_default_str();

  std::string figure_arg;
  double figure_radius = 1.0;
  int figure_n_max = 50;
  CLI::App* cmd_figure = app.add_subcommand(
      "figure", "Emit the CSV series behind one named plot");
  cmd_figure
      ->add_option("id", figure_arg,
                   "fig2 | fig3 | classical-wire | heuristic-ad")
      ->required();
  cmd_figure
      ->add_option("--radius,-r", figure_radius,
                   "circle radius (per-hop length for heuristic-ad)")
      ->capture_default_str();
  cmd_figure->add_option("--n-max", figure_n_max, "largest party count")
      ->capture_default_str();
  cmd_figure->add_option("--output,-o", output_path,
                         "write to a file instead of stdout");

  int trials = 1000;
  std::uint64_t seed = 12345;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Cross-check closed forms against the density-matrix oracle");
  cmd_verify->add_option("--trials", trials, "random trials per check")
      ->capture_default_str();
  cmd_verify->add_option("--seed", seed, "random seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_compare)) {
      const auto regime = parse_regime(regime_arg);
      if (!regime) {
        std::cerr << "error: unknown regime '" << regime_arg << "'\n";
        return 2;
      }
      config.regime = *regime;
      if (format_arg == "csv") {
        config.format = OutputFormat::Csv;
      } else if (format_arg == "json") {
        config.format = OutputFormat::Json;
      } else {
        std::cerr << "error: unknown format '" << format_arg << "'\n";
        return 2;
      }
      if (config.radii.empty()) config.radii.push_back(1.0);
      validate_config(config);
      return with_output(output_path,
                         [&](std::ostream& out) { write_compare(config, out); });
    }
    if (app.got_subcommand(cmd_figure)) {
      const auto id = parse_figure_id(figure_arg);
      if (!id) {
        std::cerr << "error: unknown figure id '" << figure_arg << "'\n";
        return 2;
      }
      return with_output(output_path, [&](std::ostream& out) {
        write_figure(*id, figure_radius, figure_n_max, out);
      });
    }
    if (app.got_subcommand(cmd_verify)) {
      if (trials < 1) {
        std::cerr << "error: --trials must be at least 1\n";
        return 2;
      }
      return run_verify(trials, seed, std::cout) == 0 ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace enttopo::cli
