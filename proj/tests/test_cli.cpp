#include "enttopo/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using namespace enttopo;
using namespace enttopo::cli;

namespace {

int run_argv(std::vector<std::string> args) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("regime and figure names round-trip") {
  for (RegimeKind kind :
       {RegimeKind::Asymptotic, RegimeKind::OnePairTraveling,
        RegimeKind::OnePairPerWirelength, RegimeKind::Heuristic}) {
    const auto parsed = parse_regime(regime_name(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK(!parse_regime("ansatz").has_value());
  CHECK(parse_figure_id("fig2") == FigureId::Fig2);
  CHECK(parse_figure_id("fig3") == FigureId::Fig3);
  CHECK(parse_figure_id("classical-wire") == FigureId::ClassicalWire);
  CHECK(parse_figure_id("heuristic-ad") == FigureId::HeuristicAd);
  CHECK(!parse_figure_id("fig4").has_value());
}

TEST_CASE("sweep config validation") {
  SweepConfig config;
  CHECK_NOTHROW(validate_config(config));
  SweepConfig bad = config;
  bad.n_min = 1;
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
  bad = config;
  bad.n_min = 10;
  bad.n_max = 5;
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
  bad = config;
  bad.radii.clear();
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
  bad = config;
  bad.radii = {1.0, -2.0};
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
  bad = config;
  bad.regime = RegimeKind::Heuristic;
  bad.heuristic = {0.9, 0.5, 0.1, 0.5};
  CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
}

TEST_CASE("compare CSV carries header, rows, winners and crossovers") {
  SweepConfig config;
  config.regime = RegimeKind::Asymptotic;
  config.n_min = 2;
  config.n_max = 10;
  config.radii = {1.0};
  std::ostringstream out;
  write_compare(config, out);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 1 + 9 + 1);  // header, N=2..10, crossover note
  CHECK(lines[0] == "radius,n_parties,e_avg_star,e_avg_ring,winner");
  CHECK(lines[1].substr(0, 4) == "1,2,");
  CHECK(lines[1].substr(lines[1].size() - 4) == "star");
  CHECK(lines[5].substr(lines[5].size() - 3) == "tie");   // N = 6
  CHECK(lines[6].substr(lines[6].size() - 4) == "ring");  // N = 7
  CHECK(lines.back() == "# crossover radius=1: 7");
}

TEST_CASE("compare CSV respects n-min and multiple radii") {
  SweepConfig config;
  config.regime = RegimeKind::OnePairTraveling;
  config.n_min = 5;
  config.n_max = 8;
  config.radii = {0.5, 2.0};
  std::ostringstream out;
  write_compare(config, out);
  const auto lines = split_lines(out.str());
  // header + 4 rows per radius + 2 crossover notes
  REQUIRE(lines.size() == 1 + 2 * 4 + 2);
  CHECK(lines[1].substr(0, 6) == "0.5,5,");
  CHECK(lines[5].substr(0, 4) == "2,5,");
  CHECK(lines[9] == "# crossover radius=0.5: 3");
  CHECK(lines[10] == "# crossover radius=2: 3");
}

TEST_CASE("a sweep that never flips reports no crossover") {
  SweepConfig config;
  config.regime = RegimeKind::Asymptotic;
  config.n_max = 5;  // star still ahead everywhere
  std::ostringstream csv;
  write_compare(config, csv);
  CHECK(split_lines(csv.str()).back() == "# crossover radius=1: none in range");

  config.format = OutputFormat::Json;
  std::ostringstream json;
  write_compare(config, json);
  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc["crossovers"][0]["crossover"].is_null());
}

TEST_CASE("compare JSON echoes the config and parses cleanly") {
  SweepConfig config;
  config.regime = RegimeKind::Asymptotic;
  config.n_max = 12;
  config.radii = {1.0, 2.0};
  config.format = OutputFormat::Json;
  std::ostringstream out;
  write_compare(config, out);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["meta"]["command"] == "compare");
  CHECK(doc["meta"]["regime"] == "asymptotic");
  CHECK(doc["meta"]["n_min"] == 2);
  CHECK(doc["meta"]["n_max"] == 12);
  CHECK(doc["meta"]["radii"].size() == 2);
  REQUIRE(doc["records"].size() == 2 * 11);
  const auto& first = doc["records"][0];
  CHECK(first["radius"] == 1.0);
  CHECK(first["n_parties"] == 2);
  CHECK(first["winner"] == "star");
  REQUIRE(doc["crossovers"].size() == 2);
  CHECK(doc["crossovers"][0]["crossover"] == 7);
  // values survive the round trip at full precision
  const double star = first["e_avg_star"].get<double>();
  CHECK(star == doctest::Approx(0.099954408476464904).epsilon(1e-12));
}

TEST_CASE("JSON for the relay model echoes its parameters") {
  SweepConfig config;
  config.regime = RegimeKind::Heuristic;
  config.heuristic = {0.5, 0.5, 0.5, std::exp(-4.0)};
  config.n_max = 6;
  config.format = OutputFormat::Json;
  std::ostringstream out;
  write_compare(config, out);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["meta"]["heuristic"]["p_success"].get<double>() ==
        doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
  CHECK(doc["records"][0]["winner"] == "ring");
}

TEST_CASE("figure streams share one schema; fig2 and fig3 agree byte for byte") {
  for (double radius : {0.5, 1.0, 2.0}) {
    std::ostringstream one, other;
    write_figure(FigureId::Fig2, radius, 50, one);
    write_figure(FigureId::Fig3, radius, 50, other);
    CHECK(one.str() == other.str());
    const auto lines = split_lines(one.str());
    REQUIRE(lines.size() == 1 + 49);
    CHECK(lines[0] == "n_parties,e_avg_ring,e_avg_star");
  }
}

TEST_CASE("classical wire figure lists both totals") {
  std::ostringstream out;
  write_figure(FigureId::ClassicalWire, 1.0, 12, out);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 1 + 11);
  CHECK(lines[0] == "n_parties,total_wire_ring,total_wire_star");
  CHECK(lines[1] == "2,4,2");  // two parties: one diameter out and back vs two spokes
  // twelve chords of the unit circle
  CHECK(lines[11].substr(0, 3) == "12,");
  CHECK(lines[11].find("6.21165708246") != std::string::npos);
}

TEST_CASE("relay figure decays as e^-4nd in the hop count") {
  std::ostringstream out;
  write_figure(FigureId::HeuristicAd, 0.5, 8, out);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 1 + 7);
  // N=2 ring value: one hop, e^-2
  std::istringstream row(lines[1]);
  std::string cell;
  std::getline(row, cell, ',');
  CHECK(cell == "2");
  std::getline(row, cell, ',');
  CHECK(std::stod(cell) == doctest::Approx(std::exp(-2.0)).epsilon(1e-11));
  std::getline(row, cell, ',');
  CHECK(std::stod(cell) == doctest::Approx(std::exp(-4.0)).epsilon(1e-11));
}

TEST_CASE("figure inputs are validated") {
  std::ostringstream out;
  CHECK_THROWS_AS(write_figure(FigureId::Fig2, 0.0, 50, out),
                  std::invalid_argument);
  CHECK_THROWS_AS(write_figure(FigureId::Fig2, 1.0, 1, out),
                  std::invalid_argument);
}

TEST_CASE("write_compare output is identical across repeated runs") {
  SweepConfig config;
  config.regime = RegimeKind::OnePairPerWirelength;
  config.radii = {0.1, 1.0, 10.0};
  config.n_max = 40;
  std::ostringstream a, b;
  write_compare(config, a);
  write_compare(config, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("oracle verification passes and reports every check") {
  std::ostringstream out;
  const int failures = run_verify(60, 987654321u, out);
  CHECK(failures == 0);
  CHECK(out.str().find("6/6 checks passed") != std::string::npos);
  CHECK(out.str().find("FAIL") == std::string::npos);
  CHECK_THROWS_AS(run_verify(0, 1u, out), std::invalid_argument);
}

TEST_CASE("command line: usage errors exit nonzero, valid runs exit zero") {
  const auto tmp = std::filesystem::temp_directory_path() / "enttopo_cli_test";
  std::filesystem::create_directories(tmp);

  CHECK(run_argv({"enttopo"}) == 2);
  CHECK(run_argv({"enttopo", "unknown-command"}) == 2);
  CHECK(run_argv({"enttopo", "compare", "--regime", "bogus", "--output",
                  (tmp / "x.csv").string()}) == 2);
  CHECK(run_argv({"enttopo", "compare", "--n-min", "9", "--n-max", "3",
                  "--output", (tmp / "x.csv").string()}) == 2);
  CHECK(run_argv({"enttopo", "compare", "--radius", "-1", "--output",
                  (tmp / "x.csv").string()}) == 2);
  CHECK(run_argv({"enttopo", "compare", "--format", "yaml", "--output",
                  (tmp / "x.csv").string()}) == 2);
  CHECK(run_argv({"enttopo", "figure", "fig9", "--output",
                  (tmp / "x.csv").string()}) == 2);
  CHECK(run_argv({"enttopo", "figure"}) == 2);
  CHECK(run_argv({"enttopo", "compare", "--output",
                  "/nonexistent-dir/x.csv"}) == 2);

  const auto csv = tmp / "compare.csv";
  CHECK(run_argv({"enttopo", "compare", "--regime", "one-pair-traveling",
                  "--n-max", "10", "--output", csv.string()}) == 0);
  const auto lines = split_lines(slurp(csv));
  CHECK(lines[0] == "radius,n_parties,e_avg_star,e_avg_ring,winner");
  CHECK(lines.back() == "# crossover radius=1: 3");

  // sweep is a straight alias of compare
  const auto csv2 = tmp / "sweep.csv";
  CHECK(run_argv({"enttopo", "sweep", "--regime", "one-pair-traveling",
                  "--n-max", "10", "--output", csv2.string()}) == 0);
  CHECK(slurp(csv2) == slurp(csv));

  const auto fig = tmp / "fig.csv";
  CHECK(run_argv({"enttopo", "figure", "fig2", "--radius", "2", "--n-max",
                  "20", "--output", fig.string()}) == 0);
  CHECK(split_lines(slurp(fig)).size() == 1 + 19);

  std::filesystem::remove_all(tmp);
}
