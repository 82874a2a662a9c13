#include "enttopo/scenarios.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace enttopo;

TEST_CASE("winner classification honours the tie tolerance") {
  CHECK(classify_winner(0.5, 0.5) == Winner::Tie);
  CHECK(classify_winner(0.5, 0.5 + 5e-10) == Winner::Tie);
  CHECK(classify_winner(0.5, 0.5 + 2e-9) == Winner::Ring);
  CHECK(classify_winner(0.7, 0.2) == Winner::Star);
  CHECK(classify_winner(0.2, 0.7, 0.6) == Winner::Tie);
  CHECK_THROWS_AS(classify_winner(0.5, 0.5, -1.0), std::invalid_argument);
}

TEST_CASE("regime factories carry their kind") {
  CHECK(ResourceRegime::asymptotic().kind == RegimeKind::Asymptotic);
  CHECK(ResourceRegime::one_pair_traveling().kind ==
        RegimeKind::OnePairTraveling);
  CHECK(ResourceRegime::one_pair_per_wirelength().kind ==
        RegimeKind::OnePairPerWirelength);
  CHECK(ResourceRegime::heuristic_model({0.5, 0.5, 0.5, 0.5}).kind ==
        RegimeKind::Heuristic);
  CHECK_THROWS_AS(ResourceRegime::asymptotic_with(nullptr),
                  std::invalid_argument);
  CHECK_THROWS_AS(ResourceRegime::heuristic_model({0.9, 0.5, 0.1, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("pair entanglement: unlimited pairs ignore the hop count") {
  const ResourceRegime regime = ResourceRegime::asymptotic();
  const double reference = pair_entanglement(regime, 1.0, 2);
  CHECK(reference == doctest::Approx(0.099954408476464904).epsilon(1e-12));
  CHECK(pair_entanglement(regime, 1.0, 1) == reference);
  CHECK(pair_entanglement(regime, 1.0, 17) == reference);

  const ResourceRegime synthetic = ResourceRegime::asymptotic_with(
      [](double d) { return std::exp(-d); });
  CHECK(pair_entanglement(synthetic, 0.25, 5) ==
        doctest::Approx(std::exp(-0.25)).epsilon(1e-15));
}

TEST_CASE("pair entanglement: single travelling pair decays with hops") {
  const ResourceRegime regime = ResourceRegime::one_pair_traveling();
  CHECK(pair_entanglement(regime, 1.0, 2) ==
        doctest::Approx(0.013252569960343692).epsilon(1e-12));
  double prev = 1.0;
  for (int hops = 1; hops <= 20; ++hops) {
    const double e = pair_entanglement(regime, 0.5, hops);
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("pair entanglement: per-wire pairs match the travelling pair") {
  const ResourceRegime traveling = ResourceRegime::one_pair_traveling();
  const ResourceRegime per_wire = ResourceRegime::one_pair_per_wirelength();
  for (double wire : {0.1, 0.5, 1.0, 2.0}) {
    for (int hops = 1; hops <= 24; ++hops) {
      const double a = pair_entanglement(traveling, wire, hops);
      const double b = pair_entanglement(per_wire, wire, hops);
      CHECK(std::fabs(a - b) < 1e-12);
    }
  }
}

TEST_CASE("pair entanglement: relay model delegates to the heuristic") {
  const HeuristicParams params{0.5, 0.2, 0.3, 0.9};
  const ResourceRegime regime = ResourceRegime::heuristic_model(params);
  CHECK(pair_entanglement(regime, 123.0, 3) ==
        heuristic_chain(params, 3));
  CHECK(pair_entanglement(regime, 0.001, 3) ==
        heuristic_chain(params, 3));
}

TEST_CASE("pair entanglement rejects bad routes") {
  const ResourceRegime regime = ResourceRegime::asymptotic();
  CHECK_THROWS_AS(pair_entanglement(regime, 0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(pair_entanglement(regime, -1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(pair_entanglement(regime, 1.0, 0), std::invalid_argument);
}

TEST_CASE("layout averages: frozen single-pair values on the unit circle") {
  const ResourceRegime regime = ResourceRegime::one_pair_traveling();
  CHECK(avg_entanglement_star(regime, 6, 1.0) ==
        doctest::Approx(0.013252569960343692).epsilon(1e-12));
  CHECK(avg_entanglement_ring(regime, 6, 1.0) ==
        doctest::Approx(0.045640547605764827).epsilon(1e-12));
  CHECK(avg_entanglement_ring(regime, 5, 1.0) ==
        doctest::Approx(0.038203252957129612).epsilon(1e-12));
  // star average never depends on N
  for (int n = 2; n <= 30; ++n) {
    CHECK(avg_entanglement_star(regime, n, 1.0) ==
          avg_entanglement_star(regime, 2, 1.0));
  }
  CHECK_THROWS_AS(avg_entanglement_star(regime, 1, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(avg_entanglement_ring(regime, 6, 0.0),
                  std::invalid_argument);
}

TEST_CASE("comparison sweep: unlimited pairs cross over at seven parties") {
  for (double radius : {0.5, 1.0, 2.0, 5.0}) {
    const ComparisonReport report =
        compare(ResourceRegime::asymptotic(), radius, 50);
    REQUIRE(report.records.size() == 49);
    for (const auto& rec : report.records) {
      CHECK(rec.winner == classify_winner(rec.e_avg_star, rec.e_avg_ring));
      if (rec.n_parties <= 5) CHECK(rec.winner == Winner::Star);
      if (rec.n_parties == 6) CHECK(rec.winner == Winner::Tie);
      if (rec.n_parties >= 7) CHECK(rec.winner == Winner::Ring);
    }
    REQUIRE(report.crossover.has_value());
    CHECK(*report.crossover == 7);
  }
}

TEST_CASE("comparison sweep: a single pair favours the ring immediately") {
  const ComparisonReport report =
      compare(ResourceRegime::one_pair_traveling(), 1.0, 50);
  CHECK(report.records.front().winner == Winner::Tie);  // N = 2
  for (const auto& rec : report.records) {
    if (rec.n_parties >= 3) {
      CHECK(rec.e_avg_ring > rec.e_avg_star);
      CHECK(rec.winner == Winner::Ring);
    }
  }
  REQUIRE(report.crossover.has_value());
  CHECK(*report.crossover == 3);
}

TEST_CASE("comparison sweep is deterministic") {
  const ComparisonReport a =
      compare(ResourceRegime::one_pair_per_wirelength(), 2.0, 30);
  const ComparisonReport b =
      compare(ResourceRegime::one_pair_per_wirelength(), 2.0, 30);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].e_avg_star == b.records[i].e_avg_star);
    CHECK(a.records[i].e_avg_ring == b.records[i].e_avg_ring);
    CHECK(a.records[i].winner == b.records[i].winner);
  }
  CHECK(a.crossover == b.crossover);
}

TEST_CASE("comparison sweep rejects bad inputs") {
  CHECK_THROWS_AS(compare(ResourceRegime::asymptotic(), 1.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(compare(ResourceRegime::asymptotic(), 0.0, 10),
                  std::invalid_argument);
}
