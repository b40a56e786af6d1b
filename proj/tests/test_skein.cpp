#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "brute_force_oracle.hpp"
#include "clasp2/census.hpp"
#include "clasp2/skein.hpp"

using clasp2::Diagram;
using clasp2::LaurentPoly;

namespace {

const LaurentPoly v = LaurentPoly::v();
const LaurentPoly z = LaurentPoly::z();

oracle::Poly to_oracle(const LaurentPoly& p) {
  oracle::Poly out;
  for (const auto& t : p.terms()) out[{t.exp.v, t.exp.z}] = static_cast<long long>(t.coeff);
  return out;
}

const Diagram& census(const std::string& name) { return clasp2::shipped_census().at(name).diagram; }

oracle::Net to_net(const Diagram& d) {
  std::vector<std::pair<std::array<int, 4>, int>> quads;
  for (const auto& c : d.crossings()) quads.push_back({c.edge, c.sign()});
  return oracle::from_signed(quads, d.free_loops());
}

const char* kPositiveHopf = "PD[X[1,4,2,3],X[3,2,4,1]]";

}  // namespace

TEST(Skein, Unlinks) {
  EXPECT_EQ(clasp2::homfly(Diagram::unknot()), LaurentPoly(1));
  for (int k = 1; k <= 4; ++k) {
    const LaurentPoly delta = (v.pow(-1) * z.pow(-1) - v * z.pow(-1)).pow(static_cast<unsigned>(k - 1));
    EXPECT_EQ(clasp2::homfly(Diagram::unlink(k)), delta);
    EXPECT_EQ(clasp2::p0(Diagram::unlink(k)), (v.pow(-2) - 1).pow(static_cast<unsigned>(k - 1)));
  }
  EXPECT_EQ(clasp2::conway(Diagram::unlink(2)), LaurentPoly());
}

TEST(Skein, Trefoil) {
  const Diagram t = Diagram::parse("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  EXPECT_EQ(clasp2::homfly(t), -v.pow(4) + 2 * v.pow(2) + v.pow(2) * z.pow(2));
  EXPECT_EQ(clasp2::conway(t), 1 + z.pow(2));
  EXPECT_EQ(clasp2::p0(t), 2 * v.pow(2) - v.pow(4));
  EXPECT_EQ(clasp2::homfly(census("3_1")), clasp2::homfly(t));
}

TEST(Skein, FigureEightAndSums) {
  EXPECT_EQ(clasp2::conway(census("4_1")), 1 - z.pow(2));
  const auto a = clasp2::conway_coefficients(census("4_1"));
  EXPECT_EQ(a.first, -1);
  EXPECT_EQ(a.second, 0);
  const Diagram tt = clasp2::connected_sum(census("3_1"), census("3_1"));
  EXPECT_EQ(clasp2::conway(tt), (1 + z.pow(2)).pow(2));
  const auto c = clasp2::conway_coefficients(tt);
  EXPECT_EQ(c.first, 2);
  EXPECT_EQ(c.second, 1);
  EXPECT_EQ(clasp2::conway_coefficients(Diagram::unknot()), std::make_pair(clasp2::Integer(0), clasp2::Integer(0)));
  EXPECT_THROW(clasp2::conway_coefficients(Diagram::unlink(2)), std::invalid_argument);
  EXPECT_EQ(clasp2::homfly(census("4_1").mirror()), clasp2::homfly(census("4_1")));
}

TEST(Skein, HopfLinkP0) {
  const Diagram h = Diagram::parse(kPositiveHopf);
  EXPECT_EQ(clasp2::p0(h), (v.pow(-2) - 1) * v.pow(2));
  EXPECT_EQ(clasp2::conway(h), z);
}

TEST(Skein, SwitchingATrefoilCrossingGivesTheUnknot) {
  const Diagram t = census("3_1");
  for (int k = 0; k < t.crossing_count(); ++k) EXPECT_EQ(clasp2::homfly(t.switch_crossing(k)), LaurentPoly(1));
}

TEST(Skein, AgreesWithBruteForceOracle) {
  int checked = 0;
  for (const auto& e : clasp2::shipped_census().entries()) {
    if (e.diagram.crossing_count() > 9) continue;
    ++checked;
    EXPECT_EQ(to_oracle(clasp2::homfly(e.diagram)), oracle::homfly(e.pd)) << e.name;
    EXPECT_EQ(to_oracle(clasp2::conway(e.diagram)), oracle::conway(e.pd)) << e.name;
    EXPECT_EQ(to_oracle(clasp2::p0(e.diagram)), oracle::p0(e.pd)) << e.name;
  }
  EXPECT_GE(checked, 6);
}

TEST(Skein, AgreesWithOracleOnRandomSmoothings) {
  std::mt19937 rng(2024);
  for (const char* name : {"6_2", "6_3", "7_6", "7_7"}) {
    for (int trial = 0; trial < 6; ++trial) {
      Diagram d = census(name);
      for (int steps = 0; steps < 3 && d.crossing_count() > 0; ++steps) {
        const int k = static_cast<int>(rng() % static_cast<unsigned>(d.crossing_count()));
        d = (rng() % 2) ? d.smooth_crossing(k) : d.switch_crossing(k);
      }
      const std::string pd = d.to_pd_string();
      const oracle::Net net = to_net(d);
      EXPECT_EQ(to_oracle(clasp2::homfly(d)), oracle::evaluate(net, oracle::Kind::homfly)) << pd;
      EXPECT_EQ(to_oracle(clasp2::conway(d)), oracle::evaluate(net, oracle::Kind::conway)) << pd;
      EXPECT_EQ(to_oracle(clasp2::p0(d)), oracle::evaluate(net, oracle::Kind::p0)) << pd;
    }
  }
}

TEST(SkeinProperties, SkeinRelationAtEveryCrossing) {
  for (const auto& e : clasp2::shipped_census().entries()) {
    const Diagram& d = e.diagram;
    for (int k = 0; k < d.crossing_count(); ++k) {
      const Diagram plus = d.sign(k) > 0 ? d : d.switch_crossing(k);
      const Diagram minus = d.sign(k) > 0 ? d.switch_crossing(k) : d;
      const Diagram zero = d.smooth_crossing(k);
      EXPECT_EQ(v.pow(-1) * clasp2::homfly(plus) - v * clasp2::homfly(minus), z * clasp2::homfly(zero))
          << e.name << " crossing " << k;
    }
  }
}

TEST(SkeinProperties, SpecializationsAgree) {
  for (const auto& e : clasp2::shipped_census().entries()) {
    const LaurentPoly h = clasp2::homfly(e.diagram);
    EXPECT_EQ(h.substitute_v(1), clasp2::conway(e.diagram)) << e.name;
    EXPECT_EQ(clasp2::extract_p_i(h, 1, 0), clasp2::p0(e.diagram)) << e.name;
    EXPECT_EQ(clasp2::p0(e.diagram.mirror()), clasp2::p0(e.diagram).invert_v()) << e.name;
    EXPECT_EQ(clasp2::homfly(e.diagram.mirror()), h.mirror_v()) << e.name;
    EXPECT_EQ(clasp2::homfly(e.diagram.simplify()), h) << e.name;
  }
}

TEST(SkeinProperties, ConnectedSumIsMultiplicative) {
  const auto& entries = clasp2::shipped_census().entries();
  for (std::size_t i = 0; i < entries.size() && i < 6; ++i) {
    for (std::size_t j = i; j < entries.size() && j < 6; ++j) {
      const Diagram s = clasp2::connected_sum(entries[i].diagram, entries[j].diagram);
      EXPECT_EQ(clasp2::homfly(s), clasp2::homfly(entries[i].diagram) * clasp2::homfly(entries[j].diagram))
          << entries[i].name << " # " << entries[j].name;
    }
  }
}

TEST(SkeinProperties, SplitUnionFormula) {
  const auto& entries = clasp2::shipped_census().entries();
  for (std::size_t i = 0; i < entries.size() && i < 6; ++i) {
    const Diagram& a = entries[i].diagram;
    const Diagram b = Diagram::parse(kPositiveHopf);
    const Diagram u = clasp2::disjoint_union(a, b);
    EXPECT_EQ(clasp2::p0(u), (v.pow(-2) - 1) * clasp2::p0(a) * clasp2::p0(b)) << entries[i].name;
    EXPECT_EQ(clasp2::conway(u), LaurentPoly()) << entries[i].name;
    const LaurentPoly h = clasp2::homfly(u);
    EXPECT_EQ(clasp2::extract_p_i(h, u.num_components(), 0), clasp2::p0(u));
  }
}

TEST(SkeinEngine, BudgetIsEnforced) {
  clasp2::SkeinEngine engine({.memo_capacity = 0, .node_budget = 5});
  EXPECT_THROW(engine.homfly(census("7_6")), clasp2::SkeinBudgetExceeded);
  EXPECT_EQ(engine.homfly(Diagram::unknot()), LaurentPoly(1));
}

TEST(SkeinEngine, LruCapacityIsRespected) {
  clasp2::SkeinEngine engine({.memo_capacity = 3, .node_budget = 10'000'000});
  const LaurentPoly expected = clasp2::homfly(census("7_7"));
  EXPECT_EQ(engine.homfly(census("7_7")), expected);
  EXPECT_LE(engine.cache_size(), 3u);
  engine.clear_cache();
  EXPECT_EQ(engine.cache_size(), 0u);
}

TEST(SkeinEngine, ConcurrentQueriesAgree) {
  clasp2::SkeinEngine engine;
  std::vector<std::string> names;
  for (const auto& e : clasp2::shipped_census().entries())
    if (e.diagram.crossing_count() <= 11) names.push_back(e.name);
  std::vector<LaurentPoly> serial;
  {
    clasp2::SkeinEngine fresh;
    for (const auto& n : names) serial.push_back(fresh.homfly(census(n)));
  }
  std::vector<std::vector<LaurentPoly>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (const auto& n : names) results[static_cast<std::size_t>(t)].push_back(engine.homfly(census(n)));
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, serial);
}
