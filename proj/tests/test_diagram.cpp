#include <random>

#include <gtest/gtest.h>

#include "clasp2/diagram.hpp"

using clasp2::Diagram;

namespace {

const char* kTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
const char* kFigureEight = "PD[X[8,5,1,6],X[4,1,5,2],X[2,8,3,7],X[6,4,7,3]]";
const char* kHopf = "PD[X[1,3,2,4],X[3,1,4,2]]";
const char* kPositiveHopf = "PD[X[1,4,2,3],X[3,2,4,1]]";

// Shifts every label of a knot diagram by `shift` modulo the edge count.
std::string shifted_knot(const Diagram& d, int shift) {
  std::vector<std::array<int, 4>> quads;
  const int m = d.edge_count();
  for (const auto& c : d.crossings()) {
    std::array<int, 4> q{};
    for (int s = 0; s < 4; ++s) q[static_cast<std::size_t>(s)] = (c.edge[static_cast<std::size_t>(s)] + shift) % m;
    quads.push_back(q);
  }
  return Diagram::from_quadruples(quads).to_pd_string();
}

}  // namespace

TEST(DiagramParse, TrefoilHasThreePositiveCrossings) {
  const Diagram d = Diagram::parse(kTrefoil);
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(d.num_components(), 1);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(d.sign(k), 1);
  EXPECT_EQ(d.writhe(), 3);
  EXPECT_EQ(d.to_pd_string(), kTrefoil);
}

TEST(DiagramParse, WhitespaceInsensitive) {
  EXPECT_EQ(Diagram::parse(" PD[ X[1, 4,2,5],\n X[3,6,4,1] ,X[5,2,6,3] ] "), Diagram::parse(kTrefoil));
}

TEST(DiagramParse, EmptyCodeIsUnknot) {
  const Diagram d = Diagram::parse("PD[]");
  EXPECT_EQ(d.num_components(), 1);
  EXPECT_EQ(d.free_loops(), 1);
  EXPECT_EQ(d.to_pd_string(), "PD[]");
  EXPECT_EQ(Diagram::parse("PD[Loop[2]]").num_components(), 2);
  EXPECT_EQ(Diagram::parse(Diagram::unlink(3).to_pd_string()), Diagram::unlink(3));
}

TEST(DiagramParse, DegenerateKinkIsANegativeOneCrossingUnknot) {
  const Diagram d = Diagram::parse("PD[X[1,1,2,2]]");
  EXPECT_EQ(d.num_components(), 1);
  EXPECT_EQ(d.sign(0), -1);
  EXPECT_EQ(d.simplify(), Diagram::unknot());
}

TEST(DiagramParse, SyntaxErrors) {
  EXPECT_THROW(Diagram::parse("PD[X[1,2,3]]"), clasp2::PdParseError);
  EXPECT_THROW(Diagram::parse("X[1,4,2,5]"), clasp2::PdParseError);
  EXPECT_THROW(Diagram::parse("PD[X[1,4,2,5]"), clasp2::PdParseError);
  EXPECT_THROW(Diagram::parse("PD[X[a,4,2,5]]"), clasp2::PdParseError);
  EXPECT_THROW(Diagram::parse("PD[]x"), clasp2::PdParseError);
}

TEST(DiagramParse, ValidationErrors) {
  EXPECT_THROW(Diagram::parse("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,6]]"), clasp2::DiagramValidationError);
  EXPECT_THROW(Diagram::parse("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,7]]"), clasp2::DiagramValidationError);
  // Labels 1..6 twice each, but the under-strands run 1 -> 3 -> 5.
  EXPECT_THROW(Diagram::parse("PD[X[1,4,3,5],X[3,6,5,1],X[2,4,6,2]]"), clasp2::DiagramValidationError);
  // A component lying over everywhere with two edges has no preferred direction.
  EXPECT_THROW(Diagram::parse("PD[X[1,3,2,4],X[2,4,1,3]]"), clasp2::DiagramValidationError);
}

TEST(DiagramComponents, Counts) {
  EXPECT_EQ(Diagram::parse(kTrefoil).components().size(), 1u);
  const Diagram hopf = Diagram::parse(kHopf);
  EXPECT_EQ(hopf.num_components(), 2);
  EXPECT_EQ(hopf.components()[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(hopf.components()[1], (std::vector<int>{2, 3}));
  const Diagram t = Diagram::parse(kTrefoil);
  EXPECT_EQ(clasp2::connected_sum(t, t).num_components(), 1);
}

TEST(DiagramLinking, HopfLinks) {
  const Diagram pos = Diagram::parse(kPositiveHopf);
  EXPECT_EQ(pos.linking_number(0, 1), 1);
  EXPECT_EQ(pos.linking_number(1, 0), 1);
  EXPECT_EQ(pos.mirror().linking_number(0, 1), -1);
  // The 1..4 Hopf code traces each component as a two-edge cycle and is negative.
  EXPECT_EQ(Diagram::parse(kHopf).linking_number(0, 1), -1);
  EXPECT_EQ(Diagram::unlink(2).linking_number(0, 1), 0);
  EXPECT_THROW((void)pos.linking_number(0, 0), std::invalid_argument);
  EXPECT_THROW((void)pos.linking_number(0, 2), std::out_of_range);
}

TEST(DiagramSwitch, InvolutionAndSign) {
  const Diagram t = Diagram::parse(kTrefoil);
  for (int k = 0; k < 3; ++k) {
    const Diagram s = t.switch_crossing(k);
    EXPECT_EQ(s.sign(k), -1);
    EXPECT_EQ(s.switch_crossing(k).canonical_code(), t.canonical_code());
  }
  const Diagram hopf = Diagram::parse(kPositiveHopf).switch_crossing(0);
  EXPECT_EQ(hopf.linking_number(0, 1), 0);
  EXPECT_EQ(hopf.switch_crossing(1).linking_number(0, 1), -1);
  EXPECT_THROW((void)t.switch_crossing(3), std::out_of_range);
  EXPECT_EQ(t.mirror().mirror(), t);
}

TEST(DiagramSwitch, SwitchedTrefoilSimplifiesToUnknot) {
  const Diagram t = Diagram::parse(kTrefoil);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(t.switch_crossing(k).simplify(), Diagram::unknot());
}

TEST(DiagramSmooth, ComponentCountChangesByOne) {
  const Diagram hopf = Diagram::parse(kPositiveHopf);
  const Diagram s = hopf.smooth_crossing(0);
  EXPECT_EQ(s.num_components(), 1);
  EXPECT_EQ(s.crossing_count(), 1);
  EXPECT_EQ(s.simplify(), Diagram::unknot());

  const Diagram t = Diagram::parse(kTrefoil);
  const Diagram h = t.smooth_crossing(0);
  EXPECT_EQ(h.num_components(), 2);
  EXPECT_EQ(h.crossing_count(), 2);
  EXPECT_EQ(h.linking_number(0, 1), 1);

  for (const char* code : {kTrefoil, kFigureEight, kHopf, kPositiveHopf}) {
    const Diagram d = Diagram::parse(code);
    for (int k = 0; k < d.crossing_count(); ++k)
      EXPECT_EQ(std::abs(d.smooth_crossing(k).num_components() - d.num_components()), 1);
  }
}

TEST(DiagramSum, ConnectedSumOfTrefoils) {
  const Diagram t = Diagram::parse(kTrefoil);
  const Diagram s = clasp2::connected_sum(t, t);
  EXPECT_EQ(s.crossing_count(), 6);
  EXPECT_EQ(s.writhe(), 6);
  EXPECT_EQ(s.seifert_circle_count(), 3);
  EXPECT_THROW(clasp2::connected_sum(Diagram::parse(kHopf), t), std::invalid_argument);
  EXPECT_EQ(clasp2::connected_sum(Diagram::unknot(), t), t);
}

TEST(DiagramCode, RelabelingInvariance) {
  const Diagram t = Diagram::parse(kTrefoil);
  for (int shift = 0; shift < 6; ++shift)
    EXPECT_EQ(Diagram::parse(shifted_knot(t, shift)).canonical_code(), t.canonical_code());
  const Diagram f = Diagram::parse(kFigureEight);
  EXPECT_NE(f.canonical_code(), t.canonical_code());
  EXPECT_NE(t.mirror().canonical_code(), t.canonical_code());
  EXPECT_EQ(Diagram::unlink(2).canonical_code(), Diagram::parse("PD[Loop[1],Loop[1]]").canonical_code());
}

TEST(DiagramCode, ComponentReorderingInvariance) {
  // The same positive Hopf link with its components listed in the other order.
  const Diagram a = Diagram::parse(kPositiveHopf);
  const Diagram b = Diagram::parse("PD[X[3,2,4,1],X[1,4,2,3]]");
  const Diagram c = Diagram::parse("PD[X[3,2,4,1],X[1,4,2,3],Loop[1]]");
  EXPECT_EQ(a.canonical_code(), b.canonical_code());
  EXPECT_NE(a.canonical_code(), c.canonical_code());
}

TEST(DiagramSimplify, ReidemeisterMoves) {
  EXPECT_EQ(Diagram::parse("PD[X[1,2,2,1]]").simplify(), Diagram::unknot());
  // Two loops overlapping in a bigon.
  const Diagram r2 = Diagram::parse(kPositiveHopf).switch_crossing(0);
  EXPECT_EQ(r2.num_components(), 2);
  EXPECT_EQ(r2.simplify(), Diagram::unlink(2));
  const Diagram t = Diagram::parse(kTrefoil);
  EXPECT_EQ(t.simplify(), t);
  const Diagram f = Diagram::parse(kFigureEight);
  EXPECT_EQ(f.simplify(), f);
}

TEST(DiagramSublink, DropsComponents) {
  const Diagram hopf = Diagram::parse(kPositiveHopf);
  EXPECT_EQ(hopf.sublink({0}), Diagram::unknot());
  EXPECT_EQ(hopf.sublink({0, 1}), hopf);
  const Diagram split = Diagram::parse("PD[X[1,4,2,3],X[3,2,4,1],Loop[1]]");
  EXPECT_EQ(split.sublink({0, 1}).num_components(), 2);
  EXPECT_EQ(split.sublink({2}), Diagram::unknot());
}

TEST(DiagramProperties, LinkingNumbersOfRandomSwitches) {
  std::mt19937 rng(99);
  const Diagram base = Diagram::parse(kTrefoil).smooth_crossing(1);
  for (int trial = 0; trial < 20; ++trial) {
    Diagram d = base;
    for (int k = 0; k < d.crossing_count(); ++k)
      if (rng() % 2) d = d.switch_crossing(k);
    EXPECT_EQ(d.linking_number(0, 1), d.linking_number(1, 0));
    EXPECT_EQ(d.mirror().linking_number(0, 1), -d.linking_number(0, 1));
    int twice = 0;
    for (const auto& c : d.crossings())
      if (d.component_of_edge(c.edge[0]) != d.component_of_edge(c.edge[static_cast<std::size_t>(c.over_in_slot())]))
        twice += c.sign();
    EXPECT_EQ(twice % 2, 0);
  }
}
