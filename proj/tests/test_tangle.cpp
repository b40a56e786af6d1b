#include <map>
#include <random>

#include <boost/rational.hpp>
#include <gtest/gtest.h>

#include "clasp2/census.hpp"
#include "clasp2/clasp.hpp"
#include "clasp2/skein.hpp"
#include "clasp2/tangle.hpp"

using clasp2::Diagram;
using clasp2::ExtendedRational;
using clasp2::LaurentPoly;
using clasp2::MontesinosDesc;
using clasp2::Tangle;

namespace {

const Diagram& census(const std::string& name) { return clasp2::shipped_census().at(name).diagram; }

LaurentPoly homfly_of(const std::string& desc) {
  return clasp2::homfly(clasp2::montesinos_diagram(clasp2::parse_montesinos(desc)));
}

bool same_up_to_mirror(const LaurentPoly& a, const LaurentPoly& b) { return a == b || a == b.mirror_v(); }

}  // namespace

TEST(ExtendedRational, Normalizes) {
  EXPECT_EQ(ExtendedRational(4, -6), ExtendedRational(-2, 3));
  EXPECT_EQ(ExtendedRational(-5, 0), ExtendedRational::infinity());
  EXPECT_EQ(ExtendedRational(0, 7), ExtendedRational(0, 1));
  EXPECT_THROW(ExtendedRational(0, 0), std::invalid_argument);
  EXPECT_EQ(ExtendedRational::parse(" -2/5 "), ExtendedRational(-2, 5));
  EXPECT_EQ(ExtendedRational::parse("inf"), ExtendedRational::infinity());
  EXPECT_EQ(ExtendedRational::parse("3"), ExtendedRational(3, 1));
  EXPECT_THROW(ExtendedRational::parse("2/x"), std::invalid_argument);
  EXPECT_EQ(clasp2::to_string(clasp2::parse_montesinos("-2/3, inf, 1/2")), "K(-2/3,inf,1/2)");
  EXPECT_THROW(clasp2::parse_montesinos("1/2,1/3"), std::invalid_argument);
}

TEST(ContinuedFraction, Examples) {
  EXPECT_EQ(clasp2::continued_fraction({7, 3}), (std::vector<long long>{3, 2}));
  EXPECT_EQ(clasp2::continued_fraction({2, 5}), (std::vector<long long>{2, 2, 0}));
  EXPECT_EQ(clasp2::continued_fraction({5, 1}), (std::vector<long long>{5}));
  EXPECT_EQ(clasp2::continued_fraction({-4, 1}), (std::vector<long long>{-4}));
  EXPECT_THROW(clasp2::continued_fraction(ExtendedRational::infinity()), std::invalid_argument);
}

TEST(ContinuedFraction, RoundTripsOnRandomRationals) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> num(-40, 40);
  std::uniform_int_distribution<long long> den(1, 40);
  for (int i = 0; i < 200; ++i) {
    const ExtendedRational r(num(rng), den(rng));
    const auto a = clasp2::continued_fraction(r);
    // Independent reassembly with exact rationals.
    boost::rational<long long> x(a.front());
    for (std::size_t j = 1; j < a.size(); ++j) x = boost::rational<long long>(a[j]) + 1 / x;
    EXPECT_EQ(x, boost::rational<long long>(r.p(), r.q())) << r.to_string();
    EXPECT_EQ(clasp2::evaluate_continued_fraction(a), r);
    if (r.p() != 0) EXPECT_NE(a.front(), 0);
    for (std::size_t j = 0; j + 1 < a.size(); ++j) EXPECT_GE(std::abs(a[j]), 2) << r.to_string();
  }
}

TEST(RationalTangle, CrossingCounts) {
  EXPECT_EQ(Tangle::rational({0, 1}).crossing_count(), 0);
  EXPECT_EQ(Tangle::rational({1, 2}).crossing_count(), 2);
  EXPECT_EQ(Tangle::rational(ExtendedRational::infinity()).crossing_count(), 0);
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const ExtendedRational r(static_cast<long long>(rng() % 41) - 20, static_cast<long long>(rng() % 20) + 1);
    long long total = 0;
    for (long long a : clasp2::continued_fraction(r)) total += std::abs(a);
    EXPECT_EQ(Tangle::rational(r).crossing_count(), total);
  }
}

TEST(RationalTangle, ClosuresOfSmallTangles) {
  EXPECT_EQ(Tangle::zero().numerator_closure().num_components(), 2);
  EXPECT_EQ(Tangle::zero().denominator_closure().num_components(), 1);
  EXPECT_EQ(Tangle::infinity().numerator_closure().num_components(), 1);
  // Horizontal twists close up to 2-strand torus links.
  const Diagram hopf = Tangle::horizontal(2).numerator_closure();
  EXPECT_EQ(hopf.num_components(), 2);
  EXPECT_EQ(std::abs(hopf.linking_number(0, 1)), 1);
  const Diagram trefoil = Tangle::horizontal(3).numerator_closure();
  EXPECT_EQ(Tangle::vertical(2).numerator_closure().num_components(), 1);
  EXPECT_TRUE(trefoil.is_knot());
  EXPECT_TRUE(same_up_to_mirror(clasp2::homfly(trefoil), clasp2::homfly(census("3_1"))));
  // The numerator closure of Q(p/q) has determinant |p|: check via 2-bridge knots.
  EXPECT_TRUE(same_up_to_mirror(clasp2::homfly(Tangle::rational({5, 2}).numerator_closure()),
                                clasp2::homfly(census("4_1"))));
  EXPECT_TRUE(same_up_to_mirror(clasp2::homfly(Tangle::rational({-5, 2}).numerator_closure()),
                                clasp2::homfly(census("4_1"))));
}

TEST(Montesinos, ConnectedSumIdentities) {
  const Diagram& t = census("3_1");
  const Diagram& f = census("4_1");
  EXPECT_EQ(homfly_of("-2/3,inf,-2/3"), clasp2::homfly(t) * clasp2::homfly(t));
  EXPECT_EQ(homfly_of("-2/3,inf,-2/5"), clasp2::homfly(t) * clasp2::homfly(f));
  EXPECT_EQ(homfly_of("-2/5,inf,-2/5"), clasp2::homfly(f) * clasp2::homfly(f));
}

TEST(Montesinos, TwoBridgeIdentities) {
  const auto h = [](const char* n) { return clasp2::homfly(census(n)); };
  EXPECT_TRUE(same_up_to_mirror(homfly_of("-2/3,2,1/2"), h("6_2")));
  EXPECT_TRUE(same_up_to_mirror(homfly_of("-2/3,-2,1/2"), h("6_3")));
  EXPECT_TRUE(same_up_to_mirror(homfly_of("-2/5,2,1/2"), h("7_7")));
  EXPECT_TRUE(same_up_to_mirror(homfly_of("-2/5,-2,1/2"), h("7_6")));
  // Mirror pairs listed alongside.
  EXPECT_EQ(homfly_of("-1/2,2,2/3"), homfly_of("1/2,-2,-2/3"));
  EXPECT_EQ(homfly_of("-1/2,2,2/3"), homfly_of("-2/3,-2,1/2").mirror_v());
  EXPECT_EQ(homfly_of("-1/2,-2,2/3"), homfly_of("-2/3,2,1/2").mirror_v());
}

TEST(Montesinos, HopfSumPatternIsALink) {
  const Diagram d = clasp2::montesinos_diagram(clasp2::parse_montesinos("-1/2,inf,-1/2"));
  EXPECT_EQ(d.num_components(), 3);
  EXPECT_EQ(d.crossing_count(), 4);
}

TEST(MontesinosEquivalence, Examples) {
  using clasp2::parse_montesinos;
  EXPECT_TRUE(clasp2::montesinos_equivalent(parse_montesinos("1/2,2/3,-2/3"), parse_montesinos("-1/2,2/3,1/3")));
  EXPECT_FALSE(clasp2::montesinos_equivalent(parse_montesinos("1/2,1/3,1/7"), parse_montesinos("1/2,1/3,2/7")));
  EXPECT_THROW(clasp2::montesinos_equivalent(parse_montesinos("1/2,inf,1/3"), parse_montesinos("1/2,1/3,1/3")),
               std::invalid_argument);
}

TEST(MontesinosEquivalence, IsAnEquivalenceRelation) {
  std::mt19937 rng(17);
  const auto random_entry = [&] {
    return ExtendedRational(static_cast<long long>(rng() % 13) - 6, static_cast<long long>(rng() % 5) + 1);
  };
  const auto move = [&](MontesinosDesc m) {
    std::shuffle(m.begin(), m.end(), rng);
    const long long k = static_cast<long long>(rng() % 5) - 2;
    m[0] = ExtendedRational(m[0].p() + k * m[0].q(), m[0].q());
    m[1] = ExtendedRational(m[1].p() - k * m[1].q(), m[1].q());
    return m;
  };
  for (int i = 0; i < 300; ++i) {
    const MontesinosDesc a{random_entry(), random_entry(), random_entry()};
    const MontesinosDesc b = move(a);
    const MontesinosDesc c = move(b);
    const MontesinosDesc d{random_entry(), random_entry(), random_entry()};
    EXPECT_TRUE(clasp2::montesinos_equivalent(a, a));
    EXPECT_TRUE(clasp2::montesinos_equivalent(a, b));
    EXPECT_TRUE(clasp2::montesinos_equivalent(b, a));
    EXPECT_TRUE(clasp2::montesinos_equivalent(a, c));
    EXPECT_EQ(clasp2::montesinos_equivalent(a, d), clasp2::montesinos_equivalent(d, a));
    if (clasp2::montesinos_equivalent(a, d)) EXPECT_TRUE(clasp2::montesinos_equivalent(c, d));
  }
}

TEST(MontesinosEquivalence, EquivalentDescriptionsHaveEqualHomfly) {
  std::mt19937 rng(23);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const auto entry = [&] {
      static const long long dens[] = {2, 3, 5};
      const long long q = dens[rng() % 3];
      return ExtendedRational(static_cast<long long>(rng() % 9) - 4, q);
    };
    MontesinosDesc a{entry(), entry(), entry()};
    if (a[0].q() == 1 || a[1].q() == 1) continue;
    MontesinosDesc b{ExtendedRational(a[1].p() - a[1].q(), a[1].q()), a[2], ExtendedRational(a[0].p() + a[0].q(), a[0].q())};
    const Diagram da = clasp2::montesinos_diagram(a);
    const Diagram db = clasp2::montesinos_diagram(b);
    if (!da.is_knot() || da.crossing_count() > 12 || db.crossing_count() > 12) continue;
    ASSERT_TRUE(clasp2::montesinos_equivalent(a, b));
    EXPECT_EQ(clasp2::homfly(da), clasp2::homfly(db)) << clasp2::to_string(a) << " vs " << clasp2::to_string(b);
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(Catalog, ShapeAndContents) {
  const auto cat = clasp2::theorem1_catalog(1);
  std::map<std::string, int> per_family;
  for (const auto& e : cat) ++per_family[e.family];
  EXPECT_EQ(per_family["i"], 4);
  EXPECT_EQ(per_family["ii"], 4);
  EXPECT_EQ(per_family["iii"], 16);
  EXPECT_EQ(per_family["iv"], 12);
  EXPECT_EQ(clasp2::theorem1_catalog(0).size(), 20u);
  EXPECT_THROW(clasp2::theorem1_catalog(-1), std::invalid_argument);

  const LaurentPoly z = LaurentPoly::z();
  bool found_square = false;
  for (const auto& e : cat) {
    if (!e.diagram) continue;
    if (clasp2::conway(*e.diagram) == 1 + 2 * z.pow(2) + z.pow(4)) found_square = true;
  }
  EXPECT_TRUE(found_square);
}

TEST(Catalog, KnotsHaveGenusTwoFiberedConway) {
  for (const auto& e : clasp2::theorem1_catalog(2)) {
    ASSERT_TRUE(e.diagram.has_value()) << e.name;
    EXPECT_TRUE(e.diagram->is_knot()) << e.name;
    const LaurentPoly c = clasp2::conway(*e.diagram);
    EXPECT_EQ(c.max_z(), 4) << e.name;
    EXPECT_EQ(abs(c.coefficient(0, 4)), 1) << e.name;
    EXPECT_FALSE(clasp2::enumerate_params(static_cast<long long>(c.coefficient(0, 2)),
                                          static_cast<long long>(c.coefficient(0, 4)), clasp2::DiskType::II, 10)
                     .empty())
        << e.name;
  }
}

namespace {

// Pretzel surface with even twist counts t; s[i] != 0 plumbs a Hopf band of
// that sign across band i.
Diagram pretzel_surface(std::array<int, 3> t, std::array<int, 3> s = {0, 0, 0}) {
  clasp2::MorseDiagram m(0);
  m.cup(0).cup(1).cup(3);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < std::abs(t[i]); ++k) m.crossing(2 * i, t[i] > 0);
    if (s[i] != 0) m.tangle(2 * i, Tangle::horizontal(2 * s[i]));
  }
  m.cap(3).cap(1).cap(0);
  return m.closure();
}

std::vector<Diagram> all_orientations(const Diagram& d) {
  std::vector<Diagram> out{d};
  for (int c = 1; c < d.num_components(); ++c) {
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) out.push_back(out[k].reverse_component(c));
  }
  return out;
}

Diagram seifert_model_of_exceptional_link() {
  // Three strands carry (sigma1 sigma2 sigma1)^3: the outer two close up to the
  // (2,3) torus knot around the middle one. A fourth strand encircles them.
  clasp2::MorseDiagram m(4);
  m.braid({1, 2, 1, 1, 2, 1, 1, 2, 1, 3, 2, 1, 1, 2, 3});
  return m.closure().reverse_component(0);
}

}  // namespace

TEST(MorseDiagram, SmallClosures) {
  clasp2::MorseDiagram trefoil(2);
  trefoil.braid({1, 1, 1});
  EXPECT_TRUE(same_up_to_mirror(clasp2::homfly(trefoil.closure()), clasp2::homfly(census("3_1"))));
  clasp2::MorseDiagram hopf(2);
  hopf.braid({1, 1});
  EXPECT_EQ(hopf.closure().num_components(), 2);
  EXPECT_EQ(std::abs(hopf.closure().linking_number(0, 1)), 1);
  clasp2::MorseDiagram band(2);
  band.cap(0).cup(0);
  EXPECT_EQ(clasp2::homfly(band.closure()), LaurentPoly(1));
  EXPECT_EQ(band.closure().crossing_count(), 0);
  clasp2::MorseDiagram open(2);
  open.cap(0);
  EXPECT_THROW(open.closure(), std::logic_error);
  EXPECT_THROW(open.crossing(0, true), std::out_of_range);
  EXPECT_THROW(clasp2::MorseDiagram(1).braid({0}), std::invalid_argument);
}

TEST(MorseDiagram, ComponentsFollowTopPositions) {
  clasp2::MorseDiagram m(3);
  m.braid({1, 1, 2, 2});
  const Diagram d = m.closure();
  ASSERT_EQ(d.num_components(), 3);
  EXPECT_EQ(d.linking_number(0, 1), d.linking_number(1, 2));
  EXPECT_EQ(d.linking_number(0, 2), 0);
}

TEST(PretzelPlumbing, ReproducesTheMontesinosFormula) {
  // A Hopf band across a band with 2m half twists turns 1/(2m) into
  // 1/(2m +- 1/2); plumbings on P(2,2n,-2) must land on the listed families.
  for (int n : {-2, -1, 1, 2}) {
    std::vector<LaurentPoly> expect;
    for (const char* a : {"2/3", "2/5"})
      for (const char* c : {"-2/3", "-2/5"})
        expect.push_back(homfly_of(std::string(a) + ",1/" + std::to_string(2 * n) + "," + c));
    for (int s1 : {1, -1})
      for (int s3 : {1, -1}) {
        const LaurentPoly h = clasp2::homfly(pretzel_surface({2, 2 * n, -2}, {s1, 0, s3}));
        EXPECT_TRUE(std::ranges::any_of(expect, [&](const LaurentPoly& e) { return same_up_to_mirror(h, e); }))
            << n << " " << s1 << " " << s3;
      }
    std::vector<LaurentPoly> expect_mid;
    for (int sign : {1, -1})
      for (const char* c : {"-2/3", "-2/5"})
        expect_mid.push_back(homfly_of("1/2,2/" + std::to_string(4 * n + sign) + "," + c));
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) {
        const LaurentPoly h = clasp2::homfly(pretzel_surface({2, 2 * n, -2}, {0, s2, s3}));
        EXPECT_TRUE(std::ranges::any_of(expect_mid, [&](const LaurentPoly& e) { return same_up_to_mirror(h, e); }))
            << n << " " << s2 << " " << s3;
      }
  }
  // Across both Hopf bands of H+ # H+ = P(-2,0,-2): the connected sums.
  EXPECT_EQ(clasp2::homfly(pretzel_surface({-2, 0, -2}, {1, 0, 1})),
            clasp2::homfly(clasp2::connected_sum(census("3_1"), census("3_1"))));
  EXPECT_EQ(clasp2::homfly(pretzel_surface({-2, 0, -2}, {-1, 0, -1})),
            clasp2::homfly(clasp2::connected_sum(census("4_1"), census("4_1"))));
}

TEST(ExceptionalLink, IsAGenusZeroFiberedCandidate) {
  const Diagram l = clasp2::exceptional_link();
  ASSERT_EQ(l.num_components(), 3);
  EXPECT_EQ(clasp2::conway(l), LaurentPoly::z().pow(2));
  const int a = l.linking_number(0, 1), b = l.linking_number(0, 2), c = l.linking_number(1, 2);
  std::vector<int> abs_lk{std::abs(a), std::abs(b), std::abs(c)};
  std::ranges::sort(abs_lk);
  EXPECT_EQ(abs_lk, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(a * b + a * c + b * c, 1);
}

TEST(ExceptionalLink, MatchesTheSeifertFiberedModel) {
  EXPECT_EQ(clasp2::homfly(clasp2::exceptional_link()), clasp2::homfly(seifert_model_of_exceptional_link()));
}

TEST(ExceptionalLink, DiffersFromTheOtherGenusZeroFiberedLinks) {
  std::vector<Diagram> others{pretzel_surface({2, 0, 2}), pretzel_surface({-2, 0, -2}), pretzel_surface({2, 0, -2})};
  for (int n = -6; n <= 6; ++n) others.push_back(pretzel_surface({2, 2 * n, -2}));
  const LaurentPoly h = clasp2::homfly(clasp2::exceptional_link());
  for (const auto& o : others)
    for (const auto& d : all_orientations(o)) EXPECT_FALSE(same_up_to_mirror(h, clasp2::homfly(d)));
}

TEST(ExceptionalKnots, DataFileMatchesConstruction) {
  int seen = 0;
  for (const auto& e : clasp2::shipped_census().entries()) {
    if (e.name.rfind("Kex_", 0) != 0) continue;
    ++seen;
    ASSERT_EQ(e.name.size(), 7u) << e.name;
    const int shared = e.name[4] - '0';
    const int e1 = e.name[5] == '+' ? 1 : -1;
    const int e2 = e.name[6] == '+' ? 1 : -1;
    EXPECT_EQ(e.eps1, e1) << e.name;
    EXPECT_EQ(e.eps2, e2) << e.name;
    EXPECT_EQ(clasp2::homfly(e.diagram), clasp2::homfly(clasp2::exceptional_knot(shared, e1, e2))) << e.name;
  }
  EXPECT_EQ(seen, 12);
  EXPECT_THROW(clasp2::exceptional_knot(4, 1, 1), std::invalid_argument);
  EXPECT_THROW(clasp2::exceptional_knot(1, 0, 1), std::invalid_argument);
}

TEST(ExceptionalKnots, AreNewGenusTwoFiberedCandidates) {
  std::vector<LaurentPoly> listed;
  for (const auto& e : clasp2::theorem1_catalog(6))
    if (e.family != "iv") listed.push_back(clasp2::homfly(*e.diagram));
  std::vector<LaurentPoly> found;
  for (int i = 1; i <= 3; ++i)
    for (int e1 : {1, -1})
      for (int e2 : {1, -1}) {
        const Diagram k = clasp2::exceptional_knot(i, e1, e2);
        ASSERT_TRUE(k.is_knot());
        const LaurentPoly c = clasp2::conway(k);
        EXPECT_EQ(c.max_z(), 4);
        EXPECT_EQ(abs(c.coefficient(0, 4)), 1);
        const LaurentPoly h = clasp2::homfly(k);
        for (const auto& l : listed) EXPECT_FALSE(same_up_to_mirror(h, l)) << i << e1 << e2;
        for (const auto& f : found) EXPECT_FALSE(same_up_to_mirror(h, f)) << i << e1 << e2;
        found.push_back(h);
      }
}
