#include <gtest/gtest.h>

#include "oml/catalog.hpp"
#include "oml/lattice.hpp"
#include "oracles.hpp"

using namespace oml;

namespace {

FiniteOrtholattice diamond_lattice(bool self_paired) {
  std::vector<std::pair<Element, Element>> orthos{{0, 3}};
  if (self_paired) {
    orthos.emplace_back(1, 1);
    orthos.emplace_back(2, 2);
  } else {
    orthos.emplace_back(1, 2);
  }
  return build_from_covers({{0, 1}, {0, 2}, {1, 3}, {2, 3}}, orthos, {"0", "a", "b", "1"});
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Construction, DiamondWithOrthoPairIsTheFourElementBooleanAlgebra) {
  const auto L = diamond_lattice(false);
  EXPECT_EQ(L.size(), 4u);
  EXPECT_EQ(L.meet(1, 2), L.bottom());
  EXPECT_EQ(L.join(1, 2), L.top());
  EXPECT_EQ(L.ortho(1), 2u);
  EXPECT_FALSE(check_ortholattice(L));
  EXPECT_TRUE(is_boolean_sublattice(L, L.all()));
}

TEST(Construction, BenzeneRingBuilds) {
  const auto L = benzene();
  EXPECT_EQ(L.size(), 6u);
  EXPECT_FALSE(check_ortholattice(L));
}

TEST(Construction, ThreeChainHasNoInvolution) {
  EXPECT_EQ(kind_of([] { build_from_covers({{0, 1}, {1, 2}}, {{0, 2}}, {"0", "m", "1"}); }),
            ErrorKind::BadInvolution);
}

TEST(Construction, RejectsNonLatticesAndDegenerateInput) {
  // Two incomparable upper bounds of {a, b} below the top: no unique join.
  EXPECT_EQ(kind_of([] {
              build_from_covers({{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}},
                                {{0, 5}, {1, 4}, {2, 3}}, {"0", "a", "b", "b'", "a'", "1"});
            }),
            ErrorKind::NotALattice);
  EXPECT_EQ(kind_of([] { build_from_covers({{0, 1}, {1, 0}}, {{0, 1}}, {"p", "q"}); }), ErrorKind::NotALattice);
  EXPECT_EQ(kind_of([] { FiniteOrtholattice::from_relation(1, {}, {{0, 0}}, {}); }), ErrorKind::Degenerate);
  EXPECT_EQ(kind_of([] { build_from_covers({{0, 1}, {0, 2}}, {{0, 1}}, {"0", "p", "q"}); }), ErrorKind::NoBounds);
}

TEST(Construction, MeetAndJoinMatchOrderOracleOnEveryFixture) {
  for (const auto& name : lattice_fixture_names()) {
    const auto L = catalog_lattice(name);
    for (Element x = 0; x < L.size(); ++x)
      for (Element y = 0; y < L.size(); ++y) {
        ASSERT_EQ(L.meet(x, y), oracle::m(L, x, y)) << name;
        ASSERT_EQ(L.join(x, y), oracle::j(L, x, y)) << name;
      }
  }
}

TEST(Ortholattice, BooleanAlgebraAndBenzenePass) {
  EXPECT_FALSE(check_ortholattice(catalog_lattice("b8")));
  EXPECT_FALSE(check_ortholattice(catalog_lattice("o6")));
}

TEST(Ortholattice, SelfPairedDiamondGivesWitnessAA) {
  const auto L = diamond_lattice(true);
  const auto w = check_ortholattice(L);
  ASSERT_TRUE(w);
  EXPECT_EQ(L.label(w->x), "a");
  EXPECT_EQ(L.label(w->y), "a");
}

TEST(Orthomodular, Mo2AndBooleanAlgebrasPass) {
  EXPECT_FALSE(check_orthomodular(catalog_lattice("mo2")));
  for (const char* name : {"b2", "b4", "b8", "b16"}) EXPECT_FALSE(check_orthomodular(catalog_lattice(name))) << name;
}

TEST(Orthomodular, BenzeneFailsAtAB) {
  const auto L = catalog_lattice("o6");
  const auto w = check_orthomodular(L);
  ASSERT_TRUE(w);
  EXPECT_EQ(L.label(w->x), "a");
  EXPECT_EQ(L.label(w->y), "b");
  const Element a = L.at("a"), b = L.at("b");
  EXPECT_EQ(L.join(a, L.meet(L.ortho(a), L.join(a, b))), a);
  EXPECT_EQ(L.join(a, b), b);
  EXPECT_FALSE(L.is_orthomodular());
}

TEST(Orthomodular, WitnessMatchesOracleOnEveryFixture) {
  for (const auto& name : lattice_fixture_names()) {
    const auto L = catalog_lattice(name);
    const auto w = check_orthomodular(L);
    const auto o = oracle::orthomodular_witness(L);
    ASSERT_EQ(w.has_value(), o.has_value()) << name;
    if (w) {
      EXPECT_EQ(std::pair(w->x, w->y), *o) << name;
    }
  }
}

TEST(Structure, AtomsCoatomsAtomistic) {
  const auto L = catalog_lattice("mo2");
  EXPECT_EQ(atoms(L), (ElementSet{1, 2, 3, 4}));
  EXPECT_EQ(coatoms(L), (ElementSet{1, 2, 3, 4}));
  EXPECT_FALSE(check_atomistic(L));
  EXPECT_EQ(atoms(catalog_lattice("b8")), (ElementSet{1, 2, 4}));
}

TEST(Structure, ComplementsOfAtomInMo2) {
  const auto L = catalog_lattice("mo2");
  ElementSet expected{L.at("a'"), L.at("b"), L.at("b'")};
  normalize(expected);
  EXPECT_EQ(complements(L, L.at("a")), expected);
}

TEST(Structure, DistributiveTriples) {
  const auto B = catalog_lattice("b8");
  for (Element x = 0; x < B.size(); ++x)
    for (Element y = 0; y < B.size(); ++y)
      for (Element z = 0; z < B.size(); ++z) ASSERT_TRUE(holds_t(B, x, y, z));

  const auto L = catalog_lattice("mo2");
  const Element a = L.at("a"), na = L.at("a'"), b = L.at("b");
  EXPECT_EQ(L.meet(L.join(a, na), b), b);
  EXPECT_EQ(L.join(L.meet(a, b), L.meet(na, b)), L.bottom());
  EXPECT_FALSE(holds_d(L, a, na, b));
  EXPECT_FALSE(distributive_triples(L, a, na, b).holds_T);
  for (Element x = 0; x < L.size(); ++x)
    for (Element y = 0; y < L.size(); ++y) EXPECT_TRUE(holds_d(L, x, y, L.bottom()));
}

TEST(Center, MatchesCommutationOracle) {
  for (const auto& name : lattice_fixture_names()) {
    const auto L = catalog_lattice(name);
    if (!L.is_orthomodular()) continue;
    EXPECT_EQ(center(L), oracle::center(L)) << name;
    EXPECT_TRUE(is_boolean_sublattice(L, center(L))) << name;
  }
}

TEST(Center, KnownCenters) {
  EXPECT_EQ(center(catalog_lattice("mo2")), (ElementSet{0, 5}));
  EXPECT_EQ(center(catalog_lattice("b8")).size(), 8u);
  const auto P = catalog_lattice("mo2xb2");
  ElementSet expected{P.at("(0,0)"), P.at("(0,1)"), P.at("(1,0)"), P.at("(1,1)")};
  normalize(expected);
  EXPECT_EQ(center(P), expected);
}

TEST(Sublattices, GeneratedSublatticeIsClosed) {
  const auto L = catalog_lattice("mo3");
  const auto S = generated_sublattice(L, {L.at("a"), L.at("b")});
  EXPECT_TRUE(is_closed_subset(L, S));
  EXPECT_EQ(S.size(), 6u);
  EXPECT_FALSE(is_boolean_sublattice(L, S));
  EXPECT_TRUE(distributivity_witness(L, S).has_value());
}

TEST(Product, SizeAndLabels) {
  const auto P = catalog_lattice("mo2xb2");
  EXPECT_EQ(P.size(), 12u);
  EXPECT_TRUE(P.is_orthomodular());
  EXPECT_TRUE(P.find("(a,0)").has_value());
  EXPECT_EQ(P.ortho(P.at("(a,0)")), P.at("(a',1)"));
}

TEST(Labels, LookupAndDescribe) {
  const auto L = catalog_lattice("mo2");
  EXPECT_EQ(L.label(L.at("b'")), "b'");
  EXPECT_FALSE(L.find("zz").has_value());
  EXPECT_EQ(kind_of([&] { L.at("zz"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(L.describe({0, 1}), "{0, a}");
}
