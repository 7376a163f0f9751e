#include <gtest/gtest.h>

#include "oml/boolean.hpp"
#include "oml/catalog.hpp"
#include "oracles.hpp"

using namespace oml;

namespace {

Block whole(const FiniteOrtholattice& L) { return Block{L.all()}; }

std::vector<ElementSet> members_of(const std::vector<Block>& blocks) {
  std::vector<ElementSet> out;
  for (const auto& b : blocks) out.push_back(b.members);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Blocks, MaximalBlocksMatchSubsetOracle) {
  for (const auto& name : lattice_fixture_names()) {
    const auto L = catalog_lattice(name);
    if (!L.is_orthomodular()) continue;
    EXPECT_EQ(members_of(maximal_blocks(L)), oracle::maximal_boolean_sublattices(L)) << name;
  }
}

TEST(Blocks, AllBooleanSublatticesMatchSubsetOracle) {
  for (const auto& name : lattice_fixture_names()) {
    const auto L = catalog_lattice(name);
    if (!L.is_orthomodular()) continue;
    EXPECT_EQ(members_of(all_boolean_sublattices(L)), oracle::boolean_sublattices(L)) << name;
  }
}

TEST(Blocks, KnownCounts) {
  EXPECT_EQ(maximal_blocks(catalog_lattice("mo2")).size(), 2u);
  EXPECT_EQ(maximal_blocks(catalog_lattice("mo3")).size(), 3u);
  EXPECT_EQ(maximal_blocks(catalog_lattice("b16")).size(), 1u);
  EXPECT_EQ(all_boolean_sublattices(catalog_lattice("b8")).size(), 5u);
  EXPECT_EQ(all_boolean_sublattices(catalog_lattice("mo2")).size(), 3u);
}

TEST(Blocks, NonOrthomodularInputIsRejected) {
  try {
    maximal_blocks(catalog_lattice("o6"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOrthomodular);
  }
}

TEST(Filters, GeneratedFilterIsUpsetOfMeet) {
  const auto L = catalog_lattice("b8");
  const auto B = whole(L);
  const auto F = generated_filter(L, B, {L.at("ab"), L.at("ac")});
  EXPECT_EQ(F.members, (ElementSet{L.at("a"), L.at("ab"), L.at("ac"), L.top()}));
  EXPECT_TRUE(F.proper);
  EXPECT_TRUE(F.maximal);
  EXPECT_EQ(generated_filter(L, B, {}).members, (ElementSet{L.top()}));
  const auto bad = generated_filter(L, B, {L.at("a"), L.at("b")});
  EXPECT_FALSE(bad.proper);
  EXPECT_EQ(bad.members.size(), L.size());
}

TEST(Filters, GeneratedFilterIsSmallestFilterOracle) {
  for (const char* name : {"b4", "b8", "b16"}) {
    const auto L = catalog_lattice(name);
    const auto B = whole(L);
    const auto all = oracle::filters(L, B.members);
    for (Element x = 0; x < L.size(); ++x)
      for (Element y = 0; y < L.size(); ++y) {
        const auto F = generated_filter(L, B, {x, y});
        ASSERT_TRUE(is_filter(L, B, F.members));
        for (const auto& G : all)
          if (contains(G, x) && contains(G, y)) {
            ASSERT_TRUE(std::includes(G.begin(), G.end(), F.members.begin(), F.members.end()));
          }
      }
  }
}

TEST(Filters, IsFilterAgreesWithOracleEnumeration) {
  const auto L = catalog_lattice("b8");
  const auto B = whole(L);
  const auto all = oracle::filters(L, B.members);
  std::size_t accepted = 0;
  for (std::uint32_t mask = 0; mask < 256; ++mask) {
    ElementSet S;
    for (Element x = 0; x < 8; ++x)
      if (mask >> x & 1u) S.push_back(x);
    const bool expected = std::find(all.begin(), all.end(), S) != all.end();
    EXPECT_EQ(is_filter(L, B, S), expected);
    accepted += expected;
  }
  EXPECT_EQ(accepted, 8u);  // principal filters of 2^3
}

TEST(Filters, MaximalFiltersMatchOracle) {
  for (const auto& name : lattice_fixture_names()) {
    const auto L = catalog_lattice(name);
    if (!L.is_orthomodular()) continue;
    for (const auto& B : maximal_blocks(L)) {
      std::vector<ElementSet> got;
      for (const auto& F : maximal_filters(L, B)) got.push_back(F.members);
      auto expected = oracle::maximal_filters(L, B.members);
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(got, expected) << name;
    }
  }
}

TEST(Quotient, MaximalFilterGivesTwoClasses) {
  const auto L = catalog_lattice("b16");
  const auto B = whole(L);
  for (const auto& F : maximal_filters(L, B)) {
    const auto q = quotient(L, B, F);
    EXPECT_EQ(q.classes.size(), 2u);
    EXPECT_NE(q.zero, q.one);
    EXPECT_EQ(q.ortho[q.zero], q.one);
    for (Element x : B.members) EXPECT_EQ(static_cast<std::size_t>(q.class_of.at(x)) == q.one, contains(F.members, x));
  }
}

TEST(Quotient, NonMaximalFilterGivesLargerImage) {
  const auto L = catalog_lattice("b8");
  const auto B = whole(L);
  const auto F = generated_filter(L, B, {L.at("ab")});
  EXPECT_FALSE(F.maximal);
  EXPECT_EQ(quotient(L, B, F).classes.size(), 4u);
  EXPECT_EQ(quotient(L, B, generated_filter(L, B, {})).classes.size(), 8u);
}

TEST(Quotient, ImproperFilterIsRejected) {
  const auto L = catalog_lattice("b4");
  const auto B = whole(L);
  const auto F = generated_filter(L, B, {L.at("a"), L.at("b")});
  try {
    quotient(L, B, F);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ImproperFilter);
  }
}

TEST(Quotient, EveryProperFilterOfSmallBlocksIsBooleanImage) {
  for (const char* name : {"b4", "b8", "b16"}) {
    const auto L = catalog_lattice(name);
    const auto B = whole(L);
    for (const auto& members : oracle::filters(L, B.members)) {
      if (!oracle::proper(L, members)) continue;
      const auto F = generated_filter(L, B, members);
      ASSERT_EQ(F.members, members);
      const auto q = quotient(L, B, F);
      EXPECT_EQ(q.classes.size() == 2, F.maximal) << name;
    }
  }
}

TEST(Separation, FourElementAlgebraAB) {
  const auto L = catalog_lattice("b4");
  const auto B = whole(L);
  const auto F = separating_maximal_filter(L, B, L.at("a"), L.at("b"));
  EXPECT_EQ(F.members, (ElementSet{L.at("a"), L.top()}));
  EXPECT_TRUE(F.maximal);
}

TEST(Separation, TopOverBottomAlwaysSeparates) {
  const auto L = catalog_lattice("b8");
  const auto F = separating_maximal_filter(L, whole(L), L.top(), L.bottom());
  EXPECT_TRUE(F.maximal);
  EXPECT_EQ(F, separating_maximal_filter(L, whole(L), L.top(), L.bottom()));
}

TEST(Separation, ComparablePairIsRejected) {
  const auto L = catalog_lattice("b4");
  try {
    separating_maximal_filter(L, whole(L), L.at("a"), L.top());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSeparable);
  }
}

TEST(Separation, ExhaustiveOverAllBlocksOfSmallFixtures) {
  for (const auto& name : lattice_fixture_names()) {
    const auto L = catalog_lattice(name);
    if (!L.is_orthomodular() || L.size() > 16) continue;
    for (const auto& B : maximal_blocks(L))
      for (Element x : B.members)
        for (Element y : B.members) {
          if (L.leq(x, y)) continue;
          const auto F = separating_maximal_filter(L, B, x, y);
          ASSERT_TRUE(contains(F.members, x));
          ASSERT_FALSE(contains(F.members, y));
          ASSERT_EQ(quotient(L, B, F).classes.size(), 2u);
        }
  }
}

TEST(Valuations, BijectiveWithAtoms) {
  for (const auto& name : lattice_fixture_names()) {
    const auto L = catalog_lattice(name);
    if (!L.is_orthomodular()) continue;
    for (const auto& B : all_boolean_sublattices(L)) {
      const auto vs = enumerate_two_valuations(L, B);
      const auto as = block_atoms(L, B);
      ASSERT_EQ(vs.size(), as.size()) << name;
      EXPECT_EQ(as, oracle::atoms_of(L, B.members));
      for (std::size_t i = 0; i < vs.size(); ++i) {
        EXPECT_TRUE(is_two_valued_homomorphism(L, vs[i]));
        for (Element x : B.members) EXPECT_EQ(vs[i].value(x), L.leq(as[i], x));
      }
    }
  }
}

TEST(Valuations, FilterAndValuationAgree) {
  const auto L = catalog_lattice("b8");
  const auto B = whole(L);
  for (const auto& F : maximal_filters(L, B)) {
    const auto v = valuation_from_filter(B, F);
    EXPECT_TRUE(is_two_valued_homomorphism(L, v));
    EXPECT_EQ(v.ones(), F.members);
  }
}

TEST(Valuations, ValueOutsideDomainThrows) {
  const auto L = catalog_lattice("mo2");
  const auto block = maximal_blocks(L)[0];
  const auto v = valuation_from_atom(L, block, block_atoms(L, block)[0]);
  Element outside = 0;
  while (block.contains(outside)) ++outside;
  EXPECT_FALSE(v.defined(outside));
  try {
    (void)v.value(outside);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainMismatch);
  }
}
