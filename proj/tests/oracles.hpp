#pragma once

// Independent brute-force reference implementations. They read only the
// order relation and the involution of a lattice, never its meet/join tables
// or the library's search routines.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "oml/hypergraph.hpp"
#include "oml/lattice.hpp"

namespace oracle {

using oml::Element;
using oml::ElementSet;
using oml::FiniteOrtholattice;

/// Greatest lower bound by scanning the order.
inline std::optional<Element> glb(const FiniteOrtholattice& L, Element x, Element y) {
  std::vector<Element> lower;
  for (Element z = 0; z < L.size(); ++z)
    if (L.leq(z, x) && L.leq(z, y)) lower.push_back(z);
  for (Element z : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](Element w) { return L.leq(w, z); })) return z;
  return std::nullopt;
}

inline std::optional<Element> lub(const FiniteOrtholattice& L, Element x, Element y) {
  std::vector<Element> upper;
  for (Element z = 0; z < L.size(); ++z)
    if (L.leq(x, z) && L.leq(y, z)) upper.push_back(z);
  for (Element z : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](Element w) { return L.leq(z, w); })) return z;
  return std::nullopt;
}

inline Element m(const FiniteOrtholattice& L, Element x, Element y) { return *glb(L, x, y); }
inline Element j(const FiniteOrtholattice& L, Element x, Element y) { return *lub(L, x, y); }

/// First (x, y) in index order breaking the orthomodular law.
inline std::optional<std::pair<Element, Element>> orthomodular_witness(const FiniteOrtholattice& L) {
  for (Element x = 0; x < L.size(); ++x)
    for (Element y = 0; y < L.size(); ++y) {
      const Element xy = j(L, x, y);
      if (j(L, x, m(L, L.ortho(x), xy)) != xy) return std::pair{x, y};
    }
  return std::nullopt;
}

/// Closed under ∧, ∨, ¬, contains the bounds, and distributive.
inline bool is_boolean_subset(const FiniteOrtholattice& L, const ElementSet& S) {
  auto in = [&](Element x) { return std::binary_search(S.begin(), S.end(), x); };
  if (!in(L.bottom()) || !in(L.top())) return false;
  for (Element x : S) {
    if (!in(L.ortho(x))) return false;
    for (Element y : S)
      if (!in(m(L, x, y)) || !in(j(L, x, y))) return false;
  }
  for (Element x : S)
    for (Element y : S)
      for (Element z : S)
        if (m(L, x, j(L, y, z)) != j(L, m(L, x, y), m(L, x, z))) return false;
  return true;
}

/// Every Boolean sublattice, by enumerating subsets that contain both bounds.
inline std::vector<ElementSet> boolean_sublattices(const FiniteOrtholattice& L) {
  std::vector<Element> inner;
  for (Element x = 0; x < L.size(); ++x)
    if (x != L.bottom() && x != L.top()) inner.push_back(x);
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << inner.size()); ++mask) {
    ElementSet S{L.bottom(), L.top()};
    for (std::size_t i = 0; i < inner.size(); ++i)
      if (mask >> i & 1u) S.push_back(inner[i]);
    std::sort(S.begin(), S.end());
    if (is_boolean_subset(L, S)) out.push_back(S);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ElementSet> maximal_boolean_sublattices(const FiniteOrtholattice& L) {
  const auto all = boolean_sublattices(L);
  std::vector<ElementSet> out;
  for (const auto& S : all) {
    bool maximal = true;
    for (const auto& T : all)
      if (T.size() > S.size() && std::includes(T.begin(), T.end(), S.begin(), S.end())) maximal = false;
    if (maximal) out.push_back(S);
  }
  return out;
}

/// z commutes with every x: x = (x ∧ z) ∨ (x ∧ ¬z). Valid on orthomodular lattices.
inline ElementSet center(const FiniteOrtholattice& L) {
  ElementSet out;
  for (Element z = 0; z < L.size(); ++z) {
    bool central = true;
    for (Element x = 0; x < L.size() && central; ++x)
      central = x == j(L, m(L, x, z), m(L, x, L.ortho(z)));
    if (central) out.push_back(z);
  }
  return out;
}

/// Least central element above a, found by scanning.
inline Element diamond(const FiniteOrtholattice& L, const ElementSet& z, Element a) {
  for (Element c : z) {
    if (!L.leq(a, c)) continue;
    if (std::all_of(z.begin(), z.end(), [&](Element d) { return !L.leq(a, d) || L.leq(c, d); })) return c;
  }
  return L.top();
}

/// Minimal nonzero members of a Boolean subset.
inline ElementSet atoms_of(const FiniteOrtholattice& L, const ElementSet& S) {
  ElementSet out;
  for (Element x : S) {
    if (x == L.bottom()) continue;
    if (std::none_of(S.begin(), S.end(), [&](Element y) { return y != L.bottom() && y != x && L.leq(y, x); }))
      out.push_back(x);
  }
  return out;
}

/// All filters of a Boolean subset of at most 16 elements.
inline std::vector<ElementSet> filters(const FiniteOrtholattice& L, const ElementSet& B) {
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << B.size()); ++mask) {
    ElementSet F;
    for (std::size_t i = 0; i < B.size(); ++i)
      if (mask >> i & 1u) F.push_back(B[i]);
    if (!std::binary_search(F.begin(), F.end(), L.top())) continue;
    bool ok = true;
    for (Element x : F) {
      for (Element y : B)
        if (L.leq(x, y) && !std::binary_search(F.begin(), F.end(), y)) ok = false;
      for (Element y : F)
        if (!std::binary_search(F.begin(), F.end(), m(L, x, y))) ok = false;
    }
    if (ok) out.push_back(F);
  }
  return out;
}

inline bool proper(const FiniteOrtholattice& L, const ElementSet& F) {
  return !std::binary_search(F.begin(), F.end(), L.bottom());
}

/// Proper filters not strictly contained in any other proper filter.
inline std::vector<ElementSet> maximal_filters(const FiniteOrtholattice& L, const ElementSet& B) {
  const auto all = filters(L, B);
  std::vector<ElementSet> out;
  for (const auto& F : all) {
    if (!proper(L, F)) continue;
    bool maximal = true;
    for (const auto& G : all)
      if (proper(L, G) && G.size() > F.size() && std::includes(G.begin(), G.end(), F.begin(), F.end()))
        maximal = false;
    if (maximal) out.push_back(F);
  }
  return out;
}

/// Global valuations counted over the full product of block atoms, with
/// agreement checked on every element of every pairwise intersection.
inline std::uint64_t count_global_valuations(const FiniteOrtholattice& L) {
  const auto blocks = maximal_boolean_sublattices(L);
  std::vector<ElementSet> choice;
  for (const auto& B : blocks) choice.push_back(atoms_of(L, B));
  std::vector<std::size_t> idx(blocks.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < blocks.size() && ok; ++a)
      for (std::size_t b = a + 1; b < blocks.size() && ok; ++b)
        for (Element x : blocks[a])
          if (std::binary_search(blocks[b].begin(), blocks[b].end(), x) &&
              L.leq(choice[a][idx[a]], x) != L.leq(choice[b][idx[b]], x))
            ok = false;
    if (ok) ++count;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choice[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return count;
}

/// Exactly-one assignments by enumerating every subset of atoms.
inline std::uint64_t count_assignments(const oml::ContextHypergraph& H) {
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << H.atom_count); ++mask) {
    bool ok = true;
    for (const auto& b : H.blocks) {
      int on = 0;
      for (auto a : b) on += mask >> a & 1u;
      if (on != 1) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

/// Two blocks of 3 to 6 atoms sharing zero or one atom, at most 12 atoms.
inline oml::ContextHypergraph random_two_block(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(3, 6), coin(0, 1);
  const int s1 = size(rng), s2 = size(rng), shared = coin(rng);
  oml::ContextHypergraph H;
  H.atom_count = static_cast<std::size_t>(s1 + s2 - shared);
  std::vector<oml::Atom> perm(H.atom_count);
  for (oml::Atom a = 0; a < perm.size(); ++a) perm[a] = a;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<oml::Atom> b1(perm.begin(), perm.begin() + s1);
  std::vector<oml::Atom> b2(perm.begin() + s1 - shared, perm.end());
  std::sort(b1.begin(), b1.end());
  std::sort(b2.begin(), b2.end());
  H.blocks = {b1, b2};
  std::sort(H.blocks.begin(), H.blocks.end());
  return H;
}

}  // namespace oracle
