#pragma once

// Named fixtures: small lattices and hypergraphs used by the CLI and tests.

#include <string>
#include <utility>
#include <vector>

#include "oml/error.hpp"
#include "oml/hypergraph.hpp"
#include "oml/lattice.hpp"

namespace oml {

/// 2^n with atoms named by `atom_names`. Element index = bitmask of atoms;
/// labels concatenate atom names, with "0" and "1" for the bounds.
inline FiniteOrtholattice boolean_algebra(const std::vector<std::string>& atom_names) {
  const std::size_t n = atom_names.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> relation, ortho;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    std::string label;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) label += atom_names[i];
    labels.push_back(mask == 0 ? "0" : mask == full ? "1" : label);
    for (std::size_t i = 0; i < n; ++i)
      if (!(mask >> i & 1u)) relation.emplace_back(mask, mask | (1u << i));
    if (mask <= (full & ~mask)) ortho.emplace_back(mask, full & ~mask);
  }
  return FiniteOrtholattice::from_relation(full + 1, relation, ortho, std::move(labels));
}

/// MOn: n four-element blocks {0, x, x', 1} glued at the bounds.
inline FiniteOrtholattice horizontal_sum(const std::vector<std::string>& names) {
  std::vector<std::string> labels{"0"};
  for (const auto& name : names) {
    labels.push_back(name);
    labels.push_back(name + "'");
  }
  labels.push_back("1");
  const auto top = static_cast<Element>(labels.size() - 1);
  std::vector<std::pair<Element, Element>> covers, ortho{{0, top}};
  for (Element x = 1; x < top; ++x) {
    covers.emplace_back(0, x);
    covers.emplace_back(x, top);
  }
  for (Element x = 1; x < top; x += 2) ortho.emplace_back(x, x + 1);
  return build_from_covers(covers, ortho, std::move(labels));
}

/// The benzene ring O6: chains 0 < a < b < 1 and 0 < b' < a' < 1.
inline FiniteOrtholattice benzene() {
  return build_from_covers({{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}}, {{0, 5}, {1, 4}, {2, 3}},
                           {"0", "a", "b", "b'", "a'", "1"});
}

inline ContextHypergraph two_blocks_sharing_an_atom() {
  return ContextHypergraph{5, {{0, 1, 2}, {2, 3, 4}}, {"a", "b", "c", "d", "e"}};
}

/// Eighteen rays in R^4 forming nine orthogonal bases, each ray in exactly two.
inline ContextHypergraph cabello18() {
  ContextHypergraph H;
  H.atom_count = 18;
  for (int i = 1; i <= 18; ++i) H.labels.push_back("v" + std::to_string(i));
  const std::vector<std::vector<Atom>> bases{{1, 2, 9, 16},  {1, 6, 11, 14}, {3, 8, 10, 16},
                                             {5, 10, 11, 18}, {2, 6, 12, 13}, {4, 8, 12, 18},
                                             {3, 9, 15, 17}, {5, 7, 14, 15}, {4, 7, 13, 17}};
  for (const auto& basis : bases) {
    std::vector<Atom> block;
    for (Atom v : basis) block.push_back(v - 1);
    H.blocks.push_back(std::move(block));
  }
  return H;
}

inline const std::vector<std::string>& lattice_fixture_names() {
  static const std::vector<std::string> names{"b2", "b4", "b8", "b16", "mo2", "mo3", "o6", "mo2xb2", "g2shared"};
  return names;
}

inline const std::vector<std::string>& hypergraph_fixture_names() {
  static const std::vector<std::string> names{"cab18", "g2shared"};
  return names;
}

inline FiniteOrtholattice catalog_lattice(const std::string& name) {
  if (name == "b2") return boolean_algebra({"a"});
  if (name == "b4") return boolean_algebra({"a", "b"});
  if (name == "b8") return boolean_algebra({"a", "b", "c"});
  if (name == "b16") return boolean_algebra({"a", "b", "c", "d"});
  if (name == "mo2") return horizontal_sum({"a", "b"});
  if (name == "mo3") return horizontal_sum({"a", "b", "c"});
  if (name == "o6") return benzene();
  if (name == "mo2xb2") return product(horizontal_sum({"a", "b"}), boolean_algebra({"a"}));
  if (name == "g2shared") return paste_greechie(two_blocks_sharing_an_atom());
  throw Error(ErrorKind::UnknownFixture, "no lattice fixture named '" + name + "'");
}

inline ContextHypergraph catalog_hypergraph(const std::string& name) {
  if (name == "cab18") return cabello18();
  if (name == "g2shared") return two_blocks_sharing_an_atom();
  throw Error(ErrorKind::UnknownFixture, "no hypergraph fixture named '" + name + "'");
}

}  // namespace oml
