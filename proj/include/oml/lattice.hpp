#pragma once

// Finite bounded ortholattices stored as dense tables, plus the order-theoretic
// checks and constructions used by the rest of the toolkit.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oml/error.hpp"

namespace oml {

using Element = std::uint32_t;

/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

inline bool contains(const ElementSet& set, Element x) {
  return std::binary_search(set.begin(), set.end(), x);
}

inline void normalize(ElementSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

namespace detail {

/// Square boolean matrix with 64-bit packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }

  void or_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }

  /// Warshall closure: afterwards test(i, j) holds iff j is reachable from i.
  void transitive_closure() {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (test(i, k)) or_row_into(k, i);
  }

 private:
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

/// First violation of a law, reported as the lexicographically least (x, y).
/// Unary laws are reported with y == x.
struct LawViolation {
  std::string law;
  Element x = 0;
  Element y = 0;

  bool operator==(const LawViolation&) const = default;
};

using LawCheck = std::optional<LawViolation>;

/// A bounded lattice with an involution, all operations tabulated.
///
/// Instances are immutable once built. Construction verifies that every pair
/// has a unique meet and join, that bounds exist and differ, and that the
/// supplied pairing is an involution. Ortholattice and orthomodular laws are
/// checked separately; the result of the orthomodular check is cached.
class FiniteOrtholattice {
 public:
  /// Builds from a reflexive-or-not order relation given as `leq(x, y)` pairs
  /// that will be closed reflexively and transitively.
  static FiniteOrtholattice from_relation(std::size_t n,
                                          const std::vector<std::pair<Element, Element>>& relation,
                                          const std::vector<std::pair<Element, Element>>& ortho_pairs,
                                          std::vector<std::string> labels);

  std::size_t size() const { return n_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element x, Element y) const { return leq_.test(x, y); }
  bool lt(Element x, Element y) const { return x != y && leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  Element join(Element x, Element y) const { return join_[x * n_ + y]; }
  Element ortho(Element x) const { return ortho_[x]; }

  /// x ⊥ y, i.e. x ≤ ¬y.
  bool orthogonal(Element x, Element y) const { return leq(x, ortho(y)); }

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Element at(const std::string& name) const {
    auto found = find(name);
    if (!found) throw Error(ErrorKind::InvalidArgument, "unknown element '" + name + "'");
    return *found;
  }

  Element meet_all(const ElementSet& xs) const {
    Element acc = top_;
    for (Element x : xs) acc = meet(acc, x);
    return acc;
  }
  Element join_all(const ElementSet& xs) const {
    Element acc = bottom_;
    for (Element x : xs) acc = join(acc, x);
    return acc;
  }

  ElementSet all() const {
    ElementSet out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<Element>(i);
    return out;
  }

  /// Cover pairs (x, y): x < y with nothing strictly between. Sorted.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Ortho pairs (x, ¬x) with x ≤ ¬x by index, sorted.
  std::vector<std::pair<Element, Element>> ortho_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < n_; ++x)
      if (x <= ortho_[x]) out.emplace_back(x, ortho_[x]);
    return out;
  }

  bool is_orthomodular() const { return orthomodular_; }

  std::string describe(const ElementSet& xs) const {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ", ";
      out += labels_[xs[i]];
    }
    return out + "}";
  }

 private:
  FiniteOrtholattice() = default;

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
  detail::BitMatrix leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> ortho_;
  Element bottom_ = 0;
  Element top_ = 0;
  bool orthomodular_ = false;
};

// ---------------------------------------------------------------------------
// Law checks

inline LawCheck check_ortholattice(const FiniteOrtholattice& L) {
  const auto n = static_cast<Element>(L.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y == x) {
        if (L.ortho(L.ortho(x)) != x) return LawViolation{"involution", x, x};
        if (L.meet(x, L.ortho(x)) != L.bottom()) return LawViolation{"noncontradiction", x, x};
      }
      if (L.ortho(L.join(x, y)) != L.meet(L.ortho(x), L.ortho(y)))
        return LawViolation{"de-morgan", x, y};
    }
  }
  return std::nullopt;
}

/// x ∨ (¬x ∧ (x ∨ y)) = x ∨ y for every pair.
inline LawCheck check_orthomodular(const FiniteOrtholattice& L) {
  const auto n = static_cast<Element>(L.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = L.join(x, y);
      if (L.join(x, L.meet(L.ortho(x), xy)) != xy) return LawViolation{"orthomodular", x, y};
    }
  return std::nullopt;
}

inline FiniteOrtholattice FiniteOrtholattice::from_relation(
    std::size_t n, const std::vector<std::pair<Element, Element>>& relation,
    const std::vector<std::pair<Element, Element>>& ortho_pairs, std::vector<std::string> labels) {
  if (n < 2) throw Error(ErrorKind::Degenerate, "a bounded lattice needs 0 != 1 (at least two elements)");
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  }
  if (labels.size() != n) throw Error(ErrorKind::InvalidArgument, "label count does not match element count");

  FiniteOrtholattice L;
  L.n_ = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!L.index_.emplace(labels[i], static_cast<Element>(i)).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate label '" + labels[i] + "'");
  }
  L.labels_ = std::move(labels);

  L.leq_ = detail::BitMatrix(n);
  for (std::size_t i = 0; i < n; ++i) L.leq_.set(i, i);
  for (auto [x, y] : relation) {
    if (x >= n || y >= n) throw Error(ErrorKind::InvalidArgument, "relation references element out of range");
    L.leq_.set(x, y);
  }
  L.leq_.transitive_closure();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (L.leq_.test(x, y) && L.leq_.test(y, x))
        throw Error(ErrorKind::NotALattice,
                    "order has a cycle through '" + L.labels_[x] + "' and '" + L.labels_[y] + "'");

  std::optional<Element> bottom, top;
  for (Element x = 0; x < n; ++x) {
    bool is_bottom = true, is_top = true;
    for (Element y = 0; y < n; ++y) {
      is_bottom = is_bottom && L.leq_.test(x, y);
      is_top = is_top && L.leq_.test(y, x);
    }
    if (is_bottom) bottom = x;
    if (is_top) top = x;
  }
  if (!bottom || !top) throw Error(ErrorKind::NoBounds, !bottom ? "no least element" : "no greatest element");
  L.bottom_ = *bottom;
  L.top_ = *top;

  // Down-set sizes let us pick the glb candidate in one pass: the greatest
  // common lower bound, if it exists, has the largest down-set.
  std::vector<std::size_t> down(n, 0), up(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (L.leq_.test(y, x)) {
        ++down[x];
        ++up[y];
      }

  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      std::optional<Element> glb, lub;
      for (Element z = 0; z < n; ++z) {
        if (L.leq_.test(z, x) && L.leq_.test(z, y) && (!glb || down[z] > down[*glb])) glb = z;
        if (L.leq_.test(x, z) && L.leq_.test(y, z) && (!lub || up[z] > up[*lub])) lub = z;
      }
      for (Element z = 0; z < n; ++z) {
        if (L.leq_.test(z, x) && L.leq_.test(z, y) && !L.leq_.test(z, *glb))
          throw Error(ErrorKind::NotALattice,
                      "no unique meet for '" + L.labels_[x] + "' and '" + L.labels_[y] + "'");
        if (L.leq_.test(x, z) && L.leq_.test(y, z) && !L.leq_.test(*lub, z))
          throw Error(ErrorKind::NotALattice,
                      "no unique join for '" + L.labels_[x] + "' and '" + L.labels_[y] + "'");
      }
      L.meet_[x * n + y] = L.meet_[y * n + x] = *glb;
      L.join_[x * n + y] = L.join_[y * n + x] = *lub;
    }
  }

  constexpr Element unset = ~Element{0};
  L.ortho_.assign(n, unset);
  for (auto [x, y] : ortho_pairs) {
    if (x >= n || y >= n) throw Error(ErrorKind::BadInvolution, "ortho pair references element out of range");
    const bool fresh = L.ortho_[x] == unset && L.ortho_[y] == unset;
    const bool repeat = L.ortho_[x] == y && L.ortho_[y] == x;
    if (!fresh && !repeat)
      throw Error(ErrorKind::BadInvolution,
                  "'" + L.labels_[x] + "' / '" + L.labels_[y] + "' conflicts with an earlier ortho pair");
    L.ortho_[x] = y;
    L.ortho_[y] = x;
  }
  for (Element x = 0; x < n; ++x)
    if (L.ortho_[x] == unset)
      throw Error(ErrorKind::BadInvolution, "element '" + L.labels_[x] + "' has no orthocomplement");

  L.orthomodular_ = !check_ortholattice(L) && !check_orthomodular(L);
  return L;
}

inline std::vector<std::pair<Element, Element>> FiniteOrtholattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) {
      if (!lt(x, y)) continue;
      bool gap = false;
      for (Element z = 0; z < n_ && !gap; ++z) gap = lt(x, z) && lt(z, y);
      if (!gap) out.emplace_back(x, y);
    }
  return out;
}

/// Builds a lattice from its Hasse diagram. Indices follow `labels`.
inline FiniteOrtholattice build_from_covers(const std::vector<std::pair<Element, Element>>& cover_pairs,
                                            const std::vector<std::pair<Element, Element>>& ortho_pairs,
                                            std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  return FiniteOrtholattice::from_relation(n, cover_pairs, ortho_pairs, std::move(labels));
}

// ---------------------------------------------------------------------------
// Atoms, complements, distributive triples

inline ElementSet atoms(const FiniteOrtholattice& L) {
  ElementSet out;
  for (auto [x, y] : L.covers())
    if (x == L.bottom()) out.push_back(y);
  normalize(out);
  return out;
}

inline ElementSet coatoms(const FiniteOrtholattice& L) {
  ElementSet out;
  for (auto [x, y] : L.covers())
    if (y == L.top()) out.push_back(x);
  normalize(out);
  return out;
}

/// Every nonzero x is the join of the atoms below it. Witness is (x, x).
inline LawCheck check_atomistic(const FiniteOrtholattice& L) {
  const ElementSet as = atoms(L);
  for (Element x = 0; x < L.size(); ++x) {
    if (x == L.bottom()) continue;
    Element acc = L.bottom();
    for (Element a : as)
      if (L.leq(a, x)) acc = L.join(acc, a);
    if (acc != x) return LawViolation{"atomistic", x, x};
  }
  return std::nullopt;
}

inline ElementSet complements(const FiniteOrtholattice& L, Element a) {
  ElementSet out;
  for (Element c = 0; c < L.size(); ++c)
    if (L.meet(a, c) == L.bottom() && L.join(a, c) == L.top()) out.push_back(c);
  return out;
}

/// (a, b, c)D: (a ∨ b) ∧ c = (a ∧ c) ∨ (b ∧ c).
inline bool holds_d(const FiniteOrtholattice& L, Element a, Element b, Element c) {
  return L.meet(L.join(a, b), c) == L.join(L.meet(a, c), L.meet(b, c));
}

/// (a, b, c)D*: (a ∧ b) ∨ c = (a ∨ c) ∧ (b ∨ c).
inline bool holds_dstar(const FiniteOrtholattice& L, Element a, Element b, Element c) {
  return L.join(L.meet(a, b), c) == L.meet(L.join(a, c), L.join(b, c));
}

inline bool holds_t(const FiniteOrtholattice& L, Element a, Element b, Element c) {
  const std::array<std::array<Element, 3>, 6> perms{{
      {a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}};
  for (const auto& p : perms)
    if (!holds_d(L, p[0], p[1], p[2]) || !holds_dstar(L, p[0], p[1], p[2])) return false;
  return true;
}

struct TripleReport {
  std::array<Element, 3> triple{};
  bool holds_D = false;
  bool holds_Dstar = false;
  bool holds_T = false;
};

inline TripleReport distributive_triples(const FiniteOrtholattice& L, Element a, Element b, Element c) {
  return TripleReport{{a, b, c}, holds_d(L, a, b, c), holds_dstar(L, a, b, c), holds_t(L, a, b, c)};
}

inline bool is_central(const FiniteOrtholattice& L, Element z) {
  if (complements(L, z).empty()) return false;
  const auto n = static_cast<Element>(L.size());
  // Looping over ordered (a, b) covers every permutation once z is placed in
  // each of the three positions.
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!holds_d(L, a, b, z) || !holds_d(L, a, z, b) || !holds_d(L, z, a, b)) return false;
      if (!holds_dstar(L, a, b, z) || !holds_dstar(L, a, z, b) || !holds_dstar(L, z, a, b)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Sublattices

/// Least subset containing seed ∪ {0, 1} closed under ∧, ∨ and ¬.
inline ElementSet generated_sublattice(const FiniteOrtholattice& L, const ElementSet& seed) {
  std::vector<char> in(L.size(), 0);
  ElementSet members;
  auto add = [&](Element x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(L.bottom());
  add(L.top());
  for (Element x : seed) add(x);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element x = members[i];
    add(L.ortho(x));
    for (std::size_t j = 0; j <= i; ++j) {
      add(L.meet(x, members[j]));
      add(L.join(x, members[j]));
    }
  }
  normalize(members);
  return members;
}

inline bool is_closed_subset(const FiniteOrtholattice& L, const ElementSet& set) {
  if (!contains(set, L.bottom()) || !contains(set, L.top())) return false;
  for (Element x : set) {
    if (!contains(set, L.ortho(x))) return false;
    for (Element y : set)
      if (!contains(set, L.meet(x, y)) || !contains(set, L.join(x, y))) return false;
  }
  return true;
}

/// First triple of `set` (index order) on which the distributive law fails.
inline std::optional<std::array<Element, 3>> distributivity_witness(const FiniteOrtholattice& L,
                                                                    const ElementSet& set) {
  for (Element a : set)
    for (Element b : set)
      for (Element c : set)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return std::array{a, b, c};
  return std::nullopt;
}

/// Closed under the host operations and distributive, hence Boolean with the
/// host orthocomplement (x ∧ ¬x = 0 is inherited from the host).
inline bool is_boolean_sublattice(const FiniteOrtholattice& L, const ElementSet& set) {
  return is_closed_subset(L, set) && !distributivity_witness(L, set);
}

inline ElementSet center(const FiniteOrtholattice& L) {
  ElementSet out;
  for (Element z = 0; z < L.size(); ++z)
    if (is_central(L, z)) out.push_back(z);
  return out;
}

/// Componentwise product; element (i, j) has index i * |L2| + j and label "(x,y)".
inline FiniteOrtholattice product(const FiniteOrtholattice& L1, const FiniteOrtholattice& L2) {
  const std::size_t n1 = L1.size(), n2 = L2.size();
  auto idx = [n2](Element i, Element j) { return static_cast<Element>(i * n2 + j); };
  std::vector<std::string> labels;
  labels.reserve(n1 * n2);
  for (Element i = 0; i < n1; ++i)
    for (Element j = 0; j < n2; ++j) labels.push_back("(" + L1.label(i) + "," + L2.label(j) + ")");

  std::vector<std::pair<Element, Element>> relation;
  for (auto [x, y] : L1.covers())
    for (Element j = 0; j < n2; ++j) relation.emplace_back(idx(x, j), idx(y, j));
  for (auto [x, y] : L2.covers())
    for (Element i = 0; i < n1; ++i) relation.emplace_back(idx(i, x), idx(i, y));

  std::vector<std::pair<Element, Element>> ortho;
  for (Element i = 0; i < n1; ++i)
    for (Element j = 0; j < n2; ++j) {
      const Element a = idx(i, j), b = idx(L1.ortho(i), L2.ortho(j));
      if (a <= b) ortho.emplace_back(a, b);
    }
  return FiniteOrtholattice::from_relation(n1 * n2, relation, ortho, std::move(labels));
}

}  // namespace oml
