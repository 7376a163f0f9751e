#pragma once

// Boolean sublattices (blocks), filters, quotients and two-valued
// homomorphisms. All functions treat a block as a Boolean algebra whose
// operations are the host lattice's operations restricted to its members.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oml/error.hpp"
#include "oml/lattice.hpp"

namespace oml {

/// A Boolean sublattice of a host lattice, given by its members.
struct Block {
  ElementSet members;

  bool contains(Element x) const { return oml::contains(members, x); }
  std::size_t size() const { return members.size(); }
  bool operator==(const Block&) const = default;
  auto operator<=>(const Block&) const = default;
};

/// Minimal nonzero members of a Boolean sublattice.
inline ElementSet block_atoms(const FiniteOrtholattice& L, const Block& B) {
  ElementSet out;
  for (Element x : B.members) {
    if (x == L.bottom()) continue;
    bool minimal = true;
    for (Element y : B.members)
      if (y != L.bottom() && L.lt(y, x)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(x);
  }
  return out;
}

inline void require_orthomodular(const FiniteOrtholattice& L) {
  if (!L.is_orthomodular()) {
    std::string why = "lattice fails the orthomodular law";
    if (auto v = check_ortholattice(L)) {
      why = "lattice fails " + v->law + " at (" + L.label(v->x) + ", " + L.label(v->y) + ")";
    } else if (auto w = check_orthomodular(L)) {
      why += " at (" + L.label(w->x) + ", " + L.label(w->y) + ")";
    }
    throw Error(ErrorKind::NotOrthomodular, why);
  }
}

namespace detail {

/// Every join of a subset of pairwise orthogonal elements.
inline ElementSet joins_of_subsets(const FiniteOrtholattice& L, const ElementSet& parts) {
  ElementSet out{L.bottom()};
  for (Element p : parts) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(L.join(out[i], p));
  }
  normalize(out);
  return out;
}

}  // namespace detail

/// Maximal Boolean sublattices of an orthomodular lattice, sorted.
///
/// In a finite OML the atoms of a maximal block are atoms of the host and
/// form a maximal pairwise-orthogonal set, so blocks are read off the maximal
/// cliques of the atom orthogonality graph.
inline std::vector<Block> maximal_blocks(const FiniteOrtholattice& L) {
  require_orthomodular(L);
  const ElementSet as = atoms(L);
  const std::size_t k = as.size();
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) adj[i][j] = i != j && L.orthogonal(as[i], as[j]);

  std::vector<Block> blocks;
  // Bron–Kerbosch with pivoting over atom positions.
  std::function<void(std::vector<std::size_t>&, std::vector<std::size_t>, std::vector<std::size_t>)> expand =
      [&](std::vector<std::size_t>& clique, std::vector<std::size_t> cand, std::vector<std::size_t> excl) {
        if (cand.empty() && excl.empty()) {
          ElementSet parts;
          for (auto i : clique) parts.push_back(as[i]);
          blocks.push_back(Block{detail::joins_of_subsets(L, parts)});
          return;
        }
        std::size_t pivot = !cand.empty() ? cand.front() : excl.front();
        std::size_t best = 0;
        for (auto u : cand) {
          std::size_t deg = 0;
          for (auto v : cand) deg += adj[u][v];
          if (deg > best) best = deg, pivot = u;
        }
        const auto snapshot = cand;
        for (auto v : snapshot) {
          if (adj[pivot][v]) continue;
          std::vector<std::size_t> nc, nx;
          for (auto u : cand)
            if (adj[v][u]) nc.push_back(u);
          for (auto u : excl)
            if (adj[v][u]) nx.push_back(u);
          clique.push_back(v);
          expand(clique, nc, nx);
          clique.pop_back();
          cand.erase(std::find(cand.begin(), cand.end(), v));
          excl.push_back(v);
        }
      };
  std::vector<std::size_t> clique, cand(k);
  for (std::size_t i = 0; i < k; ++i) cand[i] = i;
  expand(clique, cand, {});

  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  for (const auto& b : blocks)
    if (!is_boolean_sublattice(L, b.members))
      throw std::logic_error("maximal_blocks: generated block is not a Boolean sublattice");
  return blocks;
}

/// Every Boolean sublattice of an orthomodular lattice, including {0, 1}.
///
/// A finite Boolean sublattice is determined by its atoms, which are pairwise
/// orthogonal nonzero elements joining to 1; those partitions of unity are
/// enumerated directly. Exponential, meant for small hosts.
inline std::vector<Block> all_boolean_sublattices(const FiniteOrtholattice& L) {
  require_orthomodular(L);
  std::vector<Block> out;
  ElementSet parts;
  std::function<void(Element, Element)> grow = [&](Element from, Element acc) {
    if (acc == L.top()) {
      out.push_back(Block{detail::joins_of_subsets(L, parts)});
      return;
    }
    for (Element x = from; x < L.size(); ++x) {
      if (x == L.bottom() || !L.orthogonal(x, acc)) continue;
      parts.push_back(x);
      grow(x + 1, L.join(acc, x));
      parts.pop_back();
    }
  };
  grow(0, L.bottom());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Filters and quotients

struct Filter {
  ElementSet members;
  bool proper = false;
  bool maximal = false;

  bool contains(Element x) const { return oml::contains(members, x); }
  bool operator==(const Filter&) const = default;
};

/// The quotient A/F: classes of the congruence [x] = {y : ¬x ∨ y ∈ F, x ∨ ¬y ∈ F}.
struct Quotient {
  std::vector<ElementSet> classes;
  std::vector<int> class_of;  // host index -> class, -1 outside the block
  std::vector<std::vector<std::size_t>> meet, join;
  std::vector<std::size_t> ortho;
  std::size_t zero = 0, one = 0;

  std::size_t size() const { return classes.size(); }
};

inline void require_subset(const Block& B, const ElementSet& xs, const char* what) {
  for (Element x : xs)
    if (!B.contains(x)) throw Error(ErrorKind::InvalidArgument, std::string(what) + " is not inside the block");
}

namespace detail {

inline Quotient quotient_unchecked(const FiniteOrtholattice& L, const Block& B, const Filter& F) {
  Quotient q;
  q.class_of.assign(L.size(), -1);
  for (Element x : B.members) {
    if (q.class_of[x] >= 0) continue;
    ElementSet cls;
    for (Element y : B.members)
      if (F.contains(L.join(L.ortho(x), y)) && F.contains(L.join(x, L.ortho(y)))) cls.push_back(y);
    for (Element y : cls) {
      if (q.class_of[y] >= 0) throw std::logic_error("quotient: classes overlap");
      q.class_of[y] = static_cast<int>(q.classes.size());
    }
    q.classes.push_back(std::move(cls));
  }
  const std::size_t k = q.classes.size();
  auto cls = [&](Element x) { return static_cast<std::size_t>(q.class_of[x]); };
  q.meet.assign(k, std::vector<std::size_t>(k));
  q.join.assign(k, std::vector<std::size_t>(k));
  q.ortho.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const Element x = q.classes[i].front();
    q.ortho[i] = cls(L.ortho(x));
    for (std::size_t j = 0; j < k; ++j) {
      const Element y = q.classes[j].front();
      q.meet[i][j] = cls(L.meet(x, y));
      q.join[i][j] = cls(L.join(x, y));
    }
  }
  q.zero = cls(L.bottom());
  q.one = cls(L.top());
  return q;
}

/// The natural map respects every operation and the class algebra is Boolean.
inline bool quotient_is_boolean_image(const FiniteOrtholattice& L, const Block& B, const Quotient& q) {
  auto cls = [&](Element x) { return static_cast<std::size_t>(q.class_of[x]); };
  for (Element x : B.members) {
    if (q.class_of[x] < 0) return false;
    if (cls(L.ortho(x)) != q.ortho[cls(x)]) return false;
    for (Element y : B.members)
      if (cls(L.meet(x, y)) != q.meet[cls(x)][cls(y)] || cls(L.join(x, y)) != q.join[cls(x)][cls(y)])
        return false;
  }
  const std::size_t k = q.size();
  for (std::size_t a = 0; a < k; ++a) {
    if (q.meet[a][q.ortho[a]] != q.zero || q.join[a][q.ortho[a]] != q.one) return false;
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        if (q.meet[a][q.join[b][c]] != q.join[q.meet[a][b]][q.meet[a][c]]) return false;
  }
  return true;
}

inline Filter make_filter(const FiniteOrtholattice& L, const Block& B, ElementSet members) {
  Filter f{std::move(members), false, false};
  f.proper = !f.contains(L.bottom());
  if (f.proper) f.maximal = quotient_unchecked(L, B, f).size() == 2;
  return f;
}

}  // namespace detail

/// F_X = {x ∈ B : ⋀X ≤ x}. An empty X yields the trivial filter {1}.
inline Filter generated_filter(const FiniteOrtholattice& L, const Block& B, const ElementSet& X) {
  require_subset(B, X, "generator");
  const Element m = L.meet_all(X);
  ElementSet members;
  for (Element x : B.members)
    if (L.leq(m, x)) members.push_back(x);
  return detail::make_filter(L, B, std::move(members));
}

inline bool is_filter(const FiniteOrtholattice& L, const Block& B, const ElementSet& set) {
  if (set.empty()) return false;
  for (Element a : set) {
    if (!B.contains(a)) return false;
    for (Element x : B.members)
      if (L.leq(a, x) && !contains(set, x)) return false;
    for (Element b : set)
      if (!contains(set, L.meet(a, b))) return false;
  }
  return true;
}

inline Quotient quotient(const FiniteOrtholattice& L, const Block& B, const Filter& F) {
  if (F.contains(L.bottom())) throw Error(ErrorKind::ImproperFilter, "quotient by an improper filter has one class");
  auto q = detail::quotient_unchecked(L, B, F);
  if (!detail::quotient_is_boolean_image(L, B, q))
    throw std::logic_error("quotient: natural map is not a Boolean homomorphism");
  return q;
}

/// Greedy extension: least-index element whose addition keeps the filter proper.
inline Filter extend_to_maximal(const FiniteOrtholattice& L, const Block& B, const Filter& F) {
  if (F.contains(L.bottom())) throw Error(ErrorKind::ImproperFilter, "cannot extend an improper filter");
  Filter current = F;
  for (Element x : B.members) {
    if (current.contains(x)) continue;
    ElementSet gens = current.members;
    gens.push_back(x);
    normalize(gens);
    Filter next = generated_filter(L, B, gens);
    if (next.proper) current = std::move(next);
  }
  if (!current.maximal) throw std::logic_error("extend_to_maximal: result is not maximal");
  return current;
}

/// Maximal F with x ∈ F and y ∉ F; requires x ≰ y.
inline Filter separating_maximal_filter(const FiniteOrtholattice& L, const Block& B, Element x, Element y) {
  require_subset(B, {x, y}, "element");
  if (L.leq(x, y))
    throw Error(ErrorKind::NotSeparable, "'" + L.label(x) + "' <= '" + L.label(y) + "'");
  // x ≰ y means x ∧ ¬y ≠ 0 in a Boolean algebra, so {x, ¬y} generates a proper filter.
  ElementSet gens{x, L.ortho(y)};
  normalize(gens);
  return extend_to_maximal(L, B, generated_filter(L, B, gens));
}

// ---------------------------------------------------------------------------
// Two-valued homomorphisms

struct TwoValuation {
  ElementSet domain;
  std::vector<bool> values;  // parallel to domain

  bool defined(Element x) const { return oml::contains(domain, x); }
  bool value(Element x) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), x);
    if (it == domain.end() || *it != x) throw Error(ErrorKind::DomainMismatch, "element outside valuation domain");
    return values[static_cast<std::size_t>(it - domain.begin())];
  }
  ElementSet ones() const {
    ElementSet out;
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (values[i]) out.push_back(domain[i]);
    return out;
  }
  bool operator==(const TwoValuation&) const = default;
};

/// v(x) = 1 iff x ∈ F.
inline TwoValuation valuation_from_filter(const Block& B, const Filter& F) {
  TwoValuation v{B.members, {}};
  for (Element x : B.members) v.values.push_back(F.contains(x));
  return v;
}

/// v(x) = 1 iff p ≤ x.
inline TwoValuation valuation_from_atom(const FiniteOrtholattice& L, const Block& B, Element p) {
  TwoValuation v{B.members, {}};
  for (Element x : B.members) v.values.push_back(L.leq(p, x));
  return v;
}

inline bool is_two_valued_homomorphism(const FiniteOrtholattice& L, const TwoValuation& v) {
  if (!v.defined(L.bottom()) || !v.defined(L.top())) return false;
  if (v.value(L.bottom()) || !v.value(L.top())) return false;
  for (Element x : v.domain) {
    if (!v.defined(L.ortho(x)) || v.value(L.ortho(x)) == v.value(x)) return false;
    for (Element y : v.domain) {
      if (!v.defined(L.meet(x, y)) || v.value(L.meet(x, y)) != (v.value(x) && v.value(y))) return false;
      if (!v.defined(L.join(x, y)) || v.value(L.join(x, y)) != (v.value(x) || v.value(y))) return false;
    }
  }
  return true;
}

/// One homomorphism per atom of the block, in atom index order.
inline std::vector<TwoValuation> enumerate_two_valuations(const FiniteOrtholattice& L, const Block& B) {
  std::vector<TwoValuation> out;
  for (Element p : block_atoms(L, B)) out.push_back(valuation_from_atom(L, B, p));
  return out;
}

/// Maximal filters of a block, via the quotient characterization.
inline std::vector<Filter> maximal_filters(const FiniteOrtholattice& L, const Block& B) {
  std::vector<Filter> out;
  for (Element p : block_atoms(L, B)) {
    Filter f = generated_filter(L, B, {p});
    if (f.maximal) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace oml
