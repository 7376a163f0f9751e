#pragma once

// The possibility operator on a finite orthomodular lattice and the
// constructions built on it: necessity, the equational S-suite, the
// possibility space, classical consequences and the many-worlds valuation.
//
// A finite orthomodular lattice is complete, so every element has a least
// central element above it and the lattice is its own modal extension.

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "oml/boolean.hpp"
#include "oml/lattice.hpp"

namespace oml {

struct ModalLattice {
  FiniteOrtholattice base;
  ElementSet center_set;
  std::vector<Element> diamond_map;
  std::vector<Element> box_map;

  Element diamond(Element x) const { return diamond_map[x]; }
  Element box(Element x) const { return box_map[x]; }
  bool is_central(Element x) const { return contains(center_set, x); }
};

inline constexpr std::array<const char*, 7> kSAxiomNames{"S1", "S2", "S3", "S4", "S5", "S6", "S7"};

struct SAxiomReport {
  std::array<LawCheck, 7> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (r) return false;
    return true;
  }
};

/// S1–S7, each with the first violating (x, y) in index order.
inline SAxiomReport check_s_axioms(const ModalLattice& M) {
  const auto& L = M.base;
  const auto n = static_cast<Element>(L.size());
  auto box = [&](Element x) { return M.box(x); };
  auto neg = [&](Element x) { return L.ortho(x); };
  SAxiomReport report;
  auto note = [&](std::size_t i, Element x, Element y) {
    if (!report.results[i]) report.results[i] = LawViolation{kSAxiomNames[i], x, y};
  };
  if (box(L.top()) != L.top()) note(1, L.top(), L.top());
  for (Element x = 0; x < n; ++x) {
    if (!L.leq(box(x), x)) note(0, x, x);
    if (box(box(x)) != box(x)) note(2, x, x);
    for (Element y = 0; y < n; ++y) {
      if (box(L.meet(x, y)) != L.meet(box(x), box(y))) note(3, x, y);
      if (y != L.join(L.meet(y, box(x)), L.meet(y, neg(box(x))))) note(4, x, y);
      if (box(L.join(x, box(y))) != L.join(box(x), box(y))) note(5, x, y);
      if (!L.leq(box(L.join(neg(x), L.meet(y, x))), L.join(neg(box(x)), box(y)))) note(6, x, y);
    }
  }
  return report;
}

/// Replaces ◇a and rederives □ without any validation; used to build
/// deliberately broken modal structures.
inline ModalLattice with_diamond(ModalLattice M, Element a, Element value) {
  M.diamond_map[a] = value;
  for (Element x = 0; x < M.base.size(); ++x) M.box_map[x] = M.base.ortho(M.diamond_map[M.base.ortho(x)]);
  return M;
}

/// ◇a = meet of all central z ≥ a; □x = ¬◇¬x.
inline ModalLattice saturate(const FiniteOrtholattice& L) {
  require_orthomodular(L);
  ModalLattice M{L, center(L), {}, {}};
  const auto n = static_cast<Element>(L.size());
  M.diamond_map.resize(n);
  M.box_map.resize(n);
  for (Element a = 0; a < n; ++a) {
    Element d = L.top();
    for (Element z : M.center_set)
      if (L.leq(a, z)) d = L.meet(d, z);
    if (!M.is_central(d)) throw std::logic_error("saturate: meet of central elements is not central");
    M.diamond_map[a] = d;
  }
  for (Element x = 0; x < n; ++x) M.box_map[x] = L.ortho(M.diamond_map[L.ortho(x)]);

  const auto report = check_s_axioms(M);
  for (const auto& r : report.results)
    if (r)
      throw std::logic_error("saturate: " + r->law + " fails at (" + L.label(r->x) + ", " + L.label(r->y) + ")");
  return M;
}

// ---------------------------------------------------------------------------
// Possibility space

struct PossibilitySpace {
  ElementSet members;

  Block as_block() const { return Block{members}; }
  bool contains(Element x) const { return oml::contains(members, x); }
};

inline ElementSet diamond_image(const ModalLattice& M) {
  ElementSet image(M.diamond_map.begin(), M.diamond_map.end());
  normalize(image);
  return image;
}

inline PossibilitySpace possibility_space(const ModalLattice& M) {
  PossibilitySpace ps{generated_sublattice(M.base, diamond_image(M))};
  if (!is_boolean_sublattice(M.base, ps.members)) throw std::logic_error("possibility space is not Boolean");
  for (Element x : ps.members)
    if (!M.is_central(x)) throw std::logic_error("possibility space leaves the center");
  return ps;
}

struct ExtensionFailure {
  std::string reason;
  std::array<Element, 3> triple{};
};

/// ⟨W ∪ ◇L⟩ is a Boolean sublattice. Returns the failing triple otherwise.
inline std::optional<ExtensionFailure> check_posspace_extension(const ModalLattice& M, const Block& W) {
  const auto& L = M.base;
  if (!is_boolean_sublattice(L, W.members))
    throw Error(ErrorKind::InvalidArgument, "W is not a Boolean sublattice of the base");
  ElementSet seed = W.members;
  const auto ps = possibility_space(M);
  seed.insert(seed.end(), ps.members.begin(), ps.members.end());
  normalize(seed);
  const ElementSet generated = generated_sublattice(L, seed);
  if (!is_closed_subset(L, generated)) return ExtensionFailure{"not closed", {}};
  if (auto t = distributivity_witness(L, generated)) return ExtensionFailure{"not distributive", *t};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classical consequences

/// Cons(p) by its definition: x ∈ ◇L such that, for every Boolean sublattice
/// W ∋ p and every two-valuation v of ⟨W ∪ ◇L⟩, v(p) = 1 forces v(x) = 1.
/// `sublattices` must list every Boolean sublattice of the base.
inline ElementSet cons_bruteforce(const ModalLattice& M, Element p, const std::vector<Block>& sublattices) {
  const auto& L = M.base;
  const auto ps = possibility_space(M);
  std::vector<char> refuted(L.size(), 0);
  for (const Block& W : sublattices) {
    if (!W.contains(p)) continue;
    ElementSet seed = W.members;
    seed.insert(seed.end(), ps.members.begin(), ps.members.end());
    normalize(seed);
    const Block extended{generated_sublattice(L, seed)};
    for (const auto& v : enumerate_two_valuations(L, extended)) {
      if (!v.value(p)) continue;
      for (Element x : ps.members)
        if (!v.value(x)) refuted[x] = 1;
    }
  }
  ElementSet out;
  for (Element x : ps.members)
    if (!refuted[x]) out.push_back(x);
  return out;
}

inline ElementSet cons_bruteforce(const ModalLattice& M, Element p) {
  return cons_bruteforce(M, p, all_boolean_sublattices(M.base));
}

/// Cons(p) = {x ∈ ◇L : ◇p ≤ x}.
inline ElementSet cons_closed_form(const ModalLattice& M, Element p) {
  ElementSet out;
  for (Element x : possibility_space(M).members)
    if (M.base.leq(M.diamond(p), x)) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Common complements of atoms

struct AtomPairFinding {
  Element a = 0, b = 0;
  std::optional<Element> common_complement;  // least-index one
  bool diamonds_equal = false;
};

struct CommonComplementReport {
  std::vector<AtomPairFinding> pairs;
  bool implication_holds = true;  // common complement ⇒ ◇a = ◇b, for every pair
};

inline CommonComplementReport common_complement_lemma(const ModalLattice& M) {
  const auto& L = M.base;
  if (auto w = check_atomistic(L))
    throw Error(ErrorKind::NotAtomistic, "'" + L.label(w->x) + "' is not a join of atoms");
  CommonComplementReport report;
  const ElementSet as = atoms(L);
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = i + 1; j < as.size(); ++j) {
      AtomPairFinding f{as[i], as[j], std::nullopt, M.diamond(as[i]) == M.diamond(as[j])};
      const ElementSet cb = complements(L, as[j]);
      for (Element c : complements(L, as[i]))
        if (contains(cb, c)) {
          f.common_complement = c;
          break;
        }
      if (f.common_complement && !f.diamonds_equal) report.implication_holds = false;
      report.pairs.push_back(f);
    }
  return report;
}

// ---------------------------------------------------------------------------
// Many-worlds valuation on the possibility space

struct ManyWorldsValuation {
  ElementSet diamonds;  // ◇pᵢ, in family order (not deduplicated)
  Filter generated;
  Filter maximal;
  TwoValuation valuation;  // on ◇L
};

struct Infeasible {
  std::vector<std::size_t> subfamily;  // positions into the family
  Element meet = 0;
};

using ManyWorldsOutcome = std::variant<ManyWorldsValuation, Infeasible>;

namespace detail {

/// Smallest subfamily (then lexicographically least positions) whose meet is 0.
inline std::vector<std::size_t> smallest_zero_meet(const FiniteOrtholattice& L, const ElementSet& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> pick;
  std::vector<std::size_t> found;
  std::function<bool(std::size_t, std::size_t, Element)> search = [&](std::size_t start, std::size_t left,
                                                                     Element acc) {
    if (left == 0) {
      if (acc != L.bottom()) return false;
      found = pick;
      return true;
    }
    for (std::size_t i = start; i + left <= n; ++i) {
      pick.push_back(i);
      if (search(i + 1, left - 1, L.meet(acc, values[i]))) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= n; ++k)
    if (search(0, k, L.top())) return found;
  return {};
}

}  // namespace detail

/// Builds v : ◇L → 2 with v(◇pᵢ) = 1 for every family member, by extending
/// the filter generated by the ◇pᵢ to a maximal one. Reports the smallest
/// zero-meet subfamily when that filter is improper.
inline ManyWorldsOutcome many_worlds_valuation(const ModalLattice& M, const ElementSet& family) {
  const auto& L = M.base;
  if (family.empty()) throw Error(ErrorKind::InvalidArgument, "family must be nonempty");
  ElementSet diamonds;
  for (Element p : family) {
    if (p >= L.size()) throw Error(ErrorKind::InvalidArgument, "family element out of range");
    diamonds.push_back(M.diamond(p));
  }
  const Block space = possibility_space(M).as_block();
  ElementSet gens = diamonds;
  normalize(gens);
  Filter generated = generated_filter(L, space, gens);
  if (!generated.proper) {
    auto subfamily = detail::smallest_zero_meet(L, diamonds);
    return Infeasible{std::move(subfamily), L.bottom()};
  }
  Filter maximal = extend_to_maximal(L, space, generated);
  TwoValuation v = valuation_from_filter(space, maximal);
  return ManyWorldsValuation{std::move(diamonds), std::move(generated), std::move(maximal), std::move(v)};
}

}  // namespace oml
