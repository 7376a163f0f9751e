#pragma once

// Global valuations: compatible families of two-valued homomorphisms, one per
// maximal block, found by backtracking over the atom each block sends to 1.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "oml/boolean.hpp"
#include "oml/lattice.hpp"
#include "oml/modal.hpp"

namespace oml {

struct GlobalValuation {
  std::vector<Block> blocks;
  std::vector<Element> chosen;  // atom of each block valued 1
  std::vector<TwoValuation> per_block;
};

/// vᵢ and vⱼ agree on Wᵢ ∩ Wⱼ for every pair, and each vᵢ is a homomorphism.
inline bool is_compatible(const FiniteOrtholattice& L, const GlobalValuation& g) {
  for (std::size_t i = 0; i < g.per_block.size(); ++i) {
    if (!is_two_valued_homomorphism(L, g.per_block[i])) return false;
    for (std::size_t j = i + 1; j < g.per_block.size(); ++j)
      for (Element x : g.blocks[i].members)
        if (g.blocks[j].contains(x) && g.per_block[i].value(x) != g.per_block[j].value(x)) return false;
  }
  return true;
}

/// Backtracking search over the maximal blocks of an orthomodular lattice.
///
/// Blocks are visited by descending overlap degree (ties by block order) and
/// candidate atoms by index, so the first valuation found is canonical.
/// Extra constraints fix the value of chosen elements in every block that
/// contains them.
class ValuationSearch {
 public:
  explicit ValuationSearch(const FiniteOrtholattice& L) : L_(L), blocks_(maximal_blocks(L)) {
    const std::size_t k = blocks_.size();
    atoms_.resize(k);
    for (std::size_t i = 0; i < k; ++i) atoms_[i] = block_atoms(L, blocks_[i]);

    shared_.assign(k, std::vector<ElementSet>(k));
    std::vector<std::size_t> degree(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        for (Element x : blocks_[i].members)
          if (x != L.bottom() && x != L.top() && blocks_[j].contains(x)) shared_[i][j].push_back(x);
        if (!shared_[i][j].empty()) ++degree[i];
      }
    order_.resize(k);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  }

  const std::vector<Block>& blocks() const { return blocks_; }

  void require(Element x, bool value) { required_.emplace_back(x, value); }

  std::optional<GlobalValuation> first() {
    std::optional<GlobalValuation> out;
    run([&](const std::vector<Element>& chosen) {
      out = materialize(chosen);
      return false;
    });
    return out;
  }

  std::uint64_t count() {
    std::uint64_t n = 0;
    run([&](const std::vector<Element>&) {
      ++n;
      return true;
    });
    return n;
  }

  GlobalValuation materialize(const std::vector<Element>& chosen) const {
    GlobalValuation g{blocks_, chosen, {}};
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      g.per_block.push_back(valuation_from_atom(L_, blocks_[i], chosen[i]));
    return g;
  }

 private:
  bool allowed(std::size_t block, Element atom) const {
    for (auto [x, value] : required_)
      if (blocks_[block].contains(x) && L_.leq(atom, x) != value) return false;
    return true;
  }

  bool agrees(std::size_t i, Element p, std::size_t j, Element q) const {
    for (Element x : shared_[i][j])
      if (L_.leq(p, x) != L_.leq(q, x)) return false;
    return true;
  }

  /// Calls `visit` on each complete assignment until it returns false.
  template <class Visit>
  void run(Visit&& visit) {
    const std::size_t k = blocks_.size();
    std::vector<Element> chosen(k, 0);
    std::vector<char> assigned(k, 0);
    bool keep_going = true;
    auto dfs = [&](auto&& self, std::size_t depth) -> void {
      if (!keep_going) return;
      if (depth == k) {
        keep_going = visit(chosen);
        return;
      }
      const std::size_t b = order_[depth];
      for (Element p : atoms_[b]) {
        if (!allowed(b, p)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j)
          if (assigned[j] && !shared_[b][j].empty()) ok = agrees(b, p, j, chosen[j]);
        if (!ok) continue;
        chosen[b] = p;
        assigned[b] = 1;
        self(self, depth + 1);
        assigned[b] = 0;
        if (!keep_going) return;
      }
    };
    dfs(dfs, 0);
  }

  const FiniteOrtholattice& L_;
  std::vector<Block> blocks_;
  std::vector<ElementSet> atoms_;
  std::vector<std::vector<ElementSet>> shared_;  // nontrivial Wᵢ ∩ Wⱼ
  std::vector<std::size_t> order_;
  std::vector<std::pair<Element, bool>> required_;
};

inline std::optional<GlobalValuation> find_global_valuation(const FiniteOrtholattice& L) {
  return ValuationSearch(L).first();
}

inline std::uint64_t count_global_valuations(const FiniteOrtholattice& L) { return ValuationSearch(L).count(); }

// ---------------------------------------------------------------------------
// Compatible actualizations

/// A global valuation whose block maps agree with f on each Wᵢ ∩ ◇L, and
/// additionally honour `forced` element values. f must be a two-valued
/// homomorphism defined exactly on the possibility space.
inline std::optional<GlobalValuation> compatible_actualization(
    const ModalLattice& M, const TwoValuation& f, const std::vector<std::pair<Element, bool>>& forced = {}) {
  const auto space = possibility_space(M);
  if (f.domain != space.members)
    throw Error(ErrorKind::DomainMismatch, "f must be defined exactly on the possibility space");
  if (!is_two_valued_homomorphism(M.base, f))
    throw Error(ErrorKind::DomainMismatch, "f is not a Boolean homomorphism on the possibility space");
  ValuationSearch search(M.base);
  for (std::size_t i = 0; i < f.domain.size(); ++i) search.require(f.domain[i], f.values[i]);
  for (auto [x, value] : forced) search.require(x, value);
  return search.first();
}

struct MksReport {
  bool global_exists = false;         // side A
  bool actualization_exists = false;  // side B
  std::optional<GlobalValuation> global_witness;
  std::optional<TwoValuation> f_witness;
  std::optional<GlobalValuation> actualization_witness;
  std::size_t f_count = 0;
  std::size_t actualizable_f_count = 0;

  bool agree() const { return global_exists == actualization_exists; }
};

/// Both sides of the equivalence "global valuation exists" ⇔ "some
/// f : ◇L → 2 admits a compatible actualization", by exhaustive search.
inline MksReport check_mks(const ModalLattice& M) {
  MksReport r;
  r.global_witness = find_global_valuation(M.base);
  r.global_exists = r.global_witness.has_value();
  const Block space = possibility_space(M).as_block();
  for (const auto& f : enumerate_two_valuations(M.base, space)) {
    ++r.f_count;
    if (auto g = compatible_actualization(M, f)) {
      ++r.actualizable_f_count;
      if (!r.actualization_witness) {
        r.f_witness = f;
        r.actualization_witness = std::move(g);
      }
    }
  }
  r.actualization_exists = r.actualizable_f_count > 0;
  return r;
}

// ---------------------------------------------------------------------------
// Many-worlds valuation families

struct MWIFamily {
  std::vector<std::pair<Block, Element>> designated;  // one (context, Pᵢ) per world
};

/// Places each element in the first maximal block containing it.
inline MWIFamily make_mwi_family(const FiniteOrtholattice& L, const ElementSet& elements) {
  const auto blocks = maximal_blocks(L);
  MWIFamily family;
  for (Element p : elements) {
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.contains(p); });
    if (it == blocks.end()) throw Error(ErrorKind::InvalidArgument, "element lies in no block");
    family.designated.emplace_back(*it, p);
  }
  return family;
}

struct WorldFinding {
  Element designated = 0;
  bool satisfiable = false;
  std::optional<TwoValuation> witness;  // vᵢ on the world's block with vᵢ(Pᵢ) = 1
  Element witness_atom = 0;
};

struct MwiReport {
  std::vector<WorldFinding> worlds;
  bool all_worlds_satisfiable = true;
  bool joint_satisfiable = false;  // one global valuation with every Pᵢ true
  std::optional<GlobalValuation> joint_witness;
};

inline MwiReport mwi_family_check(const FiniteOrtholattice& L, const MWIFamily& family) {
  MwiReport report;
  ValuationSearch joint(L);
  for (const auto& [block, p] : family.designated) {
    if (p == L.bottom()) throw Error(ErrorKind::ZeroDesignated, "0 cannot be valued 1 in any world");
    if (!block.contains(p))
      throw Error(ErrorKind::InvalidArgument, "'" + L.label(p) + "' is not in its designated block");
    WorldFinding w{p, false, std::nullopt, 0};
    for (Element a : block_atoms(L, block))
      if (L.leq(a, p)) {
        w.satisfiable = true;
        w.witness = valuation_from_atom(L, block, a);
        w.witness_atom = a;
        break;
      }
    report.all_worlds_satisfiable = report.all_worlds_satisfiable && w.satisfiable;
    report.worlds.push_back(std::move(w));
    joint.require(p, true);
  }
  report.joint_witness = joint.first();
  report.joint_satisfiable = report.joint_witness.has_value();
  return report;
}

}  // namespace oml
