#pragma once

// Context hypergraphs: atoms plus blocks given as atom sets. A global
// valuation on such a family is a choice of exactly one true atom per block,
// consistent on shared atoms. Also builds the Greechie pasting of a
// hypergraph as a finite orthomodular lattice.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "oml/error.hpp"
#include "oml/lattice.hpp"

namespace oml {

using Atom = std::uint32_t;

struct ContextHypergraph {
  std::size_t atom_count = 0;
  std::vector<std::vector<Atom>> blocks;  // each sorted
  std::vector<std::string> labels;        // empty or one per atom

  std::string label(Atom a) const { return labels.empty() ? "a" + std::to_string(a) : labels[a]; }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> deg(atom_count, 0);
    for (const auto& b : blocks)
      for (Atom a : b) ++deg[a];
    return deg;
  }

  std::size_t shared_count(std::size_t i, std::size_t j) const {
    std::vector<Atom> common;
    std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                          std::back_inserter(common));
    return common.size();
  }
};

/// Throws InvalidHypergraph for structural defects; returns warnings for
/// block pairs that share more than one atom.
inline std::vector<std::string> validate(const ContextHypergraph& H) {
  if (H.atom_count == 0) throw Error(ErrorKind::InvalidHypergraph, "no atoms");
  if (!H.labels.empty() && H.labels.size() != H.atom_count)
    throw Error(ErrorKind::InvalidHypergraph, "label count does not match atom count");
  std::vector<char> seen(H.atom_count, 0);
  for (std::size_t i = 0; i < H.blocks.size(); ++i) {
    const auto& b = H.blocks[i];
    if (b.size() < 2) throw Error(ErrorKind::InvalidHypergraph, "block " + std::to_string(i) + " has fewer than 2 atoms");
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
      throw Error(ErrorKind::InvalidHypergraph, "block " + std::to_string(i) + " is not a sorted atom set");
    for (Atom a : b) {
      if (a >= H.atom_count) throw Error(ErrorKind::InvalidHypergraph, "block references unknown atom");
      seen[a] = 1;
    }
  }
  for (Atom a = 0; a < H.atom_count; ++a)
    if (!seen[a]) throw Error(ErrorKind::InvalidHypergraph, "atom '" + H.label(a) + "' lies in no block");
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < H.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < H.blocks.size(); ++j)
      if (H.shared_count(i, j) > 1)
        warnings.push_back("blocks " + std::to_string(i) + " and " + std::to_string(j) + " share more than one atom");
  return warnings;
}

/// If every atom lies in an even number of blocks while the block count is
/// odd, no exactly-one selection exists: summing the selection block by block
/// gives an odd total, atom by atom an even one.
struct ParityCertificate {
  std::size_t block_count = 0;
  std::vector<std::size_t> atom_degrees;
};

inline std::optional<ParityCertificate> parity_certificate(const ContextHypergraph& H) {
  if (H.blocks.size() % 2 == 0) return std::nullopt;
  auto deg = H.degrees();
  for (auto d : deg)
    if (d % 2 != 0) return std::nullopt;
  return ParityCertificate{H.blocks.size(), std::move(deg)};
}

/// Re-verifies a certificate against the hypergraph it claims to refute.
inline bool certificate_is_valid(const ContextHypergraph& H, const ParityCertificate& c) {
  return c.block_count == H.blocks.size() && c.block_count % 2 == 1 && c.atom_degrees == H.degrees() &&
         std::all_of(c.atom_degrees.begin(), c.atom_degrees.end(), [](std::size_t d) { return d % 2 == 0; });
}

namespace detail {

/// Exactly-one-per-block search with unit propagation and optional
/// at-least-one clauses. Blocks are branched on by descending overlap
/// degree, atoms by index.
class ExactlyOneSolver {
 public:
  ExactlyOneSolver(const ContextHypergraph& H, std::vector<std::vector<Atom>> at_least_one)
      : H_(H), clauses_(std::move(at_least_one)), value_(H.atom_count, -1), blocks_of_(H.atom_count) {
    for (std::size_t b = 0; b < H.blocks.size(); ++b)
      for (Atom a : H.blocks[b]) blocks_of_[a].push_back(b);
    std::vector<std::size_t> degree(H.blocks.size(), 0);
    for (std::size_t i = 0; i < H.blocks.size(); ++i)
      for (std::size_t j = 0; j < H.blocks.size(); ++j)
        if (i != j && H.shared_count(i, j) > 0) ++degree[i];
    order_.resize(H.blocks.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return degree[a] > degree[b]; });
  }

  std::uint64_t nodes() const { return nodes_; }

  /// Visits complete assignments until `visit` returns false.
  template <class Visit>
  void run(Visit&& visit) {
    keep_going_ = true;
    search(visit);
  }

 private:
  bool assign(Atom a, int v) {
    if (value_[a] == v) return true;
    if (value_[a] != -1) return false;
    value_[a] = static_cast<signed char>(v);
    trail_.push_back(a);
    queue_.push_back(a);
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const Atom changed = queue_.back();
      queue_.pop_back();
      for (std::size_t b : blocks_of_[changed]) {
        std::size_t trues = 0, unknowns = 0;
        Atom last_unknown = 0;
        for (Atom a : H_.blocks[b]) {
          if (value_[a] == 1) ++trues;
          if (value_[a] == -1) ++unknowns, last_unknown = a;
        }
        if (trues > 1) return false;
        if (trues == 1) {
          for (Atom a : H_.blocks[b])
            if (value_[a] == -1 && !assign(a, 0)) return false;
        } else if (unknowns == 0) {
          return false;
        } else if (unknowns == 1 && !assign(last_unknown, 1)) {
          return false;
        }
      }
    }
    for (const auto& clause : clauses_)
      if (std::all_of(clause.begin(), clause.end(), [&](Atom a) { return value_[a] == 0; })) return false;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
    queue_.clear();
  }

  template <class Visit>
  void search(Visit& visit) {
    ++nodes_;
    std::optional<std::size_t> open;
    for (std::size_t b : order_) {
      const auto& atoms = H_.blocks[b];
      if (std::none_of(atoms.begin(), atoms.end(), [&](Atom a) { return value_[a] == 1; })) {
        open = b;
        break;
      }
    }
    if (!open) {
      std::vector<bool> assignment(value_.size());
      for (std::size_t a = 0; a < value_.size(); ++a) assignment[a] = value_[a] == 1;
      keep_going_ = visit(assignment);
      return;
    }
    for (Atom a : H_.blocks[*open]) {
      if (value_[a] != -1) continue;
      const std::size_t mark = trail_.size();
      if (assign(a, 1) && propagate()) search(visit);
      undo(mark);
      if (!keep_going_) return;
    }
  }

  const ContextHypergraph& H_;
  std::vector<std::vector<Atom>> clauses_;
  std::vector<signed char> value_;
  std::vector<std::vector<std::size_t>> blocks_of_;
  std::vector<std::size_t> order_;
  std::vector<Atom> trail_;
  std::vector<Atom> queue_;
  std::uint64_t nodes_ = 0;
  bool keep_going_ = true;
};

}  // namespace detail

struct HypergraphResult {
  std::optional<std::vector<bool>> assignment;  // true atoms, one per block
  std::optional<ParityCertificate> certificate;
  std::uint64_t nodes = 0;
};

/// First exactly-one assignment (deterministic), or none with a parity
/// certificate when one applies. `at_least_one` adds clauses requiring some
/// listed atom to be true.
inline HypergraphResult hypergraph_assignment(const ContextHypergraph& H,
                                              std::vector<std::vector<Atom>> at_least_one = {}) {
  validate(H);
  HypergraphResult result;
  detail::ExactlyOneSolver solver(H, std::move(at_least_one));
  solver.run([&](const std::vector<bool>& assignment) {
    result.assignment = assignment;
    return false;
  });
  result.nodes = solver.nodes();
  if (!result.assignment) result.certificate = parity_certificate(H);
  return result;
}

inline std::uint64_t count_hypergraph_assignments(const ContextHypergraph& H) {
  validate(H);
  std::uint64_t count = 0;
  detail::ExactlyOneSolver solver(H, {});
  solver.run([&](const std::vector<bool>&) {
    ++count;
    return true;
  });
  return count;
}

/// Exactly one true atom per block, and every block covered.
inline bool is_exactly_one_assignment(const ContextHypergraph& H, const std::vector<bool>& assignment) {
  if (assignment.size() != H.atom_count) return false;
  for (const auto& b : H.blocks)
    if (std::count_if(b.begin(), b.end(), [&](Atom a) { return assignment[a]; }) != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Per-world designations on a hypergraph

struct HypergraphWorld {
  std::size_t block = 0;
  std::vector<Atom> designated;  // Pᵢ as a set of the block's atoms
};

struct HypergraphMwiReport {
  std::vector<std::optional<Atom>> world_witness;  // atom valued 1 in each world
  bool all_worlds_satisfiable = true;
  bool joint_satisfiable = false;
  HypergraphResult joint;
};

inline HypergraphMwiReport mwi_family_check(const ContextHypergraph& H, const std::vector<HypergraphWorld>& worlds) {
  validate(H);
  HypergraphMwiReport report;
  std::vector<std::vector<Atom>> clauses;
  for (const auto& w : worlds) {
    if (w.block >= H.blocks.size()) throw Error(ErrorKind::InvalidArgument, "designation names an unknown block");
    if (w.designated.empty()) throw Error(ErrorKind::ZeroDesignated, "0 cannot be valued 1 in any world");
    const auto& atoms = H.blocks[w.block];
    for (Atom a : w.designated)
      if (!std::binary_search(atoms.begin(), atoms.end(), a))
        throw Error(ErrorKind::InvalidArgument, "designated atom '" + H.label(a) + "' is outside its block");
    // Inside its own block, any designated atom can be the one valued 1.
    report.world_witness.push_back(*std::min_element(w.designated.begin(), w.designated.end()));
    clauses.push_back(w.designated);
  }
  report.joint = hypergraph_assignment(H, std::move(clauses));
  report.joint_satisfiable = report.joint.assignment.has_value();
  return report;
}

// ---------------------------------------------------------------------------
// Greechie pasting

/// Cycles of 3 or 4 blocks, consecutive ones sharing pairwise distinct atoms.
/// The shortest (then lexicographically least) such loop, if any.
inline std::optional<std::vector<std::size_t>> short_loop(const ContextHypergraph& H) {
  const std::size_t k = H.blocks.size();
  auto shared = [&](std::size_t i, std::size_t j) -> std::optional<Atom> {
    std::vector<Atom> common;
    std::set_intersection(H.blocks[i].begin(), H.blocks[i].end(), H.blocks[j].begin(), H.blocks[j].end(),
                          std::back_inserter(common));
    if (common.empty()) return std::nullopt;
    return common.front();
  };
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = b + 1; c < k; ++c) {
        auto x = shared(a, b), y = shared(b, c), z = shared(a, c);
        if (x && y && z && *x != *y && *y != *z && *x != *z) return std::vector<std::size_t>{a, b, c};
      }
  // Four-cycles a-b-c-d-a with a the least block and b < d to skip reflections.
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = a + 1; c < k; ++c)
        for (std::size_t d = b + 1; d < k; ++d) {
          if (c == b || c == d) continue;
          auto w = shared(a, b), x = shared(b, c), y = shared(c, d), z = shared(d, a);
          if (!(w && x && y && z)) continue;
          std::vector<Atom> s{*w, *x, *y, *z};
          std::sort(s.begin(), s.end());
          if (std::adjacent_find(s.begin(), s.end()) == s.end()) return std::vector<std::size_t>{a, b, c, d};
        }
  return std::nullopt;
}

/// Pastes the blocks' power sets together. Each block contributes the subsets
/// of its atoms; a shared atom and its complement are identified across every
/// block containing it, along with 0 and 1. The result must be an
/// orthomodular lattice.
inline FiniteOrtholattice paste_greechie(const ContextHypergraph& H) {
  validate(H);
  const auto deg = H.degrees();
  for (std::size_t i = 0; i < H.blocks.size(); ++i) {
    if (H.blocks[i].size() > 20) throw Error(ErrorKind::InvalidArgument, "block too large to paste");
    if (H.blocks[i].size() == 2)
      for (Atom a : H.blocks[i])
        if (deg[a] > 1)
          throw Error(ErrorKind::InvalidHypergraph, "a two-atom block cannot share atom '" + H.label(a) + "'");
    for (std::size_t j = i + 1; j < H.blocks.size(); ++j)
      if (H.shared_count(i, j) > 1)
        throw Error(ErrorKind::BlocksOverlapTooMuch,
                    "blocks " + std::to_string(i) + " and " + std::to_string(j) + " share more than one atom");
  }

  // Element keys: (kind, id, mask). kind 0 = bottom, 1 = atom, 2 = complement
  // of a shared atom, 3 = block-local subset, 4 = top.
  using Key = std::tuple<int, std::size_t, std::uint32_t>;
  std::map<Key, Element> index;
  std::vector<std::string> labels;
  auto intern = [&](const Key& key, std::string label) {
    auto [it, fresh] = index.emplace(key, static_cast<Element>(labels.size()));
    if (fresh) labels.push_back(std::move(label));
    return it->second;
  };
  intern({0, 0, 0}, "0");
  for (Atom a = 0; a < H.atom_count; ++a) intern({1, a, 0}, H.label(a));

  auto key_of = [&](std::size_t b, std::uint32_t mask) -> Key {
    const auto& atoms = H.blocks[b];
    const std::uint32_t full = (std::uint32_t{1} << atoms.size()) - 1;
    if (mask == 0) return {0, 0, 0};
    if (mask == full) return {4, 0, 0};
    if (std::has_single_bit(mask)) return {1, atoms[std::countr_zero(mask)], 0};
    const std::uint32_t missing = full & ~mask;
    if (std::has_single_bit(missing) && deg[atoms[std::countr_zero(missing)]] > 1)
      return {2, atoms[std::countr_zero(missing)], 0};
    return {3, b, mask};
  };
  auto label_of = [&](std::size_t b, std::uint32_t mask) {
    const auto& atoms = H.blocks[b];
    const std::uint32_t full = (std::uint32_t{1} << atoms.size()) - 1;
    const std::uint32_t missing = full & ~mask;
    if (std::has_single_bit(missing) && deg[atoms[std::countr_zero(missing)]] > 1)
      return H.label(atoms[std::countr_zero(missing)]) + "'";
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask >> i & 1u) out += (out.empty() ? "" : "+") + H.label(atoms[i]);
    return out;
  };

  for (std::size_t b = 0; b < H.blocks.size(); ++b) {
    const std::uint32_t full = (std::uint32_t{1} << H.blocks[b].size()) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) intern(key_of(b, mask), label_of(b, mask));
  }
  const Element top = intern({4, 0, 0}, "1");

  std::vector<std::pair<Element, Element>> relation, ortho;
  for (Element x = 0; x < labels.size(); ++x) relation.emplace_back(0, x), relation.emplace_back(x, top);
  ortho.emplace_back(0, top);
  for (std::size_t b = 0; b < H.blocks.size(); ++b) {
    const std::size_t m = H.blocks[b].size();
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      const Element x = index.at(key_of(b, mask));
      for (std::size_t i = 0; i < m; ++i)
        if (!(mask >> i & 1u)) relation.emplace_back(x, index.at(key_of(b, mask | (1u << i))));
      ortho.emplace_back(x, index.at(key_of(b, full & ~mask)));
    }
  }

  auto fail = [&](const std::string& why) -> Error {
    std::string msg = why;
    if (auto loop = short_loop(H)) {
      msg += "; responsible loop of order " + std::to_string(loop->size()) + " through blocks";
      for (auto b : *loop) msg += " " + std::to_string(b);
    }
    return Error(ErrorKind::NotOrthomodularAfterPaste, msg);
  };
  try {
    auto L = FiniteOrtholattice::from_relation(labels.size(), relation, ortho, labels);
    if (auto v = check_ortholattice(L)) throw fail(v->law + " fails at (" + L.label(v->x) + ", " + L.label(v->y) + ")");
    if (auto v = check_orthomodular(L)) throw fail("orthomodular law fails at (" + L.label(v->x) + ", " + L.label(v->y) + ")");
    return L;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotOrthomodularAfterPaste) throw;
    throw fail(e.what());
  }
}

}  // namespace oml
