#pragma once

// Command-line front end. Each command builds one JSON report; the text
// format is rendered from that same report, so both carry identical verdicts
// and witnesses.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oml/boolean.hpp"
#include "oml/catalog.hpp"
#include "oml/error.hpp"
#include "oml/hypergraph.hpp"
#include "oml/io.hpp"
#include "oml/lattice.hpp"
#include "oml/modal.hpp"
#include "oml/valuation.hpp"

namespace omlkit {

using json = nlohmann::ordered_json;
using namespace oml;

enum ExitCode : int { kHolds = 0, kFails = 1, kInputError = 2 };

struct Options {
  std::string command;
  std::string fixture;
  std::string file;
  std::string format = "text";
  std::string element;
  std::string family;
  std::string f_values;
  std::string force_values;
  bool hypergraph = false;
};

// ---------------------------------------------------------------------------
// Text rendering of a report

namespace detail {

inline std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline bool is_flat(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

inline void render(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !is_flat(value)) {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      } else if (is_flat(value)) {
        out << pad << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
        out << "]\n";
      } else {
        out << pad << key << ": " << scalar_text(value) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        std::ostringstream nested;
        render(e, nested, indent + 2);
        std::string text = nested.str();
        text.replace(static_cast<std::size_t>(indent), 2, "- ");
        out << text;
      } else if (is_flat(e)) {
        out << pad << "- [";
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? ", " : "") << scalar_text(e[i]);
        out << "]\n";
      } else {
        out << pad << "- " << scalar_text(e) << '\n';
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

/// Two-column table for `compare`.
inline void render_table(const json& table, std::ostream& out) {
  std::size_t w0 = 0, w1 = 0, w2 = 0;
  for (const auto& row : table) {
    w0 = std::max(w0, row[0].get<std::string>().size());
    w1 = std::max(w1, row[1].get<std::string>().size());
    w2 = std::max(w2, row[2].get<std::string>().size());
  }
  for (const auto& row : table) {
    const auto a = row[0].get<std::string>(), b = row[1].get<std::string>(), c = row[2].get<std::string>();
    out << "| " << a << std::string(w0 - a.size(), ' ') << " | " << b << std::string(w1 - b.size(), ' ') << " | "
        << c << std::string(w2 - c.size(), ' ') << " |\n";
  }
}

}  // namespace detail

inline std::string render_text(const json& report) {
  std::ostringstream out;
  if (report.contains("table")) {
    detail::render_table(report["table"], out);
    json rest = report;
    rest.erase("table");
    detail::render(rest, out, 0);
  } else {
    detail::render(report, out, 0);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Helpers

inline json labels(const FiniteOrtholattice& L, const ElementSet& xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(L.label(x));
  return out;
}

inline json witness(const FiniteOrtholattice& L, const LawCheck& check) {
  if (!check) return "pass";
  return json{{"law", check->law}, {"x", L.label(check->x)}, {"y", L.label(check->y)}};
}

inline json valuation_json(const FiniteOrtholattice& L, const TwoValuation& v) {
  return json{{"domain", labels(L, v.domain)}, {"true", labels(L, v.ones())}};
}

inline json global_json(const FiniteOrtholattice& L, const GlobalValuation& g) {
  json blocks = json::array();
  for (std::size_t i = 0; i < g.blocks.size(); ++i)
    blocks.push_back(json{{"block", labels(L, g.blocks[i].members)}, {"atom", L.label(g.chosen[i])}});
  return blocks;
}

/// Splits on commas outside parentheses, so product labels like "(a,0)" survive.
inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!item.empty()) out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  if (!item.empty()) out.push_back(item);
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline FiniteOrtholattice load_lattice(const Options& o) {
  if (!o.file.empty()) return parse_lattice(read_file(o.file));
  if (!o.fixture.empty()) return catalog_lattice(o.fixture);
  throw Error(ErrorKind::InvalidArgument, "give --fixture or --file");
}

inline ContextHypergraph load_hypergraph(const Options& o) {
  if (!o.file.empty()) return parse_hypergraph(read_file(o.file));
  if (!o.fixture.empty()) return catalog_hypergraph(o.fixture);
  throw Error(ErrorKind::InvalidArgument, "give --fixture or --file");
}

inline ElementSet parse_family(const FiniteOrtholattice& L, const std::string& list) {
  ElementSet out;
  for (const auto& name : split_list(list)) out.push_back(L.at(name));
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "--family needs at least one element");
  return out;
}

inline std::vector<std::pair<Element, bool>> parse_assignments(const FiniteOrtholattice& L, const std::string& list) {
  std::vector<std::pair<Element, bool>> out;
  for (const auto& item : split_list(list)) {
    const auto eq = item.rfind('=');
    if (eq == std::string::npos || eq + 2 != item.size() || (item[eq + 1] != '0' && item[eq + 1] != '1'))
      throw Error(ErrorKind::InvalidArgument, "expected name=0 or name=1, got '" + item + "'");
    out.emplace_back(L.at(item.substr(0, eq)), item[eq + 1] == '1');
  }
  return out;
}

struct Outcome {
  json report;
  int code = kHolds;
};

// ---------------------------------------------------------------------------
// Commands

inline Outcome cmd_check(const FiniteOrtholattice& L) {
  json r;
  const auto ortho = check_ortholattice(L);
  const auto om = ortho ? LawCheck{} : check_orthomodular(L);
  r["elements"] = L.size();
  r["ortholattice"] = witness(L, ortho);
  if (!ortho) r["orthomodular"] = witness(L, om);
  r["atoms"] = labels(L, atoms(L));
  r["coatoms"] = labels(L, coatoms(L));
  r["atomistic"] = witness(L, check_atomistic(L));
  r["center"] = labels(L, center(L));
  const bool holds = !ortho && !om;
  if (holds) {
    const auto M = saturate(L);
    json table = json::array();
    for (Element x = 0; x < L.size(); ++x)
      table.push_back(json{{"x", L.label(x)}, {"diamond", L.label(M.diamond(x))}, {"box", L.label(M.box(x))}});
    r["saturation"] = table;
    json axioms;
    const auto s = check_s_axioms(M);
    for (std::size_t i = 0; i < 7; ++i) axioms[kSAxiomNames[i]] = witness(L, s.results[i]);
    r["s_axioms"] = axioms;
  }
  r["verdict"] = holds ? "orthomodular" : "not orthomodular";
  return {r, holds ? kHolds : kFails};
}

inline Outcome cmd_center(const FiniteOrtholattice& L) {
  const auto z = center(L);
  json r;
  r["center"] = labels(L, z);
  r["boolean_sublattice"] = is_boolean_sublattice(L, z);
  r["verdict"] = is_boolean_sublattice(L, z) ? "center is a Boolean sublattice" : "center is not Boolean";
  return {r, is_boolean_sublattice(L, z) ? kHolds : kFails};
}

inline Outcome cmd_blocks(const FiniteOrtholattice& L) {
  json r, list = json::array();
  for (const auto& b : maximal_blocks(L)) list.push_back(labels(L, b.members));
  r["maximal_blocks"] = list;
  r["count"] = list.size();
  r["verdict"] = "ok";
  return {r, kHolds};
}

inline Outcome cmd_diamond(const FiniteOrtholattice& L, const Options& o) {
  const auto M = saturate(L);
  json r, table = json::array();
  ElementSet targets = o.element.empty() ? L.all() : ElementSet{L.at(o.element)};
  for (Element x : targets)
    table.push_back(json{{"x", L.label(x)}, {"diamond", L.label(M.diamond(x))}, {"box", L.label(M.box(x))}});
  r["center"] = labels(L, M.center_set);
  r["possibility_space"] = labels(L, possibility_space(M).members);
  r["operators"] = table;
  r["verdict"] = "ok";
  return {r, kHolds};
}

inline Outcome cmd_cons(const FiniteOrtholattice& L, const Options& o) {
  const auto M = saturate(L);
  const auto subs = all_boolean_sublattices(L);
  ElementSet targets = o.element.empty() ? L.all() : ElementSet{L.at(o.element)};
  json r, rows = json::array();
  bool all_agree = true;
  for (Element p : targets) {
    const auto brute = cons_bruteforce(M, p, subs);
    const auto closed = cons_closed_form(M, p);
    const bool agree = brute == closed;
    all_agree = all_agree && agree;
    json row{{"element", L.label(p)},
             {"diamond", L.label(M.diamond(p))},
             {"bruteforce", labels(L, brute)},
             {"closed_form", labels(L, closed)},
             {"agreement", agree}};
    if (p == L.bottom()) row["note"] = "vacuous: v(0) = 1 never holds";
    rows.push_back(row);
  }
  r["possibility_space"] = labels(L, possibility_space(M).members);
  r["consequences"] = rows;
  r["agreement"] = all_agree;
  r["verdict"] = all_agree ? "methods agree" : "methods disagree";
  return {r, all_agree ? kHolds : kFails};
}

inline Outcome cmd_valuations(const FiniteOrtholattice& L) {
  ValuationSearch search(L);
  const auto first = search.first();
  json r;
  r["blocks"] = search.blocks().size();
  r["count"] = search.count();
  r["found"] = first.has_value();
  if (first) r["first"] = global_json(L, *first);
  r["verdict"] = first ? "global valuation exists" : "no global valuation";
  return {r, first ? kHolds : kFails};
}

inline Outcome cmd_actualize(const FiniteOrtholattice& L, const Options& o) {
  const auto M = saturate(L);
  const auto space = possibility_space(M);
  const auto given = parse_assignments(L, o.f_values);
  for (auto [x, value] : given)
    if (!space.contains(x))
      throw Error(ErrorKind::DomainMismatch, "'" + L.label(x) + "' is not in the possibility space");
  // Complete f from the homomorphisms of the possibility space that match.
  std::vector<TwoValuation> matches;
  for (const auto& f : enumerate_two_valuations(L, space.as_block())) {
    bool ok = true;
    for (auto [x, value] : given) ok = ok && f.value(x) == value;
    if (ok) matches.push_back(f);
  }
  if (matches.empty()) throw Error(ErrorKind::InvalidArgument, "no homomorphism on the possibility space matches --f");
  if (matches.size() > 1)
    throw Error(ErrorKind::InvalidArgument,
                "--f is ambiguous: " + std::to_string(matches.size()) + " homomorphisms match");
  const auto forced = parse_assignments(L, o.force_values);
  const auto g = compatible_actualization(M, matches.front(), forced);
  json r;
  r["f"] = valuation_json(L, matches.front());
  if (!forced.empty()) {
    json fj = json::array();
    for (auto [x, v] : forced) fj.push_back(L.label(x) + "=" + (v ? "1" : "0"));
    r["forced"] = fj;
  }
  r["found"] = g.has_value();
  if (g) r["actualization"] = global_json(L, *g);
  r["verdict"] = g ? "compatible actualization exists" : "no compatible actualization";
  return {r, g ? kHolds : kFails};
}

inline Outcome cmd_mks(const FiniteOrtholattice& L) {
  const auto M = saturate(L);
  const auto m = check_mks(M);
  json r;
  r["global_valuation_exists"] = m.global_exists;
  r["actualization_exists"] = m.actualization_exists;
  r["possibility_homomorphisms"] = m.f_count;
  r["actualizable_homomorphisms"] = m.actualizable_f_count;
  if (m.global_witness) r["global_witness"] = global_json(L, *m.global_witness);
  if (m.f_witness) r["f_witness"] = valuation_json(L, *m.f_witness);
  if (m.actualization_witness) r["actualization_witness"] = global_json(L, *m.actualization_witness);
  r["equivalence_holds"] = m.agree();
  r["verdict"] = m.agree() ? "equivalence holds" : "equivalence fails";
  return {r, m.agree() ? kHolds : kFails};
}

inline Outcome cmd_many(const FiniteOrtholattice& L, const Options& o) {
  const auto M = saturate(L);
  const auto family = parse_family(L, o.family);
  const auto outcome = many_worlds_valuation(M, family);
  json r;
  r["family"] = labels(L, family);
  if (auto* ok = std::get_if<ManyWorldsValuation>(&outcome)) {
    json d = json::array();
    for (std::size_t i = 0; i < family.size(); ++i)
      d.push_back(json{{"p", L.label(family[i])}, {"diamond", L.label(ok->diamonds[i])},
                       {"value", ok->valuation.value(ok->diamonds[i]) ? 1 : 0}});
    r["diamonds"] = d;
    r["generated_filter"] = labels(L, ok->generated.members);
    r["maximal_filter"] = labels(L, ok->maximal.members);
    r["valuation"] = valuation_json(L, ok->valuation);
    r["verdict"] = "valuation on the possibility space sends every diamond to 1";
    return {r, kHolds};
  }
  const auto& bad = std::get<Infeasible>(outcome);
  json sub = json::array();
  for (auto i : bad.subfamily) sub.push_back(L.label(family[i]));
  r["infeasible_subfamily"] = sub;
  r["meet"] = L.label(bad.meet);
  r["verdict"] = "infeasible: diamonds have zero meet";
  return {r, kFails};
}

inline Outcome cmd_mwi_lattice(const FiniteOrtholattice& L, const Options& o) {
  const auto family = make_mwi_family(L, parse_family(L, o.family));
  const auto rep = mwi_family_check(L, family);
  json r, worlds = json::array();
  for (std::size_t i = 0; i < rep.worlds.size(); ++i) {
    const auto& w = rep.worlds[i];
    worlds.push_back(json{{"designated", L.label(w.designated)},
                          {"block", labels(L, family.designated[i].first.members)},
                          {"satisfiable", w.satisfiable},
                          {"atom", L.label(w.witness_atom)}});
  }
  r["worlds"] = worlds;
  r["all_worlds_satisfiable"] = rep.all_worlds_satisfiable;
  r["joint_satisfiable"] = rep.joint_satisfiable;
  if (rep.joint_witness) r["joint_witness"] = global_json(L, *rep.joint_witness);
  r["verdict"] = rep.all_worlds_satisfiable ? "every world is satisfiable" : "some world is unsatisfiable";
  return {r, rep.all_worlds_satisfiable ? kHolds : kFails};
}

inline json certificate_json(const ContextHypergraph& H, const ParityCertificate& c) {
  json deg;
  for (Atom a = 0; a < H.atom_count; ++a) deg[H.label(a)] = c.atom_degrees[a];
  return json{{"blocks", c.block_count},
              {"atom_degrees", deg},
              {"argument", "each of the " + std::to_string(c.block_count) +
                               " blocks selects one atom, an odd total; every atom lies in an even number of "
                               "blocks, so the same total is even"}};
}

inline std::vector<HypergraphWorld> hypergraph_worlds(const ContextHypergraph& H, const std::string& list) {
  std::vector<HypergraphWorld> worlds;
  if (list.empty()) {
    for (std::size_t b = 0; b < H.blocks.size(); ++b) worlds.push_back({b, {H.blocks[b].front()}});
    return worlds;
  }
  for (const auto& name : split_list(list)) {
    std::optional<Atom> atom;
    for (Atom a = 0; a < H.atom_count; ++a)
      if (H.label(a) == name) atom = a;
    if (!atom) throw Error(ErrorKind::InvalidArgument, "unknown atom '" + name + "'");
    for (std::size_t b = 0; b < H.blocks.size(); ++b)
      if (std::binary_search(H.blocks[b].begin(), H.blocks[b].end(), *atom)) {
        worlds.push_back({b, {*atom}});
        break;
      }
  }
  return worlds;
}

inline Outcome cmd_mwi_hypergraph(const ContextHypergraph& H, const Options& o) {
  const auto worlds = hypergraph_worlds(H, o.family);
  const auto rep = mwi_family_check(H, worlds);
  json r, list = json::array();
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    json atoms = json::array();
    for (Atom a : worlds[i].designated) atoms.push_back(H.label(a));
    list.push_back(json{{"block", worlds[i].block},
                        {"designated", atoms},
                        {"satisfiable", rep.world_witness[i].has_value()},
                        {"atom", H.label(*rep.world_witness[i])}});
  }
  r["surrogate"] = "context hypergraph standing in for a family of Hilbert-space contexts";
  r["worlds"] = list;
  r["all_worlds_satisfiable"] = rep.all_worlds_satisfiable;
  r["joint_satisfiable"] = rep.joint_satisfiable;
  if (rep.joint.certificate) r["joint_certificate"] = certificate_json(H, *rep.joint.certificate);
  r["verdict"] = rep.all_worlds_satisfiable ? "every world is satisfiable" : "some world is unsatisfiable";
  return {r, rep.all_worlds_satisfiable ? kHolds : kFails};
}

inline Outcome cmd_ks(const ContextHypergraph& H) {
  const auto warnings = validate(H);
  const auto res = hypergraph_assignment(H);
  json r;
  r["surrogate"] = "context hypergraph standing in for a family of Hilbert-space contexts";
  r["atoms"] = H.atom_count;
  r["blocks"] = H.blocks.size();
  if (!warnings.empty()) r["warnings"] = warnings;
  r["nodes"] = res.nodes;
  if (res.assignment) {
    json t = json::array();
    for (Atom a = 0; a < H.atom_count; ++a)
      if ((*res.assignment)[a]) t.push_back(H.label(a));
    r["assignment"] = t;
    r["verdict"] = "exactly-one assignment exists";
    return {r, kHolds};
  }
  if (res.certificate) r["certificate"] = certificate_json(H, *res.certificate);
  else r["certificate"] = "none (exhaustive search)";
  r["verdict"] = "no exactly-one assignment";
  return {r, kFails};
}

inline Outcome cmd_compare(const FiniteOrtholattice& L, const Options& o) {
  const auto M = saturate(L);
  const auto family = parse_family(L, o.family);
  const auto outcome = many_worlds_valuation(M, family);
  const auto mwi = mwi_family_check(L, make_mwi_family(L, family));

  std::string modal_val, modal_ks;
  json r;
  if (auto* ok = std::get_if<ManyWorldsValuation>(&outcome)) {
    modal_val = "v on possibility space with v(diamond p)=1 for all p: " + labels(L, ok->valuation.ones()).dump();
    const auto g = compatible_actualization(M, ok->valuation);
    modal_ks = g ? "compatible actualization of v exists" : "no compatible actualization of v";
    r["actualization_exists"] = g.has_value();
  } else {
    modal_val = "infeasible: diamond meet is 0";
    modal_ks = "n/a";
    r["actualization_exists"] = false;
  }
  std::string world_val = "per-world valuations: " + std::to_string(mwi.worlds.size()) + " worlds, " +
                          (mwi.all_worlds_satisfiable ? "each satisfiable" : "some unsatisfiable");
  std::string world_ks = std::string("no constraint across worlds; joint single valuation ") +
                         (mwi.joint_satisfiable ? "exists" : "does not exist");
  r["table"] = json::array({json::array({"", "Modality", "MWI"}),
                            json::array({"Valuations", modal_val, world_val}),
                            json::array({"KS theorem", modal_ks, world_ks})});
  r["family"] = labels(L, family);
  r["modal_valuation_exists"] = std::holds_alternative<ManyWorldsValuation>(outcome);
  r["all_worlds_satisfiable"] = mwi.all_worlds_satisfiable;
  r["joint_satisfiable"] = mwi.joint_satisfiable;
  r["verdict"] = "comparison complete";
  return {r, kHolds};
}

// ---------------------------------------------------------------------------
// Entry point

inline const std::vector<std::pair<std::string, std::string>>& command_table() {
  static const std::vector<std::pair<std::string, std::string>> table{
      {"check", "ortholattice and orthomodular laws, center, saturation, S1-S7"},
      {"center", "central elements"},
      {"blocks", "maximal Boolean blocks"},
      {"diamond", "possibility and necessity operators"},
      {"cons", "classical consequences by brute force and closed form"},
      {"valuations", "first global valuation and the total count"},
      {"actualize", "compatible actualization of a possibility-space valuation"},
      {"mks", "global valuation versus compatible actualization"},
      {"many", "one valuation of the possibility space for a family"},
      {"mwi", "per-world and joint designations"},
      {"ks", "exactly-one assignment on a context hypergraph"},
      {"paste", "Greechie pasting of a hypergraph into a lattice document"},
      {"compare", "two-column modality versus many-worlds report"},
      {"export-dot", "Hasse diagram in DOT"}};
  return table;
}

inline Outcome dispatch(const Options& o) {
  const auto& c = o.command;
  if (c == "ks") return cmd_ks(load_hypergraph(o));
  if (c == "paste") {
    const auto L = paste_greechie(load_hypergraph(o));
    json r;
    r["elements"] = L.size();
    r["orthomodular"] = L.is_orthomodular();
    r["document"] = emit_lattice(L);
    r["verdict"] = "pasting is an orthomodular lattice";
    return {r, kHolds};
  }
  if (c == "mwi" && o.hypergraph) return cmd_mwi_hypergraph(load_hypergraph(o), o);

  const auto L = load_lattice(o);
  if (c == "check") return cmd_check(L);
  if (c == "center") return cmd_center(L);
  if (c == "blocks") return cmd_blocks(L);
  if (c == "diamond") return cmd_diamond(L, o);
  if (c == "cons") return cmd_cons(L, o);
  if (c == "valuations") return cmd_valuations(L);
  if (c == "actualize") return cmd_actualize(L, o);
  if (c == "mks") return cmd_mks(L);
  if (c == "many") return cmd_many(L, o);
  if (c == "mwi") return cmd_mwi_lattice(L, o);
  if (c == "compare") return cmd_compare(L, o);
  if (c == "export-dot") {
    json r;
    r["dot"] = to_dot(L, o.fixture.empty() ? "lattice" : o.fixture);
    r["covers"] = L.covers().size();
    r["verdict"] = "ok";
    return {r, kHolds};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown command '" + c + "'");
}

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotOrthomodular:
    case ErrorKind::NotAtomistic:
    case ErrorKind::NotOrthomodularAfterPaste:
      return kFails;
    default:
      return kInputError;
  }
}

/// Runs one command; writes the report to `out` once, at completion.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite orthomodular lattice toolkit", "omlkit"};
  app.require_subcommand(1);
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : command_table()) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--fixture", o.fixture, "catalog fixture name");
    sub->add_option("--file", o.file, "lattice or hypergraph document");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--element", o.element, "element label");
    sub->add_option("--family", o.family, "comma-separated element labels");
    sub->add_option("--f", o.f_values, "possibility-space values, e.g. x=1,y=0");
    sub->add_option("--force", o.force_values, "extra element values for the actualization");
    sub->add_flag("--hypergraph", o.hypergraph, "read a hypergraph instead of a lattice");
    subs.push_back(sub);
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  for (auto* sub : subs)
    if (sub->parsed()) o.command = sub->get_name();
  if (o.command == "actualize" && o.f_values.empty()) {
    err << "error: actualize requires --f\n";
    return kInputError;
  }
  if ((o.command == "many" || o.command == "compare") && o.family.empty()) {
    err << "error: " << o.command << " requires --family\n";
    return kInputError;
  }
  if (o.command == "mwi" && !o.hypergraph && o.family.empty()) {
    err << "error: mwi requires --family (or --hypergraph)\n";
    return kInputError;
  }

  Outcome result;
  try {
    result = dispatch(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const int code = exit_code_for(e.kind());
    if (code == kFails && o.format == "json") {
      out << json{{"format_version", kFormatVersion}, {"command", o.command}, {"verdict", e.what()},
                  {"exit_code", code}}.dump(2)
          << '\n';
    }
    return code;
  }

  json report;
  report["format_version"] = kFormatVersion;
  report["command"] = o.command;
  report["exit_code"] = result.code;
  for (auto& [key, value] : result.report.items()) report[key] = value;

  if (o.format == "json") {
    out << report.dump(2) << '\n';
  } else if (o.command == "export-dot") {
    out << report["dot"].get<std::string>();
  } else if (o.command == "paste" && result.code == kHolds) {
    out << report["document"].get<std::string>();
  } else {
    out << render_text(report);
  }
  return result.code;
}

}  // namespace omlkit
