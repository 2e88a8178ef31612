#pragma once

// The relation table for parenthesized G-braids and the checker that
// evaluates both sides of every relation in the action-groupoid model.
//
// Each entry has a source tree template and two step sequences applied in
// order. Bare lowercase names in the source are object variables: each is
// instantiated as a fresh input leaf of any color, or as U. Names inside
// L[..] and step arguments are label variables ranging over G; "e" is the
// identity. Reading choices are listed in docs/relations.md.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "morphism.hpp"
#include "parallel.hpp"

namespace e2g {

inline const char* relation_table_text() {
  return R"(# name          | source                                    | lhs                       | rhs
pentagon         | T(T(T(w, x), y), z)                       | alpha@ alpha@             | alpha@0 alpha@ alpha@1
triangle         | T(T(x, U), y)                             | alpha@ lambda@1           | rho@0
triangle-left    | T(T(U, x), y)                             | alpha@ lambda@            | lambda@0
triangle-right   | T(T(x, y), U)                             | alpha@ rho@1              | rho@
triangle-unit    | T(U, U)                                   | lambda@                   | rho@
hexagon-right    | T(T(x, y), z)                             | c@                        | alpha@ c@1 alpha^-1@ c@0 gamma@00 alpha@
hexagon-left     | T(T(x, y), z)                             | alpha@ c@                 | c@0 alpha@ c@1 alpha^-1@ beta@0
G1               | T(T(L[h](x), L[h](y)), L[h](z))           | beta@0 beta@ alpha@0      | alpha@ beta@1 beta@
G2               | T(L[h](U), L[h](x))                       | beta@ lambda@0            | epsilon@0 lambda@
G3.1             | L[e](L[h](x))                             | gamma@                    | delta@
G3.2             | L[h](L[e](x))                             | gamma@                    | delta@0
G4               | L[h3](L[h2](L[h1](x)))                    | gamma@ gamma@             | gamma@0 gamma@
G5               | T(L[e](x), L[e](y))                       | beta@ delta@              | delta@0 delta@1
G6               | L[e](U)                                   | epsilon@                  | delta@
G7               | T(L[h](U), L[h](U))                       | epsilon@0 epsilon@1 lambda@ | beta@ lambda@0 epsilon@
G8               | T(L[h2](L[h1](x)), L[h2](L[h1](y)))       | gamma@0 gamma@1 beta@     | beta@ beta@0 gamma@
G9               | T(L[h](x), L[h](y))                       | beta@ c@0 beta^-1@ gamma@0 | c@ gamma@0
G10.1            | T(T(x, y), z)                             | c@ alpha^-1@              | alpha@ c@1 alpha^-1@ c@0 gamma@00
G10.2            | T(x, T(y, z))                             | c@                        | alpha^-1@ c@0 alpha@ c@1 alpha^-1@ beta@0
)";
}

struct RelationSpec {
  std::string name, source, lhs, rhs;
};

inline std::vector<RelationSpec> relation_table() {
  std::vector<RelationSpec> out;
  std::istringstream in(relation_table_text());
  std::string line;
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '|')) f.push_back(trim(cell));
    if (f.size() != 4) throw std::logic_error("relation table: bad row '" + line + "'");
    out.push_back({f[0], f[1], f[2], f[3]});
  }
  return out;
}

/// Object variables, then label variables, in order of first appearance.
struct RelationVariables {
  std::vector<std::string> objects, labels;
};

/// Value per variable: objects use -1 for U, else a leaf color.
using RelationAssignment = std::map<std::string, int>;

namespace detail {

inline bool is_label_name(const std::string& tok) {
  return !tok.empty() && std::isalpha(static_cast<unsigned char>(tok[0])) && tok != "e";
}

}  // namespace detail

inline RelationVariables relation_variables(const RelationSpec& rel) {
  RelationVariables v;
  auto add = [](std::vector<std::string>& xs, const std::string& n) {
    if (std::find(xs.begin(), xs.end(), n) == xs.end()) xs.push_back(n);
  };
  TreeParseContext ctx;
  ctx.element = [&](const std::string& tok) -> Elem {
    if (detail::is_label_name(tok)) add(v.labels, tok);
    return 0;
  };
  ctx.object = [&](const std::string& name) {
    add(v.objects, name);
    return GTree::unit();
  };
  parse_tree(rel.source, ctx);
  for (const auto* side : {&rel.lhs, &rel.rhs})
    parse_steps(*side, [&](const std::string& tok) -> Elem {
      if (detail::is_label_name(tok)) add(v.labels, tok);
      return 0;
    });
  return v;
}

struct RelationInstance {
  MorphismWord lhs, rhs;
};

inline RelationInstance instantiate(const FiniteGroup& G, const RelationSpec& rel, const RelationAssignment& a) {
  auto elem = [&](const std::string& tok) -> Elem {
    if (tok == "e") return FiniteGroup::identity();
    if (detail::is_label_name(tok)) {
      auto it = a.find(tok);
      if (it == a.end()) throw std::invalid_argument("assignment misses label variable '" + tok + "'");
      if (it->second < 0 || static_cast<std::size_t>(it->second) >= G.order())
        throw std::invalid_argument("label variable '" + tok + "' out of range");
      return static_cast<Elem>(it->second);
    }
    return static_cast<Elem>(std::stoi(tok));
  };
  int next_slot = 1;
  TreeParseContext ctx;
  ctx.element = elem;
  ctx.object = [&](const std::string& name) {
    auto it = a.find(name);
    if (it == a.end()) throw std::invalid_argument("assignment misses object variable '" + name + "'");
    if (it->second < 0) return GTree::unit();
    if (static_cast<std::size_t>(it->second) >= G.order())
      throw std::invalid_argument("object variable '" + name + "' color out of range");
    return GTree::leaf(next_slot++, static_cast<Elem>(it->second));
  };
  const GTree source = parse_tree(rel.source, ctx);
  return {{source, parse_steps(rel.lhs, elem)}, {source, parse_steps(rel.rhs, elem)}};
}

inline std::string assignment_str(const RelationAssignment& a) {
  std::string s;
  for (const auto& [k, v] : a) s += (s.empty() ? "" : ",") + k + "=" + (v < 0 ? std::string("U") : std::to_string(v));
  return s;
}

struct RelationCheck {
  bool ok = true;
  std::string reason;
};

/// Both sides must be well typed, end at the same tree, and carry equal
/// braids. Each side's braid must also move its source to its target.
inline RelationCheck check_relation(const FiniteGroup& G, const RelationSpec& rel, const RelationAssignment& a,
                                    bool flip_braiding = false) {
  const auto inst = instantiate(G, rel, a);
  Interpretation L, R;
  try {
    L = interpret_morphism(G, inst.lhs, flip_braiding);
    R = interpret_morphism(G, inst.rhs, false);
  } catch (const IllTyped& e) {
    return {false, std::string("ill-typed: ") + e.what()};
  }
  if (!(L.target_tree == R.target_tree))
    return {false, "targets differ: " + L.target_tree.str() + " vs " + R.target_tree.str()};
  if (!(L.source == R.source) || !(L.target == R.target)) return {false, "normal forms differ"};
  if (!braid_equal(L.braid, R.braid)) return {false, "braids differ: [" + L.braid.str() + "] vs [" + R.braid.str() + "]"};
  const Tuple g = inst.lhs.source.input_colors();
  for (const auto* side : {&L, &R}) {
    if (!(component_act(G, side->braid, side->source.tuple(), g) == side->target.tuple()))
      return {false, "braid does not carry source to target"};
  }
  return {};
}

/// Looks a relation up by exact name.
inline RelationSpec find_relation(const std::string& name) {
  for (auto& r : relation_table())
    if (r.name == name) return r;
  throw std::invalid_argument("unknown relation '" + name + "'");
}

inline RelationCheck check_relation(const FiniteGroup& G, const std::string& name, const RelationAssignment& a,
                                    bool flip_braiding = false) {
  return check_relation(G, find_relation(name), a, flip_braiding);
}

struct RelationFailure {
  std::string assignment, reason;
};

struct RelationReport {
  std::string relation;
  std::size_t assignments_checked = 0;
  std::size_t failure_count = 0;
  std::vector<RelationFailure> failures;  // first few witnesses
};

struct RelationOptions {
  bool flip_braiding = false;
  std::size_t cap = 1000000;  // assignments per relation
  unsigned jobs = 1;
  std::size_t max_witnesses = 5;
};

/// All assignments of one relation in mixed-radix order (objects first:
/// U, then colors 0..n-1; labels 0..n-1).
inline std::vector<RelationAssignment> all_assignments(const FiniteGroup& G, const RelationSpec& rel, std::size_t cap) {
  const auto vars = relation_variables(rel);
  std::vector<std::pair<std::string, int>> radix;  // name, first value
  for (const auto& o : vars.objects) radix.push_back({o, -1});
  for (const auto& l : vars.labels) radix.push_back({l, 0});
  std::size_t total = 1;
  for (const auto& [n, lo] : radix) {
    total *= G.order() + (lo < 0 ? 1 : 0);
    if (total > cap) throw CapExceeded("relation " + rel.name + ": more than " + std::to_string(cap) + " assignments");
  }
  std::vector<RelationAssignment> out;
  out.reserve(total);
  std::vector<int> cur;
  for (const auto& [n, lo] : radix) cur.push_back(lo);
  for (std::size_t k = 0; k < total; ++k) {
    RelationAssignment a;
    for (std::size_t i = 0; i < radix.size(); ++i) a[radix[i].first] = cur[i];
    out.push_back(std::move(a));
    for (std::size_t i = radix.size(); i-- > 0;) {
      if (++cur[i] < static_cast<int>(G.order())) break;
      cur[i] = radix[i].second;
    }
  }
  return out;
}

inline RelationReport check_relation_all(const FiniteGroup& G, const RelationSpec& rel, const RelationOptions& opt) {
  const auto as = all_assignments(G, rel, opt.cap);
  const std::size_t chunks = std::max<std::size_t>(1, opt.jobs * 4);
  std::vector<std::vector<std::pair<std::size_t, std::string>>> fails(chunks);
  parallel_chunks(as.size(), opt.jobs, chunks, [&](std::size_t c, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto res = check_relation(G, rel, as[i], opt.flip_braiding);
      if (!res.ok) fails[c].push_back({i, res.reason});
    }
  });
  RelationReport rep{rel.name, as.size(), 0, {}};
  for (const auto& part : fails)
    for (const auto& [i, why] : part) {
      ++rep.failure_count;
      if (rep.failures.size() < opt.max_witnesses) rep.failures.push_back({assignment_str(as[i]), why});
    }
  return rep;
}

inline std::vector<RelationReport> check_all_relations(const FiniteGroup& G, const RelationOptions& opt = {}) {
  std::vector<RelationReport> out;
  for (const auto& rel : relation_table()) out.push_back(check_relation_all(G, rel, opt));
  return out;
}

}  // namespace e2g
