#pragma once

// Finite braided G-crossed data with scalar structure isomorphisms, and the
// coherence checker / solver over the relation table.
//
// Objects carry global ids; sector g holds ids offset(g) .. offset(g)+|C_g|-1.
// Every hom-set between equal objects is a torsor over A = Z/n, between
// different objects it is empty. Functors act trivially on scalars.
//
// Scalar tables and flat index order (N objects, |G| = m):
//   alpha    (X (x) Y) (x) Z -> X (x) (Y (x) Z)    (X*N + Y)*N + Z
//   lambda   U (x) X -> X                          X
//   rho      X (x) U -> X                          X
//   beta     h.X (x) h.Y -> h.(X (x) Y)            (h*N + X)*N + Y
//   gamma    h2.(h1.X) -> (h2 h1).X                (h2*m + h1)*N + X
//   delta    e.X -> X                              X
//   epsilon  h.U -> U                              h
//   c        X (x) Y -> (g.Y) (x) X, X in C_g      X*N + Y
// An inverse generator contributes the negated entry.

#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "json.hpp"
#include "relations.hpp"

namespace e2g {

enum class ScalarTable : int { Alpha, Lambda, Rho, Beta, Gamma, Delta, Epsilon, C };
constexpr int kScalarTables = 8;

inline const char* table_name(ScalarTable t) {
  static const char* names[] = {"alpha", "lambda", "rho", "beta", "gamma", "delta", "epsilon", "c"};
  return names[static_cast<int>(t)];
}

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data; `path` names the offending field, e.g. $.tensor[1][0].
class SchemaError : public AlgebraError {
 public:
  SchemaError(std::string path, const std::string& msg) : AlgebraError(path + ": " + msg), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// No morphism between different objects (hom-set empty).
class ObjectMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

struct CrossedAlgebraData {
  FiniteGroup G;
  std::string group_spec;
  int modulus = 2;                 // A = Z/modulus
  std::vector<int> sector_sizes;   // |C_g| per element index
  std::vector<int> tensor;         // N x N
  std::vector<int> action;         // m x N
  int unit = 0;
  std::array<std::vector<int>, kScalarTables> scalars;

  int objects() const {
    int n = 0;
    for (int s : sector_sizes) n += s;
    return n;
  }
  int offset(Elem g) const {
    int n = 0;
    for (Elem k = 0; k < g; ++k) n += sector_sizes[k];
    return n;
  }
  Elem sector(int x) const {
    for (Elem g = 0; g < sector_sizes.size(); ++g) {
      if (x < sector_sizes[g]) return g;
      x -= sector_sizes[g];
    }
    throw AlgebraError("object id out of range");
  }
  int tensor_of(int x, int y) const { return tensor[static_cast<std::size_t>(x * objects() + y)]; }
  int act(Elem h, int x) const { return action[static_cast<std::size_t>(h * objects() + x)]; }

  std::size_t table_size(ScalarTable t) const {
    const std::size_t N = static_cast<std::size_t>(objects()), m = G.order();
    switch (t) {
      case ScalarTable::Alpha: return N * N * N;
      case ScalarTable::Lambda:
      case ScalarTable::Rho:
      case ScalarTable::Delta: return N;
      case ScalarTable::Beta: return m * N * N;
      case ScalarTable::Gamma: return m * m * N;
      case ScalarTable::Epsilon: return m;
      case ScalarTable::C: return N * N;
    }
    return 0;
  }

  /// Offset of each table in the concatenated variable vector.
  std::size_t variable_offset(ScalarTable t) const {
    std::size_t o = 0;
    for (int k = 0; k < static_cast<int>(t); ++k) o += table_size(static_cast<ScalarTable>(k));
    return o;
  }
  std::size_t variable_count() const { return variable_offset(ScalarTable::C) + table_size(ScalarTable::C); }

  /// Throws SchemaError naming the first bad field.
  void validate() const {
    const std::size_t m = G.order();
    if (modulus < 1) throw SchemaError("$.scalars.modulus", "must be positive");
    if (sector_sizes.size() != m) throw SchemaError("$.sectors", "needs one entry per group element");
    for (std::size_t g = 0; g < m; ++g)
      if (sector_sizes[g] < 0) throw SchemaError("$.sectors[" + std::to_string(g) + "]", "negative size");
    const int N = objects();
    if (N == 0) throw SchemaError("$.sectors", "no objects");
    if (tensor.size() != static_cast<std::size_t>(N * N)) throw SchemaError("$.tensor", "must be " + std::to_string(N) + " x " + std::to_string(N));
    if (action.size() != m * static_cast<std::size_t>(N)) throw SchemaError("$.action", "must be " + std::to_string(m) + " x " + std::to_string(N));
    if (unit < 0 || unit >= N || sector(unit) != 0) throw SchemaError("$.unit", "must be an object of the identity sector");
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y) {
        const int t = tensor_of(x, y);
        const std::string p = "$.tensor[" + std::to_string(x) + "][" + std::to_string(y) + "]";
        if (t < 0 || t >= N) throw SchemaError(p, "object id out of range");
        if (sector(t) != G.mul(sector(x), sector(y))) throw SchemaError(p, "lands in the wrong sector");
      }
    for (Elem h = 0; h < m; ++h)
      for (int x = 0; x < N; ++x) {
        const int t = act(h, x);
        const std::string p = "$.action[" + std::to_string(h) + "][" + std::to_string(x) + "]";
        if (t < 0 || t >= N) throw SchemaError(p, "object id out of range");
        if (sector(t) != G.conj(h, sector(x))) throw SchemaError(p, "lands in the wrong sector");
      }
    for (int k = 0; k < kScalarTables; ++k) {
      const auto t = static_cast<ScalarTable>(k);
      const std::string p = std::string("$.tables.") + table_name(t);
      if (scalars[k].size() != table_size(t))
        throw SchemaError(p, "expected " + std::to_string(table_size(t)) + " entries, got " + std::to_string(scalars[k].size()));
      for (std::size_t i = 0; i < scalars[k].size(); ++i)
        if (scalars[k][i] < 0 || scalars[k][i] >= modulus)
          throw SchemaError(p + "[" + std::to_string(i) + "]", "scalar out of range for Z/" + std::to_string(modulus));
    }
  }

  /// All scalar entries concatenated in table order.
  std::vector<int> variables() const {
    std::vector<int> v;
    for (const auto& t : scalars) v.insert(v.end(), t.begin(), t.end());
    return v;
  }
  void set_variables(const std::vector<int>& v) {
    std::size_t o = 0;
    for (int k = 0; k < kScalarTables; ++k) {
      const std::size_t n = table_size(static_cast<ScalarTable>(k));
      scalars[k].assign(v.begin() + static_cast<std::ptrdiff_t>(o), v.begin() + static_cast<std::ptrdiff_t>(o + n));
      o += n;
    }
  }
};

/// One object per sector, tensor = multiplication, action = conjugation,
/// all scalars zero.
inline CrossedAlgebraData builtin_group_example(const FiniteGroup& G, int modulus = 2, std::string spec = "") {
  CrossedAlgebraData d{G, spec.empty() ? G.label() : std::move(spec), modulus, {}, {}, {}, 0, {}};
  const auto m = G.order();
  d.sector_sizes.assign(m, 1);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) d.tensor.push_back(G.mul(a, b));
  for (Elem h = 0; h < m; ++h)
    for (Elem a = 0; a < m; ++a) d.action.push_back(G.conj(h, a));
  for (int k = 0; k < kScalarTables; ++k) d.scalars[k].assign(d.table_size(static_cast<ScalarTable>(k)), 0);
  return d;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const CrossedAlgebraData& d) {
  nlohmann::json j;
  const int N = d.objects();
  j["group"] = d.group_spec;
  j["scalars"] = {{"modulus", d.modulus}};
  j["sectors"] = d.sector_sizes;
  j["unit"] = d.unit;
  auto rows = [](const std::vector<int>& flat, std::size_t w) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < flat.size(); i += w) a.push_back(std::vector<int>(flat.begin() + static_cast<std::ptrdiff_t>(i), flat.begin() + static_cast<std::ptrdiff_t>(i + w)));
    return a;
  };
  j["tensor"] = rows(d.tensor, static_cast<std::size_t>(N));
  j["action"] = rows(d.action, static_cast<std::size_t>(N));
  for (int k = 0; k < kScalarTables; ++k) j["tables"][table_name(static_cast<ScalarTable>(k))] = d.scalars[k];
  return j;
}

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing");
  return *it;
}

inline int as_int(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

inline std::vector<int> int_list(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<int> matrix(const nlohmann::json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw SchemaError(path, "expected an array of " + std::to_string(rows) + " rows");
  std::vector<int> out;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    auto row = int_list(j[i], p);
    if (row.size() != cols) throw SchemaError(p, "expected " + std::to_string(cols) + " entries");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace detail

/// Parses and validates; tables missing from "tables" default to zero.
inline CrossedAlgebraData from_json(const nlohmann::json& j) {
  using namespace detail;
  const auto& gs = field(j, "group", "$");
  if (!gs.is_string()) throw SchemaError("$.group", "expected a group spec string");
  FiniteGroup G = [&] {
    try {
      return make_group(gs.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError("$.group", e.what());
    }
  }();
  CrossedAlgebraData d{G, gs.get<std::string>(), 2, {}, {}, {}, 0, {}};
  if (j.contains("scalars")) d.modulus = as_int(field(field(j, "scalars", "$"), "modulus", "$.scalars"), "$.scalars.modulus");
  d.sector_sizes = int_list(field(j, "sectors", "$"), "$.sectors");
  if (d.sector_sizes.size() != G.order()) throw SchemaError("$.sectors", "needs one entry per group element");
  for (std::size_t g = 0; g < d.sector_sizes.size(); ++g)
    if (d.sector_sizes[g] < 0) throw SchemaError("$.sectors[" + std::to_string(g) + "]", "negative size");
  const auto N = static_cast<std::size_t>(d.objects());
  d.unit = as_int(field(j, "unit", "$"), "$.unit");
  d.tensor = matrix(field(j, "tensor", "$"), "$.tensor", N, N);
  d.action = matrix(field(j, "action", "$"), "$.action", G.order(), N);
  const nlohmann::json* tables = j.contains("tables") ? &field(j, "tables", "$") : nullptr;
  if (tables && !tables->is_object()) throw SchemaError("$.tables", "expected an object");
  for (int k = 0; k < kScalarTables; ++k) {
    const auto t = static_cast<ScalarTable>(k);
    const std::string name = table_name(t);
    if (tables && tables->contains(name)) d.scalars[k] = int_list((*tables)[name], "$.tables." + name);
    else d.scalars[k].assign(d.table_size(t), 0);
  }
  if (tables)
    for (const auto& [key, _] : tables->items()) {
      bool known = false;
      for (int k = 0; k < kScalarTables; ++k) known = known || key == table_name(static_cast<ScalarTable>(k));
      if (!known) throw SchemaError("$.tables." + key, "unknown table");
    }
  d.validate();
  return d;
}

inline CrossedAlgebraData read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open data file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

inline int eval_at(const CrossedAlgebraData& d, const GTree& t, int i, const std::vector<int>& inputs) {
  const auto& n = t.nodes()[i];
  switch (n.kind) {
    case NodeKind::Unit: return d.unit;
    case NodeKind::Leaf: {
      const auto slot = static_cast<std::size_t>(n.slot - 1);
      if (slot >= inputs.size()) throw AlgebraError("no input object for slot " + std::to_string(n.slot));
      const int x = inputs[slot];
      if (x < 0 || x >= d.objects()) throw AlgebraError("input object id out of range");
      if (d.sector(x) != n.elem)
        throw AlgebraError("input " + std::to_string(n.slot) + " is not in sector " + std::to_string(n.elem));
      return x;
    }
    case NodeKind::Label: return d.act(n.elem, eval_at(d, t, i + 1, inputs));
    case NodeKind::Tensor:
      return d.tensor_of(eval_at(d, t, t.child_index(i, 0), inputs), eval_at(d, t, t.child_index(i, 1), inputs));
  }
  return 0;
}

}  // namespace detail

inline int evaluate_object(const CrossedAlgebraData& d, const GTree& t, const std::vector<int>& inputs) {
  return detail::eval_at(d, t, 0, inputs);
}

/// A signed reference to one scalar entry (index into variables()).
struct ScalarTerm {
  std::size_t variable;
  int sign;
};

/// Scalar entries used by a composite, in order. Throws IllTyped or
/// ObjectMismatch.
inline std::vector<ScalarTerm> morphism_terms(const CrossedAlgebraData& d, const MorphismWord& m,
                                              const std::vector<int>& inputs) {
  const FiniteGroup& G = d.G;
  const auto N = static_cast<std::size_t>(d.objects()), M = G.order();
  std::vector<ScalarTerm> out;
  GTree t = m.source;
  for (const auto& s : m.steps) {
    const GTree next = apply_step(G, t, s);
    // forward configuration: the source, or the target for an inverse
    const GTree& fwd = s.inverse ? next : t;
    const int i = *fwd.find(s.path);
    auto obj = [&](int k) { return static_cast<std::size_t>(detail::eval_at(d, fwd, k, inputs)); };
    auto child = [&](int k, int c) { return fwd.child_index(k, c); };
    const auto& n = fwd.nodes()[i];
    std::optional<std::pair<ScalarTable, std::size_t>> ref;
    switch (s.gen) {
      case Gen::Id: break;
      case Gen::Alpha: {
        const int xy = child(i, 0);
        ref = {{ScalarTable::Alpha, (obj(child(xy, 0)) * N + obj(child(xy, 1))) * N + obj(child(i, 1))}};
        break;
      }
      case Gen::Lambda: ref = {{ScalarTable::Lambda, obj(child(i, 1))}}; break;
      case Gen::Rho: ref = {{ScalarTable::Rho, obj(child(i, 0))}}; break;
      case Gen::Beta: {
        const int a = child(i, 0), b = child(i, 1);
        ref = {{ScalarTable::Beta, (fwd.nodes()[a].elem * N + obj(a + 1)) * N + obj(b + 1)}};
        break;
      }
      case Gen::Gamma: {
        const Elem h2 = n.elem, h1 = fwd.nodes()[i + 1].elem;
        ref = {{ScalarTable::Gamma, (h2 * M + h1) * N + obj(i + 2)}};
        break;
      }
      case Gen::Delta: ref = {{ScalarTable::Delta, obj(i + 1)}}; break;
      case Gen::Epsilon: ref = {{ScalarTable::Epsilon, n.elem}}; break;
      case Gen::C: ref = {{ScalarTable::C, obj(child(i, 0)) * N + obj(child(i, 1))}}; break;
    }
    if (s.gen != Gen::Id) {
      const int before = evaluate_object(d, t.at(s.path), inputs);
      const int after = evaluate_object(d, next.at(s.path), inputs);
      if (before != after)
        throw ObjectMismatch("step " + s.str() + ": no morphism from object " + std::to_string(before) + " to " +
                             std::to_string(after));
    }
    if (ref) {
      out.push_back({d.variable_offset(ref->first) + ref->second, s.inverse ? -1 : 1});
    }
    t = next;
  }
  return out;
}

inline int evaluate_terms(const CrossedAlgebraData& d, const std::vector<int>& vars, const std::vector<ScalarTerm>& ts) {
  long long acc = 0;
  for (const auto& x : ts) acc += x.sign * vars[x.variable];
  acc %= d.modulus;
  return static_cast<int>(acc < 0 ? acc + d.modulus : acc);
}

/// Scalar in Z/modulus of a well-typed composite.
inline int evaluate_morphism(const CrossedAlgebraData& d, const MorphismWord& m, const std::vector<int>& inputs) {
  return evaluate_terms(d, d.variables(), morphism_terms(d, m, inputs));
}

// ---------------------------------------------------------------------------
// Coherence

struct CoherenceFailure {
  std::string relation, assignment, reason;
};

struct CoherenceReport {
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::map<std::string, std::size_t> per_relation;  // instances
  std::vector<CoherenceFailure> failures;           // first few
  bool ok() const { return failure_count == 0; }
};

/// One relation instance: object variables take U (-1) or an object id,
/// label variables take group elements.
struct CoherenceInstance {
  std::string relation;
  std::string assignment;
  RelationInstance words;
  std::vector<int> inputs;
};

inline std::vector<CoherenceInstance> coherence_instances(const CrossedAlgebraData& d, std::size_t cap) {
  std::vector<CoherenceInstance> out;
  const int N = d.objects();
  for (const auto& rel : relation_table()) {
    const auto vars = relation_variables(rel);
    std::vector<int> radix;  // object vars: N+1 values, label vars: |G|
    for (std::size_t k = 0; k < vars.objects.size(); ++k) radix.push_back(N + 1);
    for (std::size_t k = 0; k < vars.labels.size(); ++k) radix.push_back(static_cast<int>(d.G.order()));
    std::vector<int> cur(radix.size(), 0);
    while (true) {
      RelationAssignment a;
      std::vector<int> inputs;
      std::string text;
      for (std::size_t k = 0; k < vars.objects.size(); ++k) {
        const int x = cur[k] - 1;
        a[vars.objects[k]] = x < 0 ? -1 : d.sector(x);
        if (x >= 0) inputs.push_back(x);
        text += (text.empty() ? "" : ",") + vars.objects[k] + "=" + (x < 0 ? std::string("U") : "#" + std::to_string(x));
      }
      for (std::size_t k = 0; k < vars.labels.size(); ++k) {
        const int v = cur[vars.objects.size() + k];
        a[vars.labels[k]] = v;
        text += (text.empty() ? "" : ",") + vars.labels[k] + "=" + d.G.element_name(static_cast<Elem>(v));
      }
      out.push_back({rel.name, text, instantiate(d.G, rel, a), std::move(inputs)});
      if (out.size() > cap) throw CapExceeded("coherence: more than " + std::to_string(cap) + " relation instances");
      std::size_t k = radix.size();
      while (k > 0 && ++cur[k - 1] == radix[k - 1]) cur[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

/// Linear form lhs - rhs of one instance; std::nullopt if the objects do
/// not match (then no scalar can repair it).
inline std::optional<std::map<std::size_t, int>> coherence_equation(const CrossedAlgebraData& d,
                                                                   const CoherenceInstance& inst) {
  std::map<std::size_t, int> eq;
  try {
    for (const auto& x : morphism_terms(d, inst.words.lhs, inst.inputs)) eq[x.variable] += x.sign;
    for (const auto& x : morphism_terms(d, inst.words.rhs, inst.inputs)) eq[x.variable] -= x.sign;
  } catch (const ObjectMismatch&) {
    return std::nullopt;
  }
  for (auto it = eq.begin(); it != eq.end();) {
    it->second = ((it->second % d.modulus) + d.modulus) % d.modulus;
    it = it->second == 0 ? eq.erase(it) : std::next(it);
  }
  return eq;
}

/// Every relation, every assignment: both sides well typed, object
/// equations hold at every step, and the two scalars agree.
inline CoherenceReport check_coherence(const CrossedAlgebraData& d, const Bounds& bounds = {}, unsigned jobs = 1,
                                       std::size_t max_witnesses = 5) {
  d.validate();
  const auto insts = coherence_instances(d, bounds.cap);
  const auto vars = d.variables();
  std::vector<std::string> reason(insts.size());
  const std::size_t chunks = std::max<std::size_t>(1, jobs * 4);
  parallel_chunks(insts.size(), jobs, chunks, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto& in = insts[i];
      try {
        const int l = evaluate_terms(d, vars, morphism_terms(d, in.words.lhs, in.inputs));
        const int r = evaluate_terms(d, vars, morphism_terms(d, in.words.rhs, in.inputs));
        if (l != r) reason[i] = "scalars differ: " + std::to_string(l) + " vs " + std::to_string(r);
      } catch (const AlgebraError& ex) {
        reason[i] = ex.what();
      } catch (const IllTyped& ex) {
        reason[i] = std::string("ill-typed: ") + ex.what();
      }
    }
  });
  CoherenceReport rep;
  rep.instances = insts.size();
  for (std::size_t i = 0; i < insts.size(); ++i) {
    ++rep.per_relation[insts[i].relation];
    if (reason[i].empty()) continue;
    ++rep.failure_count;
    if (rep.failures.size() < max_witnesses) rep.failures.push_back({insts[i].relation, insts[i].assignment, reason[i]});
  }
  return rep;
}

/// Flips one braiding entry by +1; a test mutant.
inline CrossedAlgebraData flip_braiding_scalar(CrossedAlgebraData d, std::size_t entry = 0) {
  auto& c = d.scalars[static_cast<int>(ScalarTable::C)];
  c.at(entry) = (c[entry] + 1) % d.modulus;
  return d;
}

struct SolveResult {
  std::vector<CrossedAlgebraData> solutions;
  std::size_t variables = 0, equations = 0, nodes = 0;
};

/// Every scalar assignment over Z/modulus passing check_coherence, for the
/// fixed object-level tables of `shape`. Depth-first over variables in
/// table order; an equation is tested once its last variable is set.
/// Throws CapExceeded past bounds.cap search nodes or solutions.
inline SolveResult solve_coherence(const CrossedAlgebraData& shape, const Bounds& bounds = {}) {
  shape.validate();
  const auto insts = coherence_instances(shape, bounds.cap);
  const std::size_t V = shape.variable_count();
  const int n = shape.modulus;
  std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> by_last(V);  // equations keyed by last variable
  std::set<std::map<std::size_t, int>> seen;
  SolveResult res;
  res.variables = V;
  for (const auto& in : insts) {
    const auto eq = coherence_equation(shape, in);
    if (!eq) return res;  // object-level tables already fail; no scalars help
    if (eq->empty() || !seen.insert(*eq).second) continue;
    by_last[eq->rbegin()->first].push_back({eq->begin(), eq->end()});
  }
  res.equations = seen.size();
  std::vector<int> val(V, 0);
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (++res.nodes > bounds.cap) throw CapExceeded("solve_coherence: more than " + std::to_string(bounds.cap) + " search nodes");
    if (v == V) {
      CrossedAlgebraData d = shape;
      d.set_variables(val);
      res.solutions.push_back(std::move(d));
      return;
    }
    for (int a = 0; a < n; ++a) {
      val[v] = a;
      bool ok = true;
      for (const auto& eq : by_last[v]) {
        long long s = 0;
        for (const auto& [x, c] : eq) s += static_cast<long long>(c) * val[x];
        if (s % n != 0) {
          ok = false;
          break;
        }
      }
      if (ok) go(v + 1);
    }
    val[v] = 0;
  };
  go(0);
  return res;
}

/// Object-level tables of the group example with `modulus` scalars.
inline CrossedAlgebraData group_shape(const FiniteGroup& G, int modulus, std::string spec = "") {
  return builtin_group_example(G, modulus, std::move(spec));
}

}  // namespace e2g
