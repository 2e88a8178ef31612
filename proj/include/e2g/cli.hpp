#pragma once

// Batch commands behind the e2g executable. Each command builds a JSON
// report (authoritative) and a CSV projection of it; the exit code is
// 0 (pass), 1 (check failures), 2 (usage or parse error), 3 (resource cap).

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "groupoid.hpp"
#include "operad.hpp"

namespace e2g {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitCap = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string group = "C1";
  int r = 2;
  bool r_given = false;
  std::string signature;            // "g=[..];h=.."
  std::string space;                // component | hurwitz (orbits)
  std::string suite = "relations";  // relations | operad | all (check)
  std::string mutate;               // braiding | labels
  std::string format = "json";      // json | csv
  std::string out;                  // empty: stdout
  Bounds bounds;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::size_t sample = 0;  // relations: random assignments per relation, 0 = all
  std::string builtin;     // coherence: "group"
  std::string data;        // coherence: JSON data file
  bool solve = false;
  std::string scalars = "C2";
};

struct CommandResult {
  nlohmann::ordered_json report;
  std::vector<std::vector<std::string>> csv;  // first row is the header
  int exit_code = kExitPass;
};

/// "arity=3,order=6,cap=1000000"; missing keys keep their defaults.
inline Bounds parse_bounds(const std::string& text) {
  Bounds b;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw UsageError("--bounds: expected key=value at column " + std::to_string(pos + 1));
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (!val.empty() && std::isdigit(static_cast<unsigned char>(val[0]))) v = std::stoull(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != val.size())
      throw UsageError("--bounds: bad number '" + val + "' at column " + std::to_string(pos + eq + 2));
    if (key == "arity") b.max_arity = static_cast<int>(v);
    else if (key == "order") b.max_order = v;
    else if (key == "cap") b.cap = v;
    else throw UsageError("--bounds: unknown key '" + key + "' at column " + std::to_string(pos + 1));
    pos = end + 1;
  }
  if (b.max_arity < 0 || b.max_arity > kMaxOpArity)
    throw UsageError("--bounds: arity must be in 0.." + std::to_string(kMaxOpArity));
  return b;
}

/// "g=[1,(12)];h=0": input colors and output color, by index or name.
inline ColorSignature parse_signature(const FiniteGroup& G, const std::string& text) {
  const auto resolve = element_resolver(G);
  auto elem = [&](std::string tok, std::size_t col) {
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    try {
      return resolve(tok);
    } catch (const std::exception&) {
      throw UsageError("--signature: unknown element '" + tok + "' at column " + std::to_string(col + 1));
    }
  };
  ColorSignature sig;
  bool have_g = false, have_h = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--signature: expected key=value at column " + std::to_string(pos + 1));
    const std::string key = item.substr(0, eq);
    const std::size_t vpos = pos + eq + 1;
    if (key == "g") {
      if (item.size() < eq + 3 || item[eq + 1] != '[' || item.back() != ']')
        throw UsageError("--signature: g needs a bracketed list at column " + std::to_string(vpos + 1));
      std::size_t p = vpos + 1;
      const std::size_t close = pos + item.size() - 1;
      while (p < close) {
        const std::size_t comma = std::min(text.find(',', p), close);
        if (comma == p) throw UsageError("--signature: empty element at column " + std::to_string(p + 1));
        sig.inputs.push_back(elem(text.substr(p, comma - p), p));
        p = comma + 1;
      }
      have_g = true;
    } else if (key == "h") {
      sig.output = elem(item.substr(eq + 1), vpos);
      have_h = true;
    } else {
      throw UsageError("--signature: unknown key '" + key + "' at column " + std::to_string(pos + 1));
    }
    pos = end + 1;
  }
  if (!have_g || !have_h) throw UsageError("--signature: needs both g=[..] and h=..");
  return sig;
}

namespace detail {

inline nlohmann::ordered_json header(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["group"] = c.group;
  j["seed"] = c.seed;
  return j;
}

inline std::string tuple_text(const Tuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
  return s;
}

inline std::vector<int> one_based(const Permutation& p) {
  std::vector<int> v;
  for (std::size_t i = 0; i < p.size(); ++i) v.push_back(p[i] + 1);
  return v;
}

}  // namespace detail

inline CommandResult cmd_orbits(const RunConfig& c) {
  const FiniteGroup G = make_group(c.group);
  CommandResult res;
  auto& j = res.report = detail::header(c);
  std::string space = c.space.empty() ? (c.signature.empty() ? "hurwitz" : "component") : c.space;
  OrbitReport rep;
  if (space == "component") {
    if (c.signature.empty()) throw UsageError("orbits: --space component needs --signature");
    const auto sig = parse_signature(G, c.signature);
    if (c.r_given && static_cast<int>(sig.inputs.size()) != c.r)
      throw UsageError("orbits: --r does not match the signature length");
    j["space"] = space;
    j["r"] = sig.inputs.size();
    j["signature"] = {{"inputs", sig.inputs}, {"output", sig.output}};
    rep = component_orbits(G, sig, c.jobs, c.bounds.cap);
  } else if (space == "hurwitz") {
    if (!c.signature.empty()) throw UsageError("orbits: --signature applies to --space component");
    if (c.r < 0) throw UsageError("orbits: --r must be nonnegative");
    j["space"] = space;
    j["r"] = c.r;
    rep = hurwitz_space_orbits(G, c.r, c.jobs, c.bounds.cap);
  } else {
    throw UsageError("orbits: unknown --space '" + space + "'");
  }
  j["objects"] = rep.objects;
  j["orbits"] = rep.orbits();
  auto list = nlohmann::ordered_json::array();
  res.csv.push_back({"orbit", "size", "sigma", "b"});
  for (std::size_t k = 0; k < rep.orbits(); ++k) {
    const auto& x = rep.representatives[k];
    nlohmann::ordered_json o;
    o["size"] = rep.orbit_sizes[k];
    o["sigma"] = detail::one_based(x.sigma);
    o["b"] = x.b;
    list.push_back(o);
    std::vector<int> s = detail::one_based(x.sigma);
    res.csv.push_back({std::to_string(k), std::to_string(rep.orbit_sizes[k]), detail::tuple_text(Tuple(s.begin(), s.end())),
                       detail::tuple_text(x.b)});
  }
  j["representatives"] = list;
  return res;
}

/// Relations on a random sample of assignments (mt19937_64 seeded by c.seed).
inline RelationReport sample_relation(const FiniteGroup& G, const RelationSpec& rel, const RunConfig& c,
                                      bool flip) {
  const auto vars = relation_variables(rel);
  std::mt19937_64 rng(c.seed);
  RelationReport rep{rel.name, 0, 0, {}};
  for (std::size_t k = 0; k < c.sample; ++k) {
    RelationAssignment a;
    for (const auto& o : vars.objects)
      a[o] = static_cast<int>(rng() % (G.order() + 1)) - 1;
    for (const auto& l : vars.labels) a[l] = static_cast<int>(rng() % G.order());
    const auto chk = check_relation(G, rel, a, flip);
    ++rep.assignments_checked;
    if (!chk.ok) {
      ++rep.failure_count;
      if (rep.failures.size() < 5) rep.failures.push_back({assignment_str(a), chk.reason});
    }
  }
  return rep;
}

inline CommandResult cmd_check(const RunConfig& c) {
  const FiniteGroup G = make_group(c.group);
  if (c.suite != "relations" && c.suite != "operad" && c.suite != "all")
    throw UsageError("check: unknown --suite '" + c.suite + "'");
  if (!c.mutate.empty() && c.mutate != "braiding" && c.mutate != "labels")
    throw UsageError("check: unknown --mutate '" + c.mutate + "'");
  CommandResult res;
  auto& j = res.report = detail::header(c);
  j["suite"] = c.suite;
  j["mutate"] = c.mutate.empty() ? nullptr : nlohmann::ordered_json(c.mutate);
  res.csv.push_back({"suite", "name", "instances", "failures"});
  std::size_t failures = 0;
  if (c.suite != "operad") {
    RelationOptions opt;
    opt.flip_braiding = c.mutate == "braiding";
    opt.cap = c.bounds.cap;
    opt.jobs = c.jobs;
    j["sample"] = c.sample;
    auto list = nlohmann::ordered_json::array();
    for (const auto& rel : relation_table()) {
      const auto rep = c.sample ? sample_relation(G, rel, c, opt.flip_braiding) : check_relation_all(G, rel, opt);
      nlohmann::ordered_json r;
      r["relation"] = rep.relation;
      r["instances"] = rep.assignments_checked;
      r["failures"] = rep.failure_count;
      auto w = nlohmann::ordered_json::array();
      for (const auto& f : rep.failures) w.push_back({{"assignment", f.assignment}, {"reason", f.reason}});
      r["witnesses"] = w;
      list.push_back(r);
      res.csv.push_back({"relations", rep.relation, std::to_string(rep.assignments_checked), std::to_string(rep.failure_count)});
      failures += rep.failure_count;
    }
    j["relations"] = list;
  }
  if (c.suite != "relations") {
    if (G.order() > c.bounds.max_order)
      throw CapExceeded("group order " + std::to_string(G.order()) + " above bound " + std::to_string(c.bounds.max_order));
    j["bounds"] = {{"arity", c.bounds.max_arity}, {"order", c.bounds.max_order}, {"cap", c.bounds.cap}};
    auto reps = check_operad_axioms(NormalFormModel{&G, c.mutate != "labels"}, c.bounds, c.jobs);
    reps.push_back(check_fast_path(G, c.bounds, c.jobs));
    auto list = nlohmann::ordered_json::array();
    for (const auto& rep : reps) {
      nlohmann::ordered_json r;
      r["axiom"] = rep.axiom;
      r["instances"] = rep.instances;
      r["failures"] = rep.failures;
      r["witnesses"] = rep.witnesses;
      list.push_back(r);
      res.csv.push_back({"operad", rep.axiom, std::to_string(rep.instances), std::to_string(rep.failures)});
      failures += rep.failures;
    }
    j["operad"] = list;
  }
  j["pass"] = failures == 0;
  res.exit_code = failures == 0 ? kExitPass : kExitFail;
  return res;
}

inline CommandResult cmd_grothendieck(const RunConfig& c) {
  const FiniteGroup G = make_group(c.group);
  if (c.r < 0) throw UsageError("grothendieck: --r must be nonnegative");
  const std::size_t objects = G.order() == 0 ? 0 : hurwitz_space_objects(G, static_cast<std::size_t>(c.r)).size();
  if (objects > c.bounds.cap) throw CapExceeded("grothendieck: " + std::to_string(objects) + " objects above cap");
  const auto rep = compare_hurwitz_grothendieck(G, c.r);
  CommandResult res;
  auto& j = res.report = detail::header(c);
  j["r"] = c.r;
  j["objects"] = rep.objects;
  j["objects_match"] = rep.objects_match;
  j["generators"] = {{"checked", rep.generators_checked}, {"mismatches", rep.generator_mismatches}};
  j["inverses"] = {{"checked", rep.inverse_checks}, {"mismatches", rep.inverse_mismatches}};
  j["pairs"] = {{"checked", rep.pairs_checked}, {"mismatches", rep.pair_mismatches}};
  j["witnesses"] = rep.witnesses;
  j["match"] = rep.ok();
  res.csv = {{"check", "checked", "mismatches"},
             {"objects", std::to_string(rep.objects), rep.objects_match ? "0" : "1"},
             {"generators", std::to_string(rep.generators_checked), std::to_string(rep.generator_mismatches)},
             {"inverses", std::to_string(rep.inverse_checks), std::to_string(rep.inverse_mismatches)},
             {"pairs", std::to_string(rep.pairs_checked), std::to_string(rep.pair_mismatches)}};
  res.exit_code = rep.ok() ? kExitPass : kExitFail;
  return res;
}

/// "C2", "Z2" or "2" -> 2.
inline int parse_scalars(const std::string& s) {
  std::string t = s;
  if (!t.empty() && (t[0] == 'C' || t[0] == 'Z')) t = t.substr(1);
  if (t.rfind("/", 0) == 0) t = t.substr(1);
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size() || n < 2) throw UsageError("--scalars: expected C<n>, Z<n> or n with n >= 2, got '" + s + "'");
  return n;
}

inline CommandResult cmd_coherence(const RunConfig& c) {
  // --solve without a source uses the group example's object tables
  if (!c.builtin.empty() && !c.data.empty()) throw UsageError("coherence: --builtin and --data exclude each other");
  if (c.builtin.empty() && c.data.empty() && !c.solve) throw UsageError("coherence: give --builtin group or --data FILE");
  if (!c.builtin.empty() && c.builtin != "group") throw UsageError("coherence: unknown --builtin '" + c.builtin + "'");
  if (!c.mutate.empty() && c.mutate != "braiding") throw UsageError("coherence: unknown --mutate '" + c.mutate + "'");
  CrossedAlgebraData d = c.data.empty() ? builtin_group_example(make_group(c.group), parse_scalars(c.scalars), c.group)
                                        : read_algebra_file(c.data);
  if (c.mutate == "braiding") d = flip_braiding_scalar(std::move(d));
  CommandResult res;
  RunConfig hc = c;
  hc.group = d.group_spec;
  auto& j = res.report = detail::header(hc);
  j["source"] = c.data.empty() ? "builtin:group" : c.data;
  j["scalars"] = "Z/" + std::to_string(d.modulus);
  j["objects"] = d.objects();
  if (!c.solve) {
    const auto rep = check_coherence(d, c.bounds, c.jobs);
    j["mode"] = "check";
    j["instances"] = rep.instances;
    j["failures"] = rep.failure_count;
    nlohmann::ordered_json per;
    for (const auto& [k, v] : rep.per_relation) per[k] = v;
    j["per_relation"] = per;
    auto w = nlohmann::ordered_json::array();
    for (const auto& f : rep.failures)
      w.push_back({{"relation", f.relation}, {"assignment", f.assignment}, {"reason", f.reason}});
    j["witnesses"] = w;
    j["pass"] = rep.ok();
    res.csv.push_back({"relation", "instances"});
    for (const auto& [k, v] : rep.per_relation) res.csv.push_back({k, std::to_string(v)});
    res.exit_code = rep.ok() ? kExitPass : kExitFail;
    return res;
  }
  const auto sol = solve_coherence(d, c.bounds);
  std::size_t bad = 0;
  for (const auto& s : sol.solutions) bad += check_coherence(s, c.bounds, c.jobs).ok() ? 0 : 1;
  j["mode"] = "solve";
  j["variables"] = sol.variables;
  j["equations"] = sol.equations;
  j["search_nodes"] = sol.nodes;
  j["solutions"] = sol.solutions.size();
  j["reverified"] = bad == 0;
  auto list = nlohmann::ordered_json::array();
  res.csv.push_back({"solution", "scalars"});
  for (std::size_t k = 0; k < sol.solutions.size(); ++k) {
    const auto v = sol.solutions[k].variables();
    list.push_back(v);
    std::string flat;
    for (int x : v) flat += std::to_string(x);
    res.csv.push_back({std::to_string(k), flat});
  }
  j["tables"] = list;
  res.exit_code = bad == 0 ? kExitPass : kExitFail;
  return res;
}

inline CommandResult run_command(const RunConfig& c) {
  if (c.command == "orbits") return cmd_orbits(c);
  if (c.command == "check") return cmd_check(c);
  if (c.command == "grothendieck") return cmd_grothendieck(c);
  if (c.command == "coherence") return cmd_coherence(c);
  throw UsageError("unknown command '" + c.command + "'");
}

inline std::string csv_text(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const bool quote = row[i].find_first_of(",\"\n") != std::string::npos;
      std::string cell = row[i];
      if (quote) {
        std::string q = "\"";
        for (char ch : cell) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        cell = q + "\"";
      }
      out += (i ? "," : "") + cell;
    }
    out += "\n";
  }
  return out;
}

inline std::string render(const CommandResult& r, const std::string& format) {
  if (format == "csv") return csv_text(r.csv);
  return r.report.dump(2) + "\n";
}

/// Runs a command and maps exceptions to exit codes; the message of a
/// usage or cap error goes to `err`.
inline int run_and_render(const RunConfig& c, std::string& text, std::string& err) {
  try {
    if (c.format != "json" && c.format != "csv") throw UsageError("unknown --format '" + c.format + "'");
    const auto r = run_command(c);
    text = render(r, c.format);
    return r.exit_code;
  } catch (const CapExceeded& e) {
    err = std::string("resource cap: ") + e.what();
    return kExitCap;
  } catch (const std::invalid_argument& e) {  // UsageError, ParseError, SignatureMismatch
    err = std::string("error: ") + e.what();
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err = std::string("error: ") + e.what();
    return kExitUsage;
  } catch (const GroupError& e) {
    err = std::string("error: ") + e.what();
    return kExitUsage;
  } catch (const AlgebraError& e) {
    err = std::string("error: ") + e.what();
    return kExitUsage;
  } catch (const TreeError& e) {
    err = std::string("error: ") + e.what();
    return kExitUsage;
  }
}

}  // namespace e2g
