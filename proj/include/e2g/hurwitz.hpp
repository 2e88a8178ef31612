#pragma once

// Hurwitz moves, decorated tuples (sigma, b), their braid actions, and
// orbit counting.
//
// Conventions:
//  * sigma maps input slot -> position (0-based), so braids act on it by
//    left multiplication pi(w) o sigma.
//  * braid_act is the Hurwitz-space action: b is a tuple of holonomies
//    indexed by position and every letter applies the Hurwitz formula.
//  * component_act is the action on operad component objects: b is indexed
//    by input slot, and a positive crossing of slots s (left) and t (right)
//    replaces b_t by (b_s g_s b_s^-1) b_t. The holonomy map
//    hol(x)_p = b_u g_u b_u^-1 with u = sigma^-1(p) intertwines the two.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "braid.hpp"
#include "group.hpp"
#include "parallel.hpp"
#include "permutation.hpp"

namespace e2g {

using Tuple = std::vector<Elem>;

struct DecoratedTuple {
  Permutation sigma;
  Tuple b;
  auto operator<=>(const DecoratedTuple&) const = default;
  bool operator==(const DecoratedTuple&) const = default;
  std::string str() const {
    std::string s = "sigma=" + sigma.one_line() + "; b=[";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + "]";
  }
};

struct ColorSignature {
  Tuple inputs;
  Elem output = 0;
  bool operator==(const ColorSignature&) const = default;
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace e2g

template <>
struct std::hash<e2g::DecoratedTuple> {
  std::size_t operator()(const e2g::DecoratedTuple& x) const noexcept {
    std::size_t h = std::hash<e2g::Permutation>{}(x.sigma);
    for (auto v : x.b) h = h * 1000003u + v;
    return h;
  }
};

namespace e2g {

/// Parses `sigma=[2,1]; b=[3,0]`.
inline DecoratedTuple parse_tuple(const std::string& text) {
  auto list_after = [&](const std::string& key) {
    const auto k = text.find(key);
    if (k == std::string::npos) throw std::invalid_argument("tuple: missing '" + key + "'");
    const auto open = text.find('[', k);
    const auto close = text.find(']', open);
    if (open == std::string::npos || close == std::string::npos) {
      throw std::invalid_argument("tuple: '" + key + "' needs a bracketed list at column " +
                                  std::to_string(k + 1));
    }
    std::vector<int> out;
    std::string cur;
    for (std::size_t i = open + 1; i <= close; ++i) {
      const char ch = text[i];
      if (ch == ',' || ch == ']') {
        if (!cur.empty()) out.push_back(std::stoi(cur));
        cur.clear();
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur += ch;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument("tuple: unexpected '" + std::string(1, ch) + "' at column " +
                                    std::to_string(i + 1));
      }
    }
    return out;
  };
  DecoratedTuple x;
  x.sigma = Permutation::from_one_line(list_after("sigma"));
  for (int v : list_after("b")) x.b.push_back(static_cast<Elem>(v));
  if (x.b.size() != x.sigma.size()) throw std::invalid_argument("tuple: sigma and b differ in length");
  return x;
}

/// (.., g_j, g_{j+1}, ..) -> (.., g_j g_{j+1} g_j^-1, g_j, ..); j is 1-based.
inline Tuple hurwitz_generator(const FiniteGroup& G, int j, Tuple g) {
  if (j < 1 || j + 1 > static_cast<int>(g.size())) throw std::out_of_range("hurwitz_generator: j out of range");
  const Elem a = g[j - 1], b = g[j];
  g[j - 1] = G.conj(a, b);
  g[j] = a;
  return g;
}

/// Inverse move: (x, y) -> (y, y^-1 x y).
inline Tuple hurwitz_generator_inverse(const FiniteGroup& G, int j, Tuple g) {
  if (j < 1 || j + 1 > static_cast<int>(g.size())) throw std::out_of_range("hurwitz_generator: j out of range");
  const Elem x = g[j - 1], y = g[j];
  g[j - 1] = y;
  g[j] = G.conj(G.inv(y), x);
  return g;
}

namespace detail {

inline void check_size(const BraidWord& w, const DecoratedTuple& x) {
  if (static_cast<std::size_t>(w.strands) != x.b.size() || x.sigma.size() != x.b.size()) {
    throw std::invalid_argument("braid strand count does not match tuple size");
  }
}

inline void hurwitz_letter(const FiniteGroup& G, int l, DecoratedTuple& x) {
  const int k = std::abs(l);
  x.b = l > 0 ? hurwitz_generator(G, k, std::move(x.b)) : hurwitz_generator_inverse(G, k, std::move(x.b));
  x.sigma.swap_values(static_cast<std::size_t>(k - 1));
}

inline void crossed_letter(const FiniteGroup& G, int l, DecoratedTuple& x, const Tuple& g) {
  const auto p = static_cast<std::size_t>(std::abs(l) - 1);
  std::size_t left = 0, right = 0;
  for (std::size_t i = 0; i < x.sigma.size(); ++i) {
    if (x.sigma[i] == static_cast<int>(p)) left = i;
    if (x.sigma[i] == static_cast<int>(p + 1)) right = i;
  }
  if (l > 0) {
    x.b[right] = G.mul(G.conj(x.b[left], g[left]), x.b[right]);
  } else {
    x.b[left] = G.mul(G.inv(G.conj(x.b[right], g[right])), x.b[left]);
  }
  x.sigma.swap_values(p);
}

}  // namespace detail

/// Hurwitz-space action; the rightmost letter acts first.
inline DecoratedTuple braid_act(const FiniteGroup& G, const BraidWord& w, DecoratedTuple x) {
  detail::check_size(w, x);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) detail::hurwitz_letter(G, *it, x);
  return x;
}

/// Action on component objects with input colors g; rightmost letter first.
inline DecoratedTuple component_act(const FiniteGroup& G, const BraidWord& w, DecoratedTuple x,
                                    const Tuple& g) {
  detail::check_size(w, x);
  if (g.size() != x.b.size()) throw std::invalid_argument("component_act: color count mismatch");
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) detail::crossed_letter(G, *it, x, g);
  return x;
}

inline DecoratedTuple conjugate_act(const FiniteGroup& G, Elem h, DecoratedTuple x) {
  for (auto& v : x.b) v = G.conj(h, v);
  return x;
}

/// Inputs per slot i are b_{sigma(i)}; the output is b_1 ... b_r by position.
inline ColorSignature boundary_colors(const FiniteGroup& G, const DecoratedTuple& x) {
  ColorSignature c;
  for (std::size_t i = 0; i < x.b.size(); ++i) c.inputs.push_back(x.b[x.sigma[i]]);
  c.output = G.product(x.b);
  return c;
}

/// Positional holonomies of a component object.
inline DecoratedTuple holonomy(const FiniteGroup& G, const DecoratedTuple& x, const Tuple& g) {
  DecoratedTuple y{x.sigma, Tuple(x.b.size())};
  for (std::size_t u = 0; u < x.b.size(); ++u) y.b[x.sigma[u]] = G.conj(x.b[u], g[u]);
  return y;
}

/// prod over positions p of b_u g_u b_u^-1, u = sigma^-1(p).
inline Elem color_condition(const FiniteGroup& G, const Permutation& sigma, const Tuple& b,
                            const Tuple& g) {
  const Permutation inv = sigma.inverse();
  Elem h = FiniteGroup::identity();
  for (std::size_t p = 0; p < b.size(); ++p) {
    const auto u = static_cast<std::size_t>(inv[p]);
    h = G.mul(h, G.conj(b[u], g[u]));
  }
  return h;
}

/// All tuples in G^r in lexicographic index order.
inline std::vector<Tuple> all_tuples(std::size_t order, std::size_t r) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= order;
  std::vector<Tuple> out;
  out.reserve(total);
  Tuple t(r, 0);
  for (std::size_t n = 0; n < total; ++n) {
    out.push_back(t);
    for (std::size_t i = r; i-- > 0;) {
      if (++t[i] < order) break;
      t[i] = 0;
    }
  }
  return out;
}

/// Objects (sigma, b) whose color condition gives sig.output, sorted.
inline std::vector<DecoratedTuple> component_objects(const FiniteGroup& G, const ColorSignature& sig) {
  const std::size_t r = sig.inputs.size();
  std::vector<DecoratedTuple> out;
  const auto tuples = all_tuples(G.order(), r);
  for (const auto& sigma : all_permutations(r))
    for (const auto& b : tuples)
      if (color_condition(G, sigma, b, sig.inputs) == sig.output) out.push_back({sigma, b});
  return out;
}

inline std::vector<DecoratedTuple> hurwitz_space_objects(const FiniteGroup& G, std::size_t r) {
  std::vector<DecoratedTuple> out;
  const auto tuples = all_tuples(G.order(), r);
  for (const auto& sigma : all_permutations(r))
    for (const auto& b : tuples) out.push_back({sigma, b});
  return out;
}

template <class T>
using Generator = std::function<T(const T&)>;

template <class T>
struct Orbit {
  std::vector<T> members;  // sorted
  const T& representative() const { return members.front(); }
};

/// BFS closure of {x} under the generators; members sorted.
template <class T>
Orbit<T> orbit(const T& x, const std::vector<Generator<T>>& gens, std::size_t cap = 0) {
  std::unordered_set<T> seen{x};
  std::vector<T> frontier{x};
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const auto& y : frontier)
      for (const auto& g : gens) {
        T z = g(y);
        if (seen.insert(z).second) {
          if (cap && seen.size() > cap) throw CapExceeded("orbit exceeds cap of " + std::to_string(cap));
          next.push_back(std::move(z));
        }
      }
    frontier = std::move(next);
  }
  Orbit<T> o{{seen.begin(), seen.end()}};
  std::sort(o.members.begin(), o.members.end());
  return o;
}

struct OrbitReport {
  std::size_t objects = 0;
  std::vector<std::size_t> orbit_sizes;          // ordered by representative
  std::vector<DecoratedTuple> representatives;  // lexicographic minimum of each orbit
  std::size_t orbits() const { return representatives.size(); }
};

/// Orbit decomposition of a finite invariant set. Orbits are discovered from
/// the smallest unvisited element, so the report does not depend on `jobs`.
inline OrbitReport orbit_decomposition(const std::vector<DecoratedTuple>& objects,
                                       const std::vector<Generator<DecoratedTuple>>& gens,
                                       unsigned jobs = 1, std::size_t cap = 0) {
  if (cap && objects.size() > cap) {
    throw CapExceeded("object set of size " + std::to_string(objects.size()) + " exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<DecoratedTuple> sorted = objects;
  std::sort(sorted.begin(), sorted.end());
  std::unordered_map<DecoratedTuple, std::size_t> index;
  index.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], i);

  // Precompute generator images in parallel chunks; BFS itself is serial.
  std::vector<std::size_t> image(sorted.size() * gens.size());
  parallel_chunks(sorted.size(), jobs, jobs * 4, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        auto it = index.find(gens[k](sorted[i]));
        if (it == index.end()) throw std::logic_error("generator leaves the object set at " + sorted[i].str());
        image[i * gens.size() + k] = it->second;
      }
  });

  OrbitReport rep;
  rep.objects = sorted.size();
  std::vector<bool> seen(sorted.size(), false);
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::vector<std::size_t> queue{s};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::size_t t = image[queue[q] * gens.size() + k];
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    rep.representatives.push_back(sorted[s]);
    rep.orbit_sizes.push_back(queue.size());
  }
  return rep;
}

inline std::vector<Generator<DecoratedTuple>> component_generators(const FiniteGroup& G, const Tuple& g) {
  std::vector<Generator<DecoratedTuple>> gens;
  const int r = static_cast<int>(g.size());
  for (int j = 1; j < r; ++j)
    for (int sgn : {1, -1})
      gens.push_back([&G, g, r, l = sgn * j](const DecoratedTuple& x) {
        return component_act(G, BraidWord(r, {l}), x, g);
      });
  return gens;
}

inline std::vector<Generator<DecoratedTuple>> hurwitz_space_generators(const FiniteGroup& G, int r) {
  std::vector<Generator<DecoratedTuple>> gens;
  for (int j = 1; j < r; ++j)
    for (int sgn : {1, -1})
      gens.push_back([&G, r, l = sgn * j](const DecoratedTuple& x) { return braid_act(G, BraidWord(r, {l}), x); });
  for (Elem h = 1; h < G.order(); ++h)
    gens.push_back([&G, h](const DecoratedTuple& x) { return conjugate_act(G, h, x); });
  return gens;
}

inline OrbitReport component_orbits(const FiniteGroup& G, const ColorSignature& sig, unsigned jobs = 1,
                                    std::size_t cap = 0) {
  return orbit_decomposition(component_objects(G, sig), component_generators(G, sig.inputs), jobs, cap);
}

inline OrbitReport hurwitz_space_orbits(const FiniteGroup& G, int r, unsigned jobs = 1, std::size_t cap = 0) {
  return orbit_decomposition(hurwitz_space_objects(G, static_cast<std::size_t>(r)),
                             hurwitz_space_generators(G, r), jobs, cap);
}

inline std::size_t pi0_component(const FiniteGroup& G, const ColorSignature& sig) {
  return component_orbits(G, sig).orbits();
}

inline std::size_t pi0_hurwitz_space(const FiniteGroup& G, int r) { return hurwitz_space_orbits(G, r).orbits(); }

}  // namespace e2g
