#pragma once

// Generators of trees and morphism words shared by the unit tests and the
// acceptance runner.

#include <functional>
#include <random>
#include <vector>

#include "e2g/morphism.hpp"

namespace support {

using namespace e2g;

/// All binary shapes with n leaves; leaves are numbered 0..n-1 left to right
/// and stored as placeholder leaves with slot = index + 1.
inline std::vector<GTree> shapes(int n, int first = 1) {
  if (n == 1) return {GTree::leaf(first, 0)};
  std::vector<GTree> out;
  for (int k = 1; k < n; ++k)
    for (const auto& a : shapes(k, first))
      for (const auto& b : shapes(n - k, first + k)) out.push_back(GTree::tensor(a, b));
  return out;
}

/// Rebuild t, mapping every leaf through f (which may return any subtree).
inline GTree map_leaves(const GTree& t, const std::function<GTree(const TreeNode&)>& f) {
  std::function<GTree(int)> rec = [&](int i) -> GTree {
    const auto& n = t.nodes()[i];
    switch (n.kind) {
      case NodeKind::Unit: return GTree::unit();
      case NodeKind::Leaf: return f(n);
      case NodeKind::Label: return GTree::label(n.elem, rec(i + 1));
      case NodeKind::Tensor: return GTree::tensor(rec(t.child_index(i, 0)), rec(t.child_index(i, 1)));
    }
    return GTree::unit();
  };
  return rec(0);
}

/// Random tree with r inputs (random slot order), `units` unit leaves and
/// labels on edges with probability p_label.
inline GTree random_tree(const FiniteGroup& G, std::mt19937& rng, int r, int units, double p_label) {
  const int n = r + units;
  if (n == 0) return GTree::unit();
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto elem = [&] { return static_cast<Elem>(rng() % G.order()); };
  std::function<GTree(int)> build = [&](int k) -> GTree {
    GTree t = k == 1 ? GTree::leaf(0, 0) : [&] {
      const int left = 1 + static_cast<int>(rng() % (k - 1));
      return GTree::tensor(build(left), build(k - left));
    }();
    while (coin(rng) < p_label) t = GTree::label(elem(), t);
    return t;
  };
  GTree shape = build(n);
  std::vector<int> kinds(n, 0);  // 0 = unit, else slot
  std::vector<int> slots(r);
  for (int i = 0; i < r; ++i) slots[i] = i + 1;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<int> where(n);
  for (int i = 0; i < n; ++i) where[i] = i;
  std::shuffle(where.begin(), where.end(), rng);
  for (int i = 0; i < r; ++i) kinds[where[i]] = slots[i];
  int idx = 0;
  return map_leaves(shape, [&](const TreeNode&) {
    const int k = kinds[idx++];
    return k == 0 ? GTree::unit() : GTree::leaf(k, elem());
  });
}

/// Every generator step applicable somewhere in t (inverse-introducing
/// steps get random arguments).
inline std::vector<Step> applicable_steps(const FiniteGroup& G, const GTree& t, std::mt19937& rng,
                                          bool allow_growth) {
  std::vector<Step> out;
  std::function<void(int, std::string&)> visit = [&](int i, std::string& path) {
    const Gen gens[] = {Gen::Alpha, Gen::Lambda, Gen::Rho, Gen::C, Gen::Beta, Gen::Gamma, Gen::Delta, Gen::Epsilon};
    for (Gen g : gens)
      for (bool inv : {false, true}) {
        Step s{g, inv, {}, path};
        const bool grows = inv && (g == Gen::Lambda || g == Gen::Rho || g == Gen::Delta || g == Gen::Epsilon);
        if (grows && !allow_growth) continue;
        if (inv && g == Gen::Gamma) {
          const Elem h2 = static_cast<Elem>(rng() % G.order());
          const Elem h = t.nodes()[i].elem;
          s.args = {h2, G.mul(G.inv(h2), h)};
        }
        if (inv && g == Gen::Epsilon) s.args = {static_cast<Elem>(rng() % G.order())};
        try {
          apply_step(G, t, s);
          out.push_back(s);
        } catch (const IllTyped&) {
        }
      }
    for (int k = 0; k < 2; ++k) {
      const int c = t.child_index(i, k);
      if (c < 0) continue;
      path.push_back(static_cast<char>('0' + k));
      visit(c, path);
      path.pop_back();
    }
  };
  std::string p;
  visit(0, p);
  return out;
}

inline MorphismWord random_walk(const FiniteGroup& G, const GTree& t, std::mt19937& rng, int len) {
  MorphismWord m{t, {}};
  GTree cur = t;
  for (int k = 0; k < len; ++k) {
    const bool grow = cur.node_count() < 24;
    auto steps = applicable_steps(G, cur, rng, grow);
    if (steps.empty()) break;
    const Step s = steps[rng() % steps.size()];
    cur = apply_step(G, cur, s);
    m.steps.push_back(s);
  }
  return m;
}

}  // namespace support
