#pragma once

// Finite presentations of groupoids whose morphisms act on objects, the
// Grothendieck construction of a groupoid-indexed diagram of groupoids, and
// the comparison of the Hurwitz diagram against the direct (c, h) model.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "hurwitz.hpp"

namespace e2g {

template <class Obj, class Mor>
struct FiniteGroupoidPresentation {
  struct Arrow {
    std::string label;
    std::size_t source;
    Mor mor;
    std::size_t target;
  };
  std::vector<Obj> objects;  // sorted
  std::vector<Arrow> generators;
  // compose(m1, m0, x) is m1 o m0 where m0 starts at x.
  std::function<Mor(const Mor& later, const Mor& earlier, const Obj& source)> compose;
  std::function<Obj(const Mor&, const Obj&)> target;
  std::function<Mor(const Mor&, const Obj& source)> inverse;
  std::function<bool(const Mor&, const Mor&)> mor_equal;

  std::size_t index_of(const Obj& o) const {
    auto it = std::lower_bound(objects.begin(), objects.end(), o);
    if (it == objects.end() || !(*it == o)) throw std::logic_error("object outside the presentation");
    return static_cast<std::size_t>(it - objects.begin());
  }
};

class FunctorialityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Diagram Gamma: base groupoid -> groupoids. Base and fiber groupoids are
/// action groupoids given by generating morphisms and an action on objects.
template <class Y, class BM, class X, class FM>
struct GroupoidDiagram {
  std::vector<Y> base_objects;
  std::vector<std::pair<std::string, BM>> base_generators;
  std::function<Y(const BM&, const Y&)> base_target;
  std::function<BM(const BM&, const BM&)> base_compose;  // (g1, g0) -> g1 g0
  std::function<BM(const BM&)> base_inverse;
  std::function<bool(const BM&, const BM&)> base_equal;

  std::function<std::vector<X>(const Y&)> fiber_objects;
  std::vector<std::pair<std::string, FM>> fiber_generators;
  std::function<X(const FM&, const X&)> fiber_target;
  std::function<FM(const FM&, const FM&)> fiber_compose;
  std::function<FM(const FM&)> fiber_inverse;
  std::function<bool(const FM&, const FM&)> fiber_equal;

  // Gamma(g) for g: y -> y', on objects and on morphisms of the fiber over y.
  std::function<X(const BM&, const Y&, const X&)> functor_obj;
  std::function<FM(const BM&, const Y&, const FM&)> functor_mor;
};

/// Objects (y, x); a morphism (g, f) with f: x -> x' over y goes to
/// (g.y, Gamma(g)(x')). Composite (g1, f1) o (g0, f0) = (g1 g0, Gamma(g0)^-1(f1) o f0).
template <class Y, class BM, class X, class FM>
FiniteGroupoidPresentation<std::pair<Y, X>, std::pair<BM, FM>> grothendieck(
    const GroupoidDiagram<Y, BM, X, FM>& D, const BM& base_id, const FM& fiber_id) {
  using Obj = std::pair<Y, X>;
  using Mor = std::pair<BM, FM>;
  FiniteGroupoidPresentation<Obj, Mor> P;

  // Functoriality on generators: Gamma(g) must carry f: x -> x' to a
  // morphism Gamma(g)x -> Gamma(g)x'.
  for (const auto& y : D.base_objects)
    for (const auto& [gl, g] : D.base_generators)
      for (const auto& x : D.fiber_objects(y))
        for (const auto& [fl, f] : D.fiber_generators) {
          const X lhs = D.functor_obj(g, y, D.fiber_target(f, x));
          const X rhs = D.fiber_target(D.functor_mor(g, y, f), D.functor_obj(g, y, x));
          if (!(lhs == rhs)) throw FunctorialityError("functor " + gl + " does not preserve " + fl);
        }

  for (const auto& y : D.base_objects)
    for (const auto& x : D.fiber_objects(y)) P.objects.push_back({y, x});
  std::sort(P.objects.begin(), P.objects.end());

  P.target = [D](const Mor& m, const Obj& o) -> Obj {
    const X x1 = D.fiber_target(m.second, o.second);
    return {D.base_target(m.first, o.first), D.functor_obj(m.first, o.first, x1)};
  };
  P.compose = [D](const Mor& m1, const Mor& m0, const Obj& o) -> Mor {
    const Y y1 = D.base_target(m0.first, o.first);
    const FM pulled = D.functor_mor(D.base_inverse(m0.first), y1, m1.second);
    return {D.base_compose(m1.first, m0.first), D.fiber_compose(pulled, m0.second)};
  };
  P.inverse = [D](const Mor& m, const Obj& o) -> Mor {
    // (g, f)^-1 = (g^-1, Gamma(g)(f^-1)).
    return {D.base_inverse(m.first), D.functor_mor(m.first, o.first, D.fiber_inverse(m.second))};
  };
  P.mor_equal = [D](const Mor& a, const Mor& b) {
    return D.base_equal(a.first, b.first) && D.fiber_equal(a.second, b.second);
  };

  for (std::size_t s = 0; s < P.objects.size(); ++s) {
    for (const auto& [gl, g] : D.base_generators) {
      Mor m{g, fiber_id};
      P.generators.push_back({gl, s, m, P.index_of(P.target(m, P.objects[s]))});
    }
    for (const auto& [fl, f] : D.fiber_generators) {
      Mor m{base_id, f};
      P.generators.push_back({fl, s, m, P.index_of(P.target(m, P.objects[s]))});
    }
  }
  return P;
}

// ---------------------------------------------------------------------------
// Hurwitz diagram: base Sigma_r // B_r, fiber G^r // G, braids acting on
// fibers by the Hurwitz formula.

using HurwitzMor = std::pair<BraidWord, Elem>;  // (c, h)

inline GroupoidDiagram<Permutation, BraidWord, Tuple, Elem> hurwitz_diagram(const FiniteGroup& G, int r) {
  GroupoidDiagram<Permutation, BraidWord, Tuple, Elem> D;
  D.base_objects = all_permutations(static_cast<std::size_t>(r));
  for (int j = 1; j < r; ++j) {
    D.base_generators.push_back({"c" + std::to_string(j), BraidWord(r, {j})});
    D.base_generators.push_back({"c" + std::to_string(j) + "^-1", BraidWord(r, {-j})});
  }
  D.base_target = [](const BraidWord& c, const Permutation& s) { return underlying_permutation(c) * s; };
  D.base_compose = [](const BraidWord& c1, const BraidWord& c0) { return c1 * c0; };
  D.base_inverse = [](const BraidWord& c) { return c.inverse(); };
  D.base_equal = [](const BraidWord& a, const BraidWord& b) { return braid_equal(a, b); };

  D.fiber_objects = [&G, r](const Permutation&) { return all_tuples(G.order(), static_cast<std::size_t>(r)); };
  for (Elem h = 0; h < G.order(); ++h) D.fiber_generators.push_back({"h" + std::to_string(h), h});
  D.fiber_target = [&G](Elem h, const Tuple& a) {
    Tuple out = a;
    for (auto& v : out) v = G.conj(h, v);
    return out;
  };
  D.fiber_compose = [&G](Elem h1, Elem h0) { return G.mul(h1, h0); };
  D.fiber_inverse = [&G](Elem h) { return G.inv(h); };
  D.fiber_equal = [](Elem a, Elem b) { return a == b; };

  D.functor_obj = [&G](const BraidWord& c, const Permutation& s, const Tuple& a) {
    return braid_act(G, c, DecoratedTuple{s, a}).b;
  };
  D.functor_mor = [](const BraidWord&, const Permutation&, Elem h) { return h; };
  return D;
}

/// The direct model: objects Sigma_r x G^r, morphisms (c, h) acting by
/// (sigma, a) -> (pi(c) sigma, c.(h a h^-1)), composite (c1 c0, h1 h0).
inline FiniteGroupoidPresentation<DecoratedTuple, HurwitzMor> hurwitz_groupoid(const FiniteGroup& G, int r) {
  FiniteGroupoidPresentation<DecoratedTuple, HurwitzMor> P;
  P.objects = hurwitz_space_objects(G, static_cast<std::size_t>(r));
  std::sort(P.objects.begin(), P.objects.end());
  P.target = [&G](const HurwitzMor& m, const DecoratedTuple& x) {
    return braid_act(G, m.first, conjugate_act(G, m.second, x));
  };
  P.compose = [&G](const HurwitzMor& m1, const HurwitzMor& m0, const DecoratedTuple&) -> HurwitzMor {
    return {m1.first * m0.first, G.mul(m1.second, m0.second)};
  };
  P.inverse = [&G](const HurwitzMor& m, const DecoratedTuple&) -> HurwitzMor { return {m.first.inverse(), G.inv(m.second)}; };
  P.mor_equal = [](const HurwitzMor& a, const HurwitzMor& b) {
    return a.second == b.second && braid_equal(a.first, b.first);
  };
  std::vector<std::pair<std::string, HurwitzMor>> gens;
  for (int j = 1; j < r; ++j) {
    gens.push_back({"c" + std::to_string(j), {BraidWord(r, {j}), 0}});
    gens.push_back({"c" + std::to_string(j) + "^-1", {BraidWord(r, {-j}), 0}});
  }
  for (Elem h = 0; h < G.order(); ++h) gens.push_back({"h" + std::to_string(h), {BraidWord::identity(r), h}});
  for (std::size_t s = 0; s < P.objects.size(); ++s)
    for (const auto& [l, m] : gens) P.generators.push_back({l, s, m, P.index_of(P.target(m, P.objects[s]))});
  return P;
}

struct ComparisonReport {
  bool objects_match = false;
  std::size_t objects = 0;
  std::size_t generators_checked = 0, generator_mismatches = 0;
  std::size_t pairs_checked = 0, pair_mismatches = 0;
  std::size_t inverse_checks = 0, inverse_mismatches = 0;
  std::vector<std::string> witnesses;
  bool ok() const {
    return objects_match && generator_mismatches == 0 && pair_mismatches == 0 && inverse_mismatches == 0;
  }
};

/// Compare the Grothendieck construction of the Hurwitz diagram with the
/// direct model: object bijection, generators, composites of generator pairs.
inline ComparisonReport compare_hurwitz_grothendieck(const FiniteGroup& G, int r, std::size_t max_witnesses = 10) {
  const auto D = hurwitz_diagram(G, r);
  const auto Gr = grothendieck(D, BraidWord::identity(r), Elem{0});
  const auto H = hurwitz_groupoid(G, r);
  ComparisonReport rep;
  rep.objects = H.objects.size();
  auto to_tuple = [](const std::pair<Permutation, Tuple>& o) { return DecoratedTuple{o.first, o.second}; };
  auto note = [&](std::string w) {
    if (rep.witnesses.size() < max_witnesses) rep.witnesses.push_back(std::move(w));
  };

  rep.objects_match = Gr.objects.size() == H.objects.size();
  for (std::size_t i = 0; rep.objects_match && i < Gr.objects.size(); ++i)
    rep.objects_match = to_tuple(Gr.objects[i]) == H.objects[i];
  if (!rep.objects_match) return rep;

  // Generators in both presentations are listed per object in the same order.
  if (Gr.generators.size() != H.generators.size()) {
    rep.generator_mismatches = 1;
    note("generator counts differ");
    return rep;
  }
  std::map<std::size_t, std::vector<std::size_t>> out_of;
  for (std::size_t k = 0; k < H.generators.size(); ++k) {
    const auto& a = Gr.generators[k];
    const auto& b = H.generators[k];
    ++rep.generators_checked;
    const HurwitzMor am{a.mor.first, a.mor.second};
    if (a.label != b.label || a.source != b.source || a.target != b.target || !H.mor_equal(am, b.mor)) {
      ++rep.generator_mismatches;
      note("generator " + a.label + " at " + H.objects[a.source].str());
    }
    out_of[b.source].push_back(k);
    ++rep.inverse_checks;
    const auto inv_g = Gr.inverse(a.mor, Gr.objects[a.source]);
    const auto back = Gr.target(inv_g, Gr.objects[a.target]);
    if (!(to_tuple(back) == H.objects[a.source])) {
      ++rep.inverse_mismatches;
      note("inverse of " + a.label + " at " + H.objects[a.source].str());
    }
  }

  for (std::size_t k0 = 0; k0 < H.generators.size(); ++k0) {
    const auto& a0 = Gr.generators[k0];
    for (std::size_t k1 : out_of[a0.target]) {
      const auto& a1 = Gr.generators[k1];
      ++rep.pairs_checked;
      const auto gc = Gr.compose(a1.mor, a0.mor, Gr.objects[a0.source]);
      const auto hc = H.compose(H.generators[k1].mor, H.generators[k0].mor, H.objects[a0.source]);
      const auto gt = to_tuple(Gr.target(gc, Gr.objects[a0.source]));
      const auto ht = H.target(hc, H.objects[a0.source]);
      const bool ok = H.mor_equal({gc.first, gc.second}, hc) && gt == ht && gt == H.objects[a1.target];
      if (!ok) {
        ++rep.pair_mismatches;
        note(a1.label + " o " + a0.label + " at " + H.objects[a0.source].str());
      }
    }
  }
  return rep;
}

}  // namespace e2g
