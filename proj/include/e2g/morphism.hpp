#pragma once

// Generator isomorphisms between trees and their interpretation in the
// action-groupoid model.
//
// Forward generators, applied at a path:
//   alpha    T(T(X,Y),Z) -> T(X,T(Y,Z))
//   lambda   T(U,X) -> X
//   rho      T(X,U) -> X
//   c        T(X,Y) -> T(L[col X](Y), X)
//   beta     T(L[h]X, L[h]Y) -> L[h]T(X,Y)
//   gamma    L[h2]L[h1]X -> L[h2 h1]X
//   delta    L[e]X -> X
//   epsilon  L[h]U -> U
// Inverses that create data take it as arguments: gamma^-1(h2,h1),
// epsilon^-1(h). Step text: name[^-1][(args)]@path, e.g. "c@0".

#include <cctype>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid.hpp"
#include "hurwitz.hpp"
#include "tree.hpp"

namespace e2g {

enum class Gen : std::uint8_t { Id, Alpha, Lambda, Rho, C, Beta, Gamma, Delta, Epsilon };

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::Id: return "id";
    case Gen::Alpha: return "alpha";
    case Gen::Lambda: return "lambda";
    case Gen::Rho: return "rho";
    case Gen::C: return "c";
    case Gen::Beta: return "beta";
    case Gen::Gamma: return "gamma";
    case Gen::Delta: return "delta";
    case Gen::Epsilon: return "epsilon";
  }
  return "?";
}

struct Step {
  Gen gen = Gen::Id;
  bool inverse = false;
  std::vector<Elem> args;
  std::string path;

  std::string str() const {
    std::string s = gen_name(gen);
    if (inverse) s += "^-1";
    if (!args.empty()) {
      s += "(";
      for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + std::to_string(args[i]);
      s += ")";
    }
    return s + "@" + path;
  }
  bool operator==(const Step&) const = default;
};

class IllTyped : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one step; `element` resolves argument tokens.
inline Step parse_step(const std::string& text,
                       const std::function<Elem(const std::string&)>& element = nullptr) {
  Step st;
  const auto at = text.find('@');
  if (at == std::string::npos) throw ParseError("step needs '@path'", text.size());
  std::string head = text.substr(0, at);
  st.path = text.substr(at + 1);
  for (std::size_t i = 0; i < st.path.size(); ++i)
    if (st.path[i] != '0' && st.path[i] != '1') throw ParseError("path digits must be 0 or 1", at + 1 + i);
  std::string args;
  if (const auto open = head.find('('); open != std::string::npos) {
    if (head.back() != ')') throw ParseError("unclosed argument list", at);
    args = head.substr(open + 1, head.size() - open - 2);
    head = head.substr(0, open);
  }
  if (head.size() > 3 && head.compare(head.size() - 3, 3, "^-1") == 0) {
    st.inverse = true;
    head.resize(head.size() - 3);
  }
  static const std::vector<std::pair<std::string, Gen>> names = {
      {"id", Gen::Id},       {"alpha", Gen::Alpha}, {"lambda", Gen::Lambda}, {"l", Gen::Lambda},
      {"rho", Gen::Rho},     {"r", Gen::Rho},       {"c", Gen::C},           {"beta", Gen::Beta},
      {"gamma", Gen::Gamma}, {"delta", Gen::Delta}, {"epsilon", Gen::Epsilon}};
  bool found = false;
  for (const auto& [n, g] : names)
    if (n == head) {
      st.gen = g;
      found = true;
    }
  if (!found) throw ParseError("unknown generator '" + head + "'", 0);
  std::stringstream ss(args);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    if (tok.empty()) continue;
    if (element) st.args.push_back(element(tok));
    else st.args.push_back(static_cast<Elem>(std::stoi(tok)));
  }
  return st;
}

inline std::vector<Step> parse_steps(const std::string& text,
                                     const std::function<Elem(const std::string&)>& element = nullptr) {
  std::vector<Step> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(parse_step(tok, element));
  return out;
}

namespace detail {

[[noreturn]] inline void ill(const Step& s, const std::string& why) {
  throw IllTyped("step " + s.str() + ": " + why);
}

/// The local rewrite of one generator on the addressed subtree.
inline GTree apply_local(const FiniteGroup& G, const GTree& t, const Step& s) {
  auto is = [&](const GTree& x, NodeKind k) { return x.kind() == k; };
  auto need_args = [&](std::size_t n) {
    if (s.args.size() != n) ill(s, "expects " + std::to_string(n) + " argument(s)");
  };
  switch (s.gen) {
    case Gen::Id: return t;
    case Gen::Alpha:
      if (!s.inverse) {
        if (!is(t, NodeKind::Tensor) || !is(t.child(0), NodeKind::Tensor)) ill(s, "source is not T(T(X,Y),Z)");
        const GTree xy = t.child(0);
        return GTree::tensor(xy.child(0), GTree::tensor(xy.child(1), t.child(1)));
      } else {
        if (!is(t, NodeKind::Tensor) || !is(t.child(1), NodeKind::Tensor)) ill(s, "source is not T(X,T(Y,Z))");
        const GTree yz = t.child(1);
        return GTree::tensor(GTree::tensor(t.child(0), yz.child(0)), yz.child(1));
      }
    case Gen::Lambda:
      if (!s.inverse) {
        if (!is(t, NodeKind::Tensor) || !is(t.child(0), NodeKind::Unit)) ill(s, "source is not T(U,X)");
        return t.child(1);
      }
      return GTree::tensor(GTree::unit(), t);
    case Gen::Rho:
      if (!s.inverse) {
        if (!is(t, NodeKind::Tensor) || !is(t.child(1), NodeKind::Unit)) ill(s, "source is not T(X,U)");
        return t.child(0);
      }
      return GTree::tensor(t, GTree::unit());
    case Gen::C:
      if (!is(t, NodeKind::Tensor)) ill(s, "source is not a tensor");
      if (!s.inverse) {
        const GTree x = t.child(0);
        return GTree::tensor(GTree::label(output_color(G, x), t.child(1)), x);
      } else {
        const GTree ly = t.child(0), x = t.child(1);
        if (!is(ly, NodeKind::Label) || ly.root().elem != output_color(G, x))
          ill(s, "source is not T(L[col X](Y), X)");
        return GTree::tensor(x, ly.child(0));
      }
    case Gen::Beta:
      if (!s.inverse) {
        if (!is(t, NodeKind::Tensor)) ill(s, "source is not a tensor");
        const GTree a = t.child(0), b = t.child(1);
        if (!is(a, NodeKind::Label) || !is(b, NodeKind::Label) || a.root().elem != b.root().elem)
          ill(s, "source is not T(L[h]X, L[h]Y)");
        return GTree::label(a.root().elem, GTree::tensor(a.child(0), b.child(0)));
      } else {
        if (!is(t, NodeKind::Label) || !is(t.child(0), NodeKind::Tensor)) ill(s, "source is not L[h]T(X,Y)");
        const Elem h = t.root().elem;
        const GTree xy = t.child(0);
        return GTree::tensor(GTree::label(h, xy.child(0)), GTree::label(h, xy.child(1)));
      }
    case Gen::Gamma:
      if (!s.inverse) {
        if (!is(t, NodeKind::Label) || !is(t.child(0), NodeKind::Label)) ill(s, "source is not L[h2]L[h1]X");
        const GTree inner = t.child(0);
        return GTree::label(G.mul(t.root().elem, inner.root().elem), inner.child(0));
      } else {
        need_args(2);
        if (!is(t, NodeKind::Label) || G.mul(s.args[0], s.args[1]) != t.root().elem)
          ill(s, "source is not L[h2 h1]X");
        return GTree::label(s.args[0], GTree::label(s.args[1], t.child(0)));
      }
    case Gen::Delta:
      if (!s.inverse) {
        if (!is(t, NodeKind::Label) || t.root().elem != FiniteGroup::identity()) ill(s, "source is not L[e]X");
        return t.child(0);
      }
      return GTree::label(FiniteGroup::identity(), t);
    case Gen::Epsilon:
      if (!s.inverse) {
        if (!is(t, NodeKind::Label) || !is(t.child(0), NodeKind::Unit)) ill(s, "source is not L[h]U");
        return GTree::unit();
      }
      need_args(1);
      if (!is(t, NodeKind::Unit)) ill(s, "source is not U");
      return GTree::label(s.args[0], GTree::unit());
  }
  return t;
}

}  // namespace detail

inline GTree apply_step(const FiniteGroup& G, const GTree& t, const Step& s) {
  const auto i = t.find(s.path);
  if (!i) throw IllTyped("step " + s.str() + ": no subtree at that path");
  return t.replace(s.path, detail::apply_local(G, t.subtree_at_index(*i), s));
}

struct MorphismWord {
  GTree source;
  std::vector<Step> steps;

  GTree target(const FiniteGroup& G) const {
    GTree t = source;
    for (const auto& s : steps) t = apply_step(G, t, s);
    return t;
  }
};

struct Interpretation {
  NormalForm source, target;
  BraidWord braid;
  GTree target_tree;
};

/// Braid word (rightmost letter first) of a block crossing that moves a
/// block of q strands leftwards past the p strands starting at position i+1.
inline std::vector<int> block_crossing(int i, int p, int q) {
  std::vector<int> applied;
  for (int m = 0; m < q; ++m)
    for (int k = i + p + m; k >= i + 1 + m; --k) applied.push_back(k);
  return {applied.rbegin(), applied.rend()};
}

/// The action-groupoid morphism of a composite: the braid collects the
/// block crossings of the c factors, everything else is trivial. With
/// `flip_braiding`, c contributes the inverse crossing (a test mutant).
inline Interpretation interpret_morphism(const FiniteGroup& G, const MorphismWord& m, bool flip_braiding = false) {
  const int r = m.source.arity();
  Interpretation out{normalize(G, m.source), {}, BraidWord::identity(r), m.source};
  for (const auto& s : m.steps) {
    GTree next = apply_step(G, out.target_tree, s);
    if (s.gen == Gen::C) {
      const int idx = *out.target_tree.find(s.path);
      const int i = out.target_tree.leaves_before(idx);
      // Reference configuration T(X, Y) is the source for c, the target for c^-1.
      const GTree& ref = s.inverse ? next : out.target_tree;
      const int ridx = *ref.find(s.path);
      const int p = ref.leaves_in(ref.child_index(ridx, 0));
      const int q = ref.leaves_in(ref.child_index(ridx, 1));
      BraidWord piece(r, block_crossing(i, p, q));
      if (s.inverse != flip_braiding) piece = piece.inverse();
      out.braid = piece * out.braid;
    }
    out.target_tree = std::move(next);
  }
  out.target = normalize(G, out.target_tree);
  return out;
}

// ---------------------------------------------------------------------------
// Object-level rewriting towards the standard shape. The rules are the
// generator steps beta^-1, gamma, delta, epsilon, lambda, rho, alpha^-1.

inline std::vector<Step> object_redexes(const GTree& t) {
  std::vector<Step> out;
  std::function<void(int, std::string&)> visit = [&](int i, std::string& path) {
    const auto& n = t.nodes()[i];
    auto kind_at = [&](int k) { return t.nodes()[t.child_index(i, k)].kind; };
    if (n.kind == NodeKind::Label) {
      const NodeKind c = kind_at(0);
      if (c == NodeKind::Tensor) out.push_back({Gen::Beta, true, {}, path});
      if (c == NodeKind::Label) out.push_back({Gen::Gamma, false, {}, path});
      if (n.elem == FiniteGroup::identity()) out.push_back({Gen::Delta, false, {}, path});
      if (c == NodeKind::Unit) out.push_back({Gen::Epsilon, false, {}, path});
    }
    if (n.kind == NodeKind::Tensor) {
      if (kind_at(0) == NodeKind::Unit) out.push_back({Gen::Lambda, false, {}, path});
      if (kind_at(1) == NodeKind::Unit) out.push_back({Gen::Rho, false, {}, path});
      if (kind_at(1) == NodeKind::Tensor) out.push_back({Gen::Alpha, true, {}, path});
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

/// Rewrites to a fixpoint, choosing redexes with `pick`; returns the steps.
inline MorphismWord rewrite_to_standard(const FiniteGroup& G, const GTree& t,
                                        const std::function<std::size_t(std::size_t)>& pick) {
  MorphismWord m{t, {}};
  GTree cur = t;
  for (std::size_t guard = 0;; ++guard) {
    const auto redexes = object_redexes(cur);
    if (redexes.empty()) break;
    if (guard > 100000) throw std::logic_error("rewriting does not terminate");
    const Step& s = redexes[pick(redexes.size()) % redexes.size()];
    cur = apply_step(G, cur, s);
    m.steps.push_back(s);
  }
  return m;
}

/// Independent normalizer: rewrite, then read the standard shape.
inline NormalForm normalize_by_rewriting(const FiniteGroup& G, const GTree& t,
                                         const std::function<std::size_t(std::size_t)>& pick) {
  t.validate();
  const GTree s = rewrite_to_standard(G, t, pick).target(G);
  const auto r = static_cast<std::size_t>(t.arity());
  std::vector<int> img(r);
  Tuple b(r);
  // Expect U, or a left comb whose right spines are L[h](leaf) or leaf.
  std::vector<GTree> pieces;
  GTree cur = s;
  if (r == 0) {
    if (!(cur == GTree::unit())) throw std::logic_error("fixpoint is not U: " + cur.str());
  } else {
    while (cur.kind() == NodeKind::Tensor) {
      pieces.push_back(cur.child(1));
      cur = cur.child(0);
    }
    pieces.push_back(cur);
    std::reverse(pieces.begin(), pieces.end());
    if (pieces.size() != r) throw std::logic_error("fixpoint is not a comb of inputs: " + s.str());
    for (std::size_t p = 0; p < r; ++p) {
      GTree x = pieces[p];
      Elem h = FiniteGroup::identity();
      if (x.kind() == NodeKind::Label) {
        h = x.root().elem;
        x = x.child(0);
      }
      if (x.kind() != NodeKind::Leaf) throw std::logic_error("fixpoint piece is not a leaf: " + s.str());
      img[x.root().slot - 1] = static_cast<int>(p);
      b[x.root().slot - 1] = h;
    }
  }
  return {Permutation::from_images(std::move(img)), std::move(b), {t.input_colors(), output_color(G, t)}};
}

}  // namespace e2g
