#pragma once

// Colored operad models on normal forms and a brute-force axiom checker.
//
// Operations of the normal-form model are (sigma, b, g) with output color
// h = color_condition(sigma, b, g). Partial composition f o_j g puts the
// inputs of g at the position of slot j and pre-multiplies their labels by
// b_j. Symmetric groups act on the right by relabeling slots:
// (f.pi) has inputs g_{pi(i)}, sigma o pi and labels b_{pi(i)}.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "hurwitz.hpp"
#include "parallel.hpp"
#include "tree.hpp"

namespace e2g {

constexpr int kMaxOpArity = 8;

/// Fixed-capacity operation of the normal-form model.
struct NFOp {
  std::uint8_t r = 0;
  std::array<std::uint8_t, kMaxOpArity> sigma{};
  std::array<Elem, kMaxOpArity> b{};
  std::array<Elem, kMaxOpArity> g{};
  Elem h = 0;

  bool operator==(const NFOp& o) const {
    if (r != o.r || h != o.h) return false;
    for (int i = 0; i < r; ++i)
      if (sigma[i] != o.sigma[i] || b[i] != o.b[i] || g[i] != o.g[i]) return false;
    return true;
  }
};

inline NFOp to_op(const NormalForm& nf) {
  NFOp op;
  if (nf.b.size() > static_cast<std::size_t>(kMaxOpArity)) throw std::length_error("arity above operation capacity");
  op.r = static_cast<std::uint8_t>(nf.b.size());
  for (int i = 0; i < op.r; ++i) {
    op.sigma[i] = static_cast<std::uint8_t>(nf.sigma[static_cast<std::size_t>(i)]);
    op.b[i] = nf.b[i];
    op.g[i] = nf.signature.inputs[i];
  }
  op.h = nf.signature.output;
  return op;
}

inline NormalForm to_normal_form(const NFOp& op) {
  std::vector<int> img(op.sigma.begin(), op.sigma.begin() + op.r);
  return {Permutation::from_images(std::move(img)), Tuple(op.b.begin(), op.b.begin() + op.r),
          {Tuple(op.g.begin(), op.g.begin() + op.r), op.h}};
}

inline std::string op_str(const NFOp& op) {
  const auto nf = to_normal_form(op);
  std::string s = nf.str() + "; g=[";
  for (int i = 0; i < op.r; ++i) s += (i ? "," : "") + std::to_string(op.g[i]);
  return s + "]; h=" + std::to_string(op.h);
}

/// Output color forced by sigma, b and g.
inline Elem op_color(const FiniteGroup& G, const NFOp& f) {
  std::array<std::uint8_t, kMaxOpArity> at{};
  for (int u = 0; u < f.r; ++u) at[f.sigma[u]] = static_cast<std::uint8_t>(u);
  Elem h = FiniteGroup::identity();
  for (int p = 0; p < f.r; ++p) h = G.mul(h, G.conj(f.b[at[p]], f.g[at[p]]));
  return h;
}

class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fast path of f o_j g (j 1-based). With `premultiply` false the inner
/// labels are left alone; that variant is only a test mutant.
inline NFOp compose_op(const FiniteGroup& G, const NFOp& f, int j, const NFOp& g, bool premultiply = true) {
  if (j < 1 || j > f.r) throw std::out_of_range("compose: slot out of range");
  if (g.h != f.g[j - 1]) throw SignatureMismatch("compose: inner output does not match input color " + std::to_string(j));
  const int r = f.r, s = g.r, n = r + s - 1;
  if (n > kMaxOpArity) throw std::length_error("compose: arity above operation capacity");
  NFOp out;
  out.r = static_cast<std::uint8_t>(n);
  out.h = f.h;
  const int p = f.sigma[j - 1];
  const Elem bj = f.b[j - 1];
  auto shift = [&](int pos) { return pos < p ? pos : pos + s - 1; };
  for (int u = 0; u < r; ++u) {
    if (u == j - 1) continue;
    const int dst = u < j - 1 ? u : u + s - 1;
    out.sigma[dst] = static_cast<std::uint8_t>(shift(f.sigma[u]));
    out.b[dst] = f.b[u];
    out.g[dst] = f.g[u];
  }
  for (int k = 0; k < s; ++k) {
    const int dst = j - 1 + k;
    out.sigma[dst] = static_cast<std::uint8_t>(p + g.sigma[k]);
    out.b[dst] = premultiply ? G.mul(bj, g.b[k]) : g.b[k];
    out.g[dst] = g.g[k];
  }
  return out;
}

/// Right action by a slot permutation pi (0-based images).
inline NFOp act_op(const NFOp& f, const Permutation& pi) {
  if (pi.size() != f.r) throw std::invalid_argument("act: permutation size mismatch");
  NFOp out;
  out.r = f.r;
  out.h = f.h;
  for (int i = 0; i < f.r; ++i) {
    const int src = pi[static_cast<std::size_t>(i)];
    out.sigma[i] = f.sigma[src];
    out.b[i] = f.b[src];
    out.g[i] = f.g[src];
  }
  return out;
}

inline NFOp identity_op(Elem color) {
  NFOp op;
  op.r = 1;
  op.g[0] = color;
  op.h = color;
  return op;
}

inline NormalForm compose_normal(const FiniteGroup& G, const NormalForm& outer, int j, const NormalForm& inner) {
  return to_normal_form(compose_op(G, to_op(outer), j, to_op(inner)));
}

/// Reference route: normalize(graft(denormalize(outer), j, denormalize(inner))).
inline NormalForm compose_by_graft(const FiniteGroup& G, const NormalForm& outer, int j, const NormalForm& inner) {
  if (inner.signature.output != outer.signature.inputs.at(static_cast<std::size_t>(j - 1)))
    throw SignatureMismatch("compose: inner output does not match input color " + std::to_string(j));
  return normalize(G, graft(G, denormalize(outer), j, denormalize(inner)));
}

inline NormalForm act_normal(const NormalForm& nf, const Permutation& pi) { return to_normal_form(act_op(to_op(nf), pi)); }

/// All operations of arity r (every sigma, label tuple and input colors).
inline std::vector<NFOp> enumerate_ops(const FiniteGroup& G, int r) {
  std::vector<NFOp> out;
  const auto tuples = all_tuples(G.order(), static_cast<std::size_t>(r));
  for (const auto& sigma : all_permutations(static_cast<std::size_t>(r)))
    for (const auto& b : tuples)
      for (const auto& g : tuples) {
        NFOp op;
        op.r = static_cast<std::uint8_t>(r);
        for (int i = 0; i < r; ++i) {
          op.sigma[i] = static_cast<std::uint8_t>(sigma[static_cast<std::size_t>(i)]);
          op.b[i] = b[i];
          op.g[i] = g[i];
        }
        op.h = color_condition(G, sigma, b, g);
        out.push_back(op);
      }
  return out;
}

// ---------------------------------------------------------------------------
// Models and the axiom checker

/// Normal-form operad over G (equivalently the set-level pi_0 operad).
struct NormalFormModel {
  const FiniteGroup* G;
  bool premultiply = true;  // false: deliberately wrong composition

  using Op = NFOp;
  std::vector<Op> operations(int r) const { return enumerate_ops(*G, r); }
  std::size_t colors() const { return G->order(); }
  int arity(const Op& f) const { return f.r; }
  Elem output(const Op& f) const { return f.h; }
  Elem input(const Op& f, int i) const { return f.g[i - 1]; }
  Op compose(const Op& f, int i, const Op& g) const { return compose_op(*G, f, i, g, premultiply); }
  Op act(const Op& f, const Permutation& pi) const { return act_op(f, pi); }
  Op identity(Elem c) const { return identity_op(c); }
  bool equal(const Op& a, const Op& b) const { return a == b; }
  bool valid(const Op& f) const { return op_color(*G, f) == f.h; }
  std::string str(const Op& f) const { return op_str(f); }
};

/// Set-level pi_0 operad: operations Sigma_r x_h G^r with the induced
/// composition. It shares the normal-form composition.
inline NormalFormModel pi0_operad(const FiniteGroup& G) { return NormalFormModel{&G, true}; }

/// pi_0 operations of one signature.
inline std::vector<NFOp> pi0_operations(const FiniteGroup& G, const ColorSignature& sig) {
  std::vector<NFOp> out;
  for (const auto& x : component_objects(G, sig)) out.push_back(to_op({x.sigma, x.b, sig}));
  return out;
}

struct AxiomReport {
  std::string axiom;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;
};

namespace detail {

template <class Model>
struct OpIndex {
  std::vector<std::vector<typename Model::Op>> by_arity;
  // by_arity_output[r][color] -> ops of arity r with that output
  std::vector<std::vector<std::vector<std::size_t>>> by_output;

  OpIndex(const Model& M, int max_arity) {
    for (int r = 0; r <= max_arity; ++r) {
      by_arity.push_back(M.operations(r));
      by_output.emplace_back(M.colors());
      for (std::size_t k = 0; k < by_arity[r].size(); ++k) by_output[r][M.output(by_arity[r][k])].push_back(k);
    }
  }
  const std::vector<std::size_t>& with_output(int r, Elem c) const { return by_output[r][c]; }
};

/// Runs body(f_index, fail) over all arity-r ops in deterministic chunks;
/// body returns the number of instances it checked.
template <class Model, class Body>
AxiomReport run_axiom(const std::string& name, const Model& M, const OpIndex<Model>& idx, const Bounds& bounds,
                      unsigned jobs, Body&& body) {
  AxiomReport rep{name, 0, 0, {}};
  for (int r = 0; r <= bounds.max_arity; ++r) {
    const auto& ops = idx.by_arity[r];
    const std::size_t chunks = std::max<std::size_t>(1, jobs * 8);
    std::vector<std::size_t> counts(chunks, 0), fails(chunks, 0);
    std::vector<std::vector<std::string>> wit(chunks);
    parallel_chunks(ops.size(), jobs, chunks, [&](std::size_t c, std::size_t b, std::size_t e) {
      for (std::size_t k = b; k < e; ++k) {
        counts[c] += body(ops[k], [&](const std::string& w) {
          ++fails[c];
          if (wit[c].size() < 3) wit[c].push_back(w);
        });
      }
    });
    for (std::size_t c = 0; c < chunks; ++c) {
      rep.instances += counts[c];
      rep.failures += fails[c];
      for (auto& w : wit[c])
        if (rep.witnesses.size() < 5) rep.witnesses.push_back(w);
    }
    if (rep.instances > bounds.cap)
      throw CapExceeded("axiom " + name + ": more than " + std::to_string(bounds.cap) + " instances");
  }
  (void)M;
  return rep;
}

}  // namespace detail

/// Closure of composition, unit laws, sequential and parallel associativity, both equivariance
/// laws and the action law, over every instance whose operations and
/// composites have arity <= bounds.max_arity.
template <class Model>
std::vector<AxiomReport> check_operad_axioms(const Model& M, const Bounds& bounds, unsigned jobs = 1) {
  if (M.colors() > bounds.max_order)
    throw CapExceeded("group order " + std::to_string(M.colors()) + " above bound " + std::to_string(bounds.max_order));
  const int A = bounds.max_arity;
  const detail::OpIndex<Model> idx(M, A);
  using Op = typename Model::Op;
  std::vector<AxiomReport> out;
  auto eq = [&](const Op& a, const Op& b) { return M.equal(a, b); };

  out.push_back(detail::run_axiom("closure", M, idx, bounds, jobs, [&](const Op& f, auto&& fail) {
    std::size_t n = 0;
    const int r = M.arity(f);
    for (int i = 1; i <= r; ++i)
      for (int s = 0; r + s - 1 <= A; ++s)
        for (std::size_t gi : idx.with_output(s, M.input(f, i))) {
          const Op& g = idx.by_arity[s][gi];
          const Op fg = M.compose(f, i, g);
          ++n;
          bool ok = M.valid(fg) && M.arity(fg) == r + s - 1 && M.output(fg) == M.output(f);
          for (int k = 1; ok && k <= r + s - 1; ++k) {
            const Elem want = k < i ? M.input(f, k) : k < i + s ? M.input(g, k - i + 1) : M.input(f, k - s + 1);
            ok = M.input(fg, k) == want;
          }
          if (!ok) fail("f o_" + std::to_string(i) + " g is not a valid operation at " + M.str(f) + " | " + M.str(g));
        }
    return n;
  }));

  out.push_back(detail::run_axiom("unit", M, idx, bounds, jobs, [&](const Op& f, auto&& fail) {
    std::size_t n = 1;
    if (!eq(M.compose(M.identity(M.output(f)), 1, f), f)) fail("id o f != f for " + M.str(f));
    for (int i = 1; i <= M.arity(f); ++i, ++n)
      if (!eq(M.compose(f, i, M.identity(M.input(f, i))), f)) fail("f o_" + std::to_string(i) + " id != f for " + M.str(f));
    return n;
  }));

  out.push_back(detail::run_axiom("associativity-sequential", M, idx, bounds, jobs, [&](const Op& f, auto&& fail) {
    std::size_t n = 0;
    const int r = M.arity(f);
    for (int i = 1; i <= r; ++i)
      for (int s = 1; r + s - 1 <= A; ++s)
        for (std::size_t gi : idx.with_output(s, M.input(f, i))) {
          const Op& g = idx.by_arity[s][gi];
          const Op fg = M.compose(f, i, g);
          for (int k = 1; k <= s; ++k)
            for (int t = 0; r + s + t - 2 <= A; ++t)
              for (std::size_t hi : idx.with_output(t, M.input(g, k))) {
                const Op& h = idx.by_arity[t][hi];
                ++n;
                if (!eq(M.compose(fg, i + k - 1, h), M.compose(f, i, M.compose(g, k, h))))
                  fail("(f o_" + std::to_string(i) + " g) o h at " + M.str(f) + " | " + M.str(g) + " | " + M.str(h));
              }
        }
    return n;
  }));

  out.push_back(detail::run_axiom("associativity-parallel", M, idx, bounds, jobs, [&](const Op& f, auto&& fail) {
    std::size_t n = 0;
    const int r = M.arity(f);
    std::vector<std::pair<const Op*, Op>> fh;
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j)
        for (int t = 0; r + t - 1 <= A; ++t) {
          fh.clear();
          for (std::size_t hi : idx.with_output(t, M.input(f, j))) {
            const Op& h = idx.by_arity[t][hi];
            fh.push_back({&h, M.compose(f, j, h)});
          }
          for (int s = 0; r + s + t - 2 <= A; ++s)
            for (std::size_t gi : idx.with_output(s, M.input(f, i))) {
              const Op& g = idx.by_arity[s][gi];
              const Op fg = M.compose(f, i, g);
              for (const auto& [h, fh_] : fh) {
                ++n;
                if (!eq(M.compose(fg, j + s - 1, *h), M.compose(fh_, i, g)))
                  fail("parallel at " + M.str(f) + " | " + M.str(g) + " | " + M.str(*h));
              }
            }
        }
    return n;
  }));

  std::vector<std::vector<Permutation>> perms;
  for (int r = 0; r <= A; ++r) perms.push_back(all_permutations(static_cast<std::size_t>(r)));

  out.push_back(detail::run_axiom("equivariance", M, idx, bounds, jobs, [&](const Op& f, auto&& fail) {
    std::size_t n = 0;
    const int r = M.arity(f);
    for (const auto& pi : perms[r]) {
      const Op fpi = M.act(f, pi);
      for (int i = 1; i <= r; ++i)
        for (int s = 0; r + s - 1 <= A; ++s)
          for (std::size_t gi : idx.with_output(s, M.input(fpi, i))) {
            const Op& g = idx.by_arity[s][gi];
            ++n;
            const int pii = pi[static_cast<std::size_t>(i - 1)] + 1;
            const auto block = perm_compose(pi, static_cast<std::size_t>(i), Permutation(static_cast<std::size_t>(s)));
            if (!eq(M.compose(fpi, i, g), M.act(M.compose(f, pii, g), block)))
              fail("(f.pi) o g at " + M.str(f) + " pi=" + pi.one_line() + " | " + M.str(g));
          }
    }
    for (int i = 1; i <= r; ++i)
      for (int s = 0; r + s - 1 <= A; ++s)
        for (std::size_t gi : idx.with_output(s, M.input(f, i))) {
          const Op& g = idx.by_arity[s][gi];
          for (const auto& rho : perms[s]) {
            ++n;
            const auto inner = perm_compose(Permutation(static_cast<std::size_t>(r)), static_cast<std::size_t>(i), rho);
            if (!eq(M.compose(f, i, M.act(g, rho)), M.act(M.compose(f, i, g), inner)))
              fail("f o (g.rho) at " + M.str(f) + " | " + M.str(g) + " rho=" + rho.one_line());
          }
        }
    return n;
  }));

  out.push_back(detail::run_axiom("action", M, idx, bounds, jobs, [&](const Op& f, auto&& fail) {
    std::size_t n = 0;
    const int r = M.arity(f);
    for (const auto& pi : perms[r]) {
      for (const auto& rho : perms[r]) {
        ++n;
        if (!eq(M.act(M.act(f, pi), rho), M.act(f, pi * rho))) fail("(f.pi).rho at " + M.str(f));
      }
    }
    if (!eq(M.act(f, Permutation(static_cast<std::size_t>(r))), f)) fail("f.id != f at " + M.str(f));
    return n + 1;
  }));
  return out;
}

/// Fast-path composition against graft-then-normalize on every composable
/// pair with composite arity <= bounds.max_arity.
inline AxiomReport check_fast_path(const FiniteGroup& G, const Bounds& bounds, unsigned jobs = 1) {
  const NormalFormModel M{&G, true};
  const detail::OpIndex<NormalFormModel> idx(M, bounds.max_arity);
  std::vector<std::vector<GTree>> trees(idx.by_arity.size());
  for (std::size_t s = 0; s < trees.size(); ++s)
    for (const auto& g : idx.by_arity[s]) trees[s].push_back(denormalize(to_normal_form(g)));
  return detail::run_axiom("fast-path", M, idx, bounds, jobs, [&](const NFOp& f, auto&& fail) {
    std::size_t n = 0;
    const GTree ft = denormalize(to_normal_form(f));
    for (int i = 1; i <= f.r; ++i)
      for (int s = 0; f.r + s - 1 <= bounds.max_arity; ++s)
        for (std::size_t gi : idx.with_output(s, f.g[i - 1])) {
          const NFOp& g = idx.by_arity[s][gi];
          ++n;
          const NormalForm slow = normalize(G, graft(G, ft, i, trees[s][gi]));
          if (!(to_op(slow) == compose_op(G, f, i, g))) fail("fast != graft at " + op_str(f) + " | " + op_str(g));
        }
    return n;
  });
}

/// Composition of groupoid-level morphisms: (x, w) o_j (y, v) has braid
/// cable_compose(w, sigma_x(j), v). Checks that the braid carries the
/// composite source to the composite of the targets.
inline AxiomReport check_morphism_composition(const FiniteGroup& G, int max_arity, unsigned jobs = 1) {
  const NormalFormModel M{&G, true};
  Bounds b;
  b.max_arity = max_arity;
  b.cap = ~std::size_t{0};
  const detail::OpIndex<NormalFormModel> idx(M, max_arity);
  auto letters = [](int r) {
    std::vector<BraidWord> out{BraidWord::identity(r)};
    for (int j = 1; j < r; ++j) {
      out.push_back(BraidWord(r, {j}));
      out.push_back(BraidWord(r, {-j}));
    }
    return out;
  };
  auto target = [&](const NFOp& x, const BraidWord& w) {
    const NormalForm nf = to_normal_form(x);
    const auto t = component_act(G, w, nf.tuple(), nf.signature.inputs);
    return to_op({t.sigma, t.b, nf.signature});
  };
  return detail::run_axiom("morphism-composition", M, idx, b, jobs, [&](const NFOp& f, auto&& fail) {
    std::size_t n = 0;
    for (int i = 1; i <= f.r; ++i)
      for (int s = 0; f.r + s - 1 <= max_arity; ++s)
        for (std::size_t gi : idx.with_output(s, f.g[i - 1])) {
          const NFOp& g = idx.by_arity[s][gi];
          for (const auto& w : letters(f.r))
            for (const auto& v : letters(s)) {
              ++n;
              const BraidWord c = cable_compose(w, f.sigma[i - 1] + 1, v);
              if (!(target(compose_op(G, f, i, g), c) == compose_op(G, target(f, w), i, target(g, v))))
                fail("braid " + c.str() + " at " + op_str(f) + " | " + op_str(g));
            }
        }
    return n;
  });
}

}  // namespace e2g
