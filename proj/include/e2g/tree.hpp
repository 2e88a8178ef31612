#pragma once

// Trees of parenthesized G-braids and their (sigma, b) normal forms.
//
// A tree is stored as a flat preorder node list. Node kinds: binary tensor,
// unit, input leaf (slot, color) and unary label h (retypes g as h g h^-1).
// Subtrees are addressed by paths of digits: '0'/'1' pick the children of a
// tensor, '0' the child of a label; the empty path is the root.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"
#include "hurwitz.hpp"
#include "permutation.hpp"

namespace e2g {

enum class NodeKind : std::uint8_t { Tensor, Unit, Leaf, Label };

struct TreeNode {
  NodeKind kind;
  Elem elem = 0;  // leaf color or label
  int slot = 0;   // leaf slot, 1-based
  int size = 1;   // nodes in this subtree
  bool operator==(const TreeNode&) const = default;
  auto operator<=>(const TreeNode&) const = default;
};

class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GTree;
GTree graft(const FiniteGroup& G, const GTree& outer, int j, const GTree& inner);

class GTree {
 public:
  GTree() : nodes_{{NodeKind::Unit, 0, 0, 1}} {}
  static GTree unit() { return GTree({{NodeKind::Unit, 0, 0, 1}}); }
  static GTree leaf(int slot, Elem color) { return GTree({{NodeKind::Leaf, color, slot, 1}}); }
  static GTree label(Elem h, const GTree& t) {
    std::vector<TreeNode> n{{NodeKind::Label, h, 0, t.node_count() + 1}};
    n.insert(n.end(), t.nodes_.begin(), t.nodes_.end());
    return GTree(std::move(n));
  }
  static GTree tensor(const GTree& a, const GTree& b) {
    std::vector<TreeNode> n{{NodeKind::Tensor, 0, 0, a.node_count() + b.node_count() + 1}};
    n.insert(n.end(), a.nodes_.begin(), a.nodes_.end());
    n.insert(n.end(), b.nodes_.begin(), b.nodes_.end());
    return GTree(std::move(n));
  }

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const TreeNode& root() const { return nodes_.front(); }
  NodeKind kind() const { return root().kind; }

  /// Child k of the node at index i (tensor: 0/1, label: 0).
  int child_index(int i, int k) const {
    const auto& n = nodes_[i];
    if (n.kind == NodeKind::Tensor && (k == 0 || k == 1)) return k == 0 ? i + 1 : i + 1 + nodes_[i + 1].size;
    if (n.kind == NodeKind::Label && k == 0) return i + 1;
    return -1;
  }

  GTree subtree_at_index(int i) const {
    return GTree(std::vector<TreeNode>(nodes_.begin() + i, nodes_.begin() + i + nodes_[i].size));
  }
  GTree child(int k) const {
    const int c = child_index(0, k);
    if (c < 0) throw TreeError("node has no child " + std::to_string(k));
    return subtree_at_index(c);
  }

  /// Node index addressed by a path; nullopt if the path leaves the tree.
  std::optional<int> find(const std::string& path) const {
    int i = 0;
    for (char ch : path) {
      if (ch != '0' && ch != '1') return std::nullopt;
      i = child_index(i, ch - '0');
      if (i < 0) return std::nullopt;
    }
    return i;
  }

  GTree at(const std::string& path) const {
    auto i = find(path);
    if (!i) throw TreeError("no subtree at path '" + path + "'");
    return subtree_at_index(*i);
  }

  GTree replace(const std::string& path, const GTree& repl) const {
    std::vector<int> chain{0};
    int i = 0;
    for (char ch : path) {
      i = (ch == '0' || ch == '1') ? child_index(i, ch - '0') : -1;
      if (i < 0) throw TreeError("no subtree at path '" + path + "'");
      chain.push_back(i);
    }
    const int delta = repl.node_count() - nodes_[i].size;
    std::vector<TreeNode> n(nodes_.begin(), nodes_.begin() + i);
    n.insert(n.end(), repl.nodes_.begin(), repl.nodes_.end());
    n.insert(n.end(), nodes_.begin() + i + nodes_[i].size, nodes_.end());
    chain.pop_back();
    for (int a : chain) n[a].size += delta;
    return GTree(std::move(n));
  }

  /// Input leaves (slot numbers) in left-to-right order.
  std::vector<int> slots_in_order() const {
    std::vector<int> s;
    for (const auto& n : nodes_)
      if (n.kind == NodeKind::Leaf) s.push_back(n.slot);
    return s;
  }
  int arity() const { return static_cast<int>(slots_in_order().size()); }

  /// Number of input leaves strictly before node index i.
  int leaves_before(int i) const {
    int c = 0;
    for (int k = 0; k < i; ++k) c += nodes_[k].kind == NodeKind::Leaf;
    return c;
  }
  int leaves_in(int i) const {
    int c = 0;
    for (int k = i; k < i + nodes_[i].size; ++k) c += nodes_[k].kind == NodeKind::Leaf;
    return c;
  }

  /// Input colors indexed by slot (slot k at entry k-1).
  Tuple input_colors() const {
    Tuple g(static_cast<std::size_t>(arity()));
    for (const auto& n : nodes_)
      if (n.kind == NodeKind::Leaf) g.at(static_cast<std::size_t>(n.slot - 1)) = n.elem;
    return g;
  }

  /// Recolors the leaf in slot k to g[k-1].
  void set_input_colors(const Tuple& g) {
    for (auto& n : nodes_)
      if (n.kind == NodeKind::Leaf) n.elem = g.at(static_cast<std::size_t>(n.slot - 1));
  }

  /// Slots must be exactly 1..r, each once.
  void validate() const {
    auto s = slots_in_order();
    std::sort(s.begin(), s.end());
    for (std::size_t k = 0; k < s.size(); ++k)
      if (s[k] != static_cast<int>(k + 1)) throw TreeError("input slots are not exactly 1..r: " + str());
  }

  std::string str(const FiniteGroup* G = nullptr) const {
    std::string out;
    int i = 0;
    write(out, i, G);
    return out;
  }

  bool operator==(const GTree&) const = default;
  auto operator<=>(const GTree&) const = default;

 private:
  explicit GTree(std::vector<TreeNode> n) : nodes_(std::move(n)) {}
  friend GTree graft(const FiniteGroup& G, const GTree& outer, int j, const GTree& inner);

  void write(std::string& out, int& i, const FiniteGroup* G) const {
    const auto& n = nodes_[i++];
    auto el = [&](Elem e) { return G ? G->element_name(e) : std::to_string(e); };
    switch (n.kind) {
      case NodeKind::Unit: out += "U"; break;
      case NodeKind::Leaf: out += "leaf:" + std::to_string(n.slot) + ":" + el(n.elem); break;
      case NodeKind::Label:
        out += "L[" + el(n.elem) + "](";
        write(out, i, G);
        out += ")";
        break;
      case NodeKind::Tensor:
        out += "T(";
        write(out, i, G);
        out += ", ";
        write(out, i, G);
        out += ")";
        break;
    }
  }

  std::vector<TreeNode> nodes_;
};

// ---------------------------------------------------------------------------
// Parsing: T(a, b) | U | L[h](t) | leaf:<slot>:<g> | <object variable>

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t column)
      : std::invalid_argument(msg + " at column " + std::to_string(column + 1)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

struct TreeParseContext {
  /// Resolves an element token (integer index by default).
  std::function<Elem(const std::string&)> element;
  /// Resolves a bare identifier standing for a whole subtree (optional).
  std::function<GTree(const std::string&)> object;
};

namespace detail {

class TreeParser {
 public:
  TreeParser(const std::string& s, const TreeParseContext& ctx) : s_(s), ctx_(ctx) {}

  GTree parse() {
    GTree t = tree();
    skip();
    if (p_ != s_.size()) throw ParseError("trailing input", p_);
    return t;
  }

 private:
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  void expect(char c) {
    skip();
    if (p_ >= s_.size() || s_[p_] != c) throw ParseError(std::string("expected '") + c + "'", p_);
    ++p_;
  }
  std::string token() {
    skip();
    const std::size_t b = p_;
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
    if (b == p_) throw ParseError("expected a name", p_);
    return s_.substr(b, p_ - b);
  }
  Elem element() {
    skip();
    const std::size_t at = p_;
    std::string tok;
    if (p_ < s_.size() && s_[p_] == '(') {
      // cycle notation such as (12) or (12)(34)
      while (p_ < s_.size() && s_[p_] == '(') {
        const auto close = s_.find(')', p_);
        if (close == std::string::npos) throw ParseError("unclosed cycle", p_);
        tok += s_.substr(p_, close + 1 - p_);
        p_ = close + 1;
      }
    } else {
      tok = token();
    }
    try {
      if (ctx_.element) return ctx_.element(tok);
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      return static_cast<Elem>(v);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("bad group element '" + tok + "' (" + e.what() + ")", at);
    }
  }

  GTree tree() {
    skip();
    const std::size_t at = p_;
    if (s_.compare(p_, 2, "T(") == 0) {
      p_ += 2;
      GTree a = tree();
      expect(',');
      GTree b = tree();
      expect(')');
      return GTree::tensor(a, b);
    }
    if (s_.compare(p_, 2, "L[") == 0) {
      p_ += 2;
      const Elem h = element();
      expect(']');
      expect('(');
      GTree t = tree();
      expect(')');
      return GTree::label(h, t);
    }
    if (s_.compare(p_, 5, "leaf:") == 0) {
      p_ += 5;
      std::size_t b = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      if (b == p_) throw ParseError("expected a slot number", p_);
      const int slot = std::stoi(s_.substr(b, p_ - b));
      expect(':');
      return GTree::leaf(slot, element());
    }
    if (p_ < s_.size() && s_[p_] == 'U' &&
        (p_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[p_ + 1])))) {
      ++p_;
      return GTree::unit();
    }
    if (p_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[p_])) && ctx_.object) {
      const std::string name = token();
      try {
        return ctx_.object(name);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), at);
      }
    }
    throw ParseError("expected T(, L[, leaf: or U", at);
  }

  const std::string& s_;
  const TreeParseContext& ctx_;
  std::size_t p_ = 0;
};

}  // namespace detail

inline GTree parse_tree(const std::string& text, const TreeParseContext& ctx = {}) {
  GTree t = detail::TreeParser(text, ctx).parse();
  return t;
}

/// Element resolver accepting indices or the group's element names.
inline std::function<Elem(const std::string&)> element_resolver(const FiniteGroup& G) {
  return [&G](const std::string& tok) -> Elem {
    for (Elem a = 0; a < G.order(); ++a)
      if (G.element_name(a) == tok) return a;
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0 || static_cast<std::size_t>(v) >= G.order())
      throw std::out_of_range("element '" + tok + "' not in " + G.label());
    return static_cast<Elem>(v);
  };
}

// ---------------------------------------------------------------------------
// Colors and normal forms

inline Elem output_color_at(const FiniteGroup& G, const GTree& t, int i) {
  const auto& n = t.nodes()[i];
  switch (n.kind) {
    case NodeKind::Unit: return FiniteGroup::identity();
    case NodeKind::Leaf:
      if (n.elem >= G.order()) throw TreeError("leaf color out of range");
      return n.elem;
    case NodeKind::Label:
      if (n.elem >= G.order()) throw TreeError("label out of range");
      return G.conj(n.elem, output_color_at(G, t, i + 1));
    case NodeKind::Tensor:
      return G.mul(output_color_at(G, t, t.child_index(i, 0)), output_color_at(G, t, t.child_index(i, 1)));
  }
  return 0;
}

inline Elem output_color(const FiniteGroup& G, const GTree& t) { return output_color_at(G, t, 0); }

struct NormalForm {
  Permutation sigma;  // slot -> position
  Tuple b;            // accumulated label per slot
  ColorSignature signature;
  bool operator==(const NormalForm&) const = default;
  DecoratedTuple tuple() const { return {sigma, b}; }
  std::string str() const { return tuple().str(); }
};

/// Reads the standard form directly: positions are the left-to-right leaf
/// order, labels are path products with the outermost label on the left.
inline NormalForm normalize(const FiniteGroup& G, const GTree& t) {
  const auto& nodes = t.nodes();
  const int count = t.node_count();
  std::size_t r = 0;
  for (const auto& n : nodes) r += n.kind == NodeKind::Leaf;
  std::vector<int> img(r, -1);
  Tuple b(r), g(r);
  // acc[i]: product of the labels on the path from the root to node i
  thread_local std::vector<Elem> acc, st;
  acc.assign(static_cast<std::size_t>(count), FiniteGroup::identity());
  int pos = 0;
  for (int i = 0; i < count; ++i) {
    const auto& n = nodes[i];
    if (n.kind == NodeKind::Label) {
      if (n.elem >= G.order()) throw TreeError("label out of range");
      acc[i + 1] = G.mul(acc[i], n.elem);
    } else if (n.kind == NodeKind::Tensor) {
      acc[i + 1] = acc[i];
      acc[i + 1 + nodes[i + 1].size] = acc[i];
    } else if (n.kind == NodeKind::Leaf) {
      const auto u = static_cast<std::size_t>(n.slot - 1);
      if (n.slot < 1 || u >= r || img[u] >= 0) throw TreeError("input slots are not exactly 1..r: " + t.str());
      if (n.elem >= G.order()) throw TreeError("leaf color out of range");
      img[u] = pos++;
      b[u] = acc[i];
      g[u] = n.elem;
    }
  }
  // output color, children before parents
  st.clear();
  for (int i = count; i-- > 0;) {
    const auto& n = nodes[i];
    switch (n.kind) {
      case NodeKind::Unit: st.push_back(FiniteGroup::identity()); break;
      case NodeKind::Leaf: st.push_back(n.elem); break;
      case NodeKind::Label: st.back() = G.conj(n.elem, st.back()); break;
      case NodeKind::Tensor: {
        const Elem left = st.back();
        st.pop_back();
        st.back() = G.mul(left, st.back());
        break;
      }
    }
  }
  return {Permutation::from_images(std::move(img)), std::move(b), {std::move(g), st.back()}};
}

/// Standard-shape tree: left comb of L_{b}(leaf), inputs ordered by sigma;
/// labels equal to e are omitted; arity 0 gives U.
inline GTree denormalize(const NormalForm& nf) {
  const std::size_t r = nf.b.size();
  if (r == 0) return GTree::unit();
  const Permutation inv = nf.sigma.inverse();
  auto piece = [&](std::size_t p) {
    const auto u = static_cast<std::size_t>(inv[p]);
    GTree l = GTree::leaf(static_cast<int>(u + 1), nf.signature.inputs.at(u));
    return nf.b[u] == 0 ? l : GTree::label(nf.b[u], l);
  };
  GTree t = piece(0);
  for (std::size_t p = 1; p < r; ++p) t = GTree::tensor(t, piece(p));
  return t;
}

/// Substitute `inner` for input slot j of `outer`.
inline GTree graft(const FiniteGroup& G, const GTree& outer, int j, const GTree& inner) {
  outer.validate();
  inner.validate();
  const int r = outer.arity(), s = inner.arity();
  if (j < 1 || j > r) throw TreeError("graft: no input slot " + std::to_string(j));
  const auto& on = outer.nodes();
  int at = 0;
  while (!(on[at].kind == NodeKind::Leaf && on[at].slot == j)) ++at;
  if (on[at].elem != output_color(G, inner)) {
    throw TreeError("graft: color mismatch at slot " + std::to_string(j));
  }
  const int delta = inner.node_count() - 1;
  std::vector<TreeNode> n;
  n.reserve(on.size() + static_cast<std::size_t>(delta));
  auto renumber = [&](TreeNode x) {
    if (x.kind == NodeKind::Leaf && x.slot > j) x.slot += s - 1;
    return x;
  };
  for (int i = 0; i < at; ++i) {
    n.push_back(renumber(on[i]));
    if (i + on[i].size > at) n.back().size += delta;
  }
  for (TreeNode x : inner.nodes()) {
    if (x.kind == NodeKind::Leaf) x.slot += j - 1;
    n.push_back(x);
  }
  for (std::size_t i = static_cast<std::size_t>(at) + 1; i < on.size(); ++i) n.push_back(renumber(on[i]));
  return GTree(std::move(n));
}

}  // namespace e2g
