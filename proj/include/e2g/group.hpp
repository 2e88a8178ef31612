#pragma once

// Finite groups given by a multiplication table over dense element indices.
//
// Element 0 is always the identity. Permutation groups enumerate their
// elements in lexicographic one-line order, and permutations compose as
// functions: (s * t)(i) = s(t(i)), i.e. the right factor is applied first.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace e2g {

using Elem = std::uint16_t;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a table violates a group axiom; carries the failing triple.
class GroupAxiomError : public GroupError {
 public:
  GroupAxiomError(const std::string& what, std::vector<int> witness)
      : GroupError(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

class FiniteGroup {
 public:
  /// Validates eagerly: O(n^3) associativity sweep.
  FiniteGroup(std::vector<std::vector<Elem>> table, std::string label,
              std::vector<std::string> element_names = {})
      : label_(std::move(label)), names_(std::move(element_names)) {
    const std::size_t n = table.size();
    if (n == 0) throw GroupError("group table is empty");
    mul_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw GroupError("row " + std::to_string(a) + " has " +
                         std::to_string(table[a].size()) + " entries, expected " +
                         std::to_string(n));
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) {
          throw GroupError("entry (" + std::to_string(a) + "," + std::to_string(b) +
                           ") = " + std::to_string(table[a][b]) + " is out of range");
        }
        mul_[a * n + b] = table[a][b];
      }
    }
    order_ = n;
    validate();
    if (!names_.empty() && names_.size() != n) {
      throw GroupError("element name count does not match the group order");
    }
  }

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  static constexpr Elem identity() { return 0; }

  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// h g h^-1
  Elem conj(Elem h, Elem g) const { return mul(mul(h, g), inv_[h]); }

  bool is_abelian() const {
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  Elem product(const std::vector<Elem>& xs) const {
    Elem r = identity();
    for (Elem x : xs) r = mul(r, x);
    return r;
  }

  std::string element_name(Elem a) const {
    return names_.empty() ? std::to_string(a) : names_[a];
  }

  /// Conjugacy class representatives (minimum index of each class).
  std::vector<Elem> conjugacy_classes() const {
    std::vector<bool> seen(order_, false);
    std::vector<Elem> reps;
    for (Elem g = 0; g < order_; ++g) {
      if (seen[g]) continue;
      reps.push_back(g);
      for (Elem h = 0; h < order_; ++h) seen[conj(h, g)] = true;
    }
    return reps;
  }

  bool operator==(const FiniteGroup& o) const { return mul_ == o.mul_; }

 private:
  void validate() {
    const auto n = static_cast<Elem>(order_);
    for (Elem a = 0; a < n; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a) {
        throw GroupAxiomError("element 0 is not a two-sided identity at " + std::to_string(a),
                              {0, a});
      }
    }
    inv_.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
      bool found = false;
      for (Elem b = 0; b < n; ++b) {
        if (mul(a, b) == 0 && mul(b, a) == 0) {
          inv_[a] = b;
          found = true;
          break;
        }
      }
      if (!found) {
        throw GroupAxiomError("element " + std::to_string(a) + " has no two-sided inverse", {a});
      }
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw GroupAxiomError("associativity fails on (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")",
                                  {a, b, c});
          }
  }

  std::size_t order_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::string label_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class GroupMismatch : public GroupError {
 public:
  GroupMismatch() : GroupError("elements belong to different groups") {}
};

/// An element bound to its group; mixing groups throws GroupMismatch.
struct GroupElement {
  GroupPtr group;
  Elem index = 0;

  GroupElement(GroupPtr g, Elem i) : group(std::move(g)), index(i) {
    if (index >= group->order()) throw GroupError("element index out of range");
  }
  bool operator==(const GroupElement& o) const {
    return index == o.index && (group == o.group || *group == *o.group);
  }
};

inline void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.group != b.group && !(*a.group == *b.group)) throw GroupMismatch();
}

inline GroupElement product(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  return {a.group, a.group->mul(a.index, b.index)};
}

inline GroupElement inverse(const GroupElement& a) { return {a.group, a.group->inv(a.index)}; }

inline GroupElement conjugate(const GroupElement& h, const GroupElement& g) {
  require_same_group(h, g);
  return {h.group, h.group->conj(h.index, g.index)};
}

namespace detail {

inline std::vector<std::vector<int>> all_one_line_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::string perm_cycle_name(const std::vector<int>& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      s += std::to_string(j + 1);
      j = static_cast<std::size_t>(p[j]);
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

/// Group of permutations (given in one-line form, identity first after sorting).
inline FiniteGroup permutation_group(std::vector<std::vector<int>> perms, std::string label) {
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<int>, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Elem>(i);
  const std::size_t n = perms.size();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(perm_cycle_name(perms[a]));
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> c(perms[a].size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[a][perms[b][i]];
      auto it = index.find(c);
      if (it == index.end()) throw GroupError("permutation set is not closed under composition");
      table[a][b] = it->second;
    }
  }
  return FiniteGroup(std::move(table), std::move(label), std::move(names));
}

}  // namespace detail

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup(std::move(t), "C" + std::to_string(n));
}

inline FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw GroupError("symmetric group degree must be in 1..6");
  return detail::permutation_group(detail::all_one_line_perms(n), "S" + std::to_string(n));
}

/// Dihedral group of order 2n acting on the vertices of an n-gon (n >= 3).
inline FiniteGroup dihedral_group(int n) {
  if (n < 3) throw GroupError("dihedral group needs n >= 3 (order 2n)");
  std::vector<std::vector<int>> perms;
  for (int k = 0; k < n; ++k) {
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
      rot[i] = (i + k) % n;
      refl[i] = ((k - i) % n + n) % n;
    }
    perms.push_back(rot);
    perms.push_back(refl);
  }
  return detail::permutation_group(std::move(perms), "D" + std::to_string(n));
}

/// (a1,b1)(a2,b2) = (a1a2, b1b2); element (a,b) has index a*|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const std::size_t na = A.order(), nb = B.order();
  std::vector<std::vector<Elem>> t(na * nb, std::vector<Elem>(na * nb));
  std::vector<std::string> names;
  for (Elem a1 = 0; a1 < na; ++a1)
    for (Elem b1 = 0; b1 < nb; ++b1) {
      names.push_back("(" + A.element_name(a1) + "," + B.element_name(b1) + ")");
      for (Elem a2 = 0; a2 < na; ++a2)
        for (Elem b2 = 0; b2 < nb; ++b2)
          t[a1 * nb + b1][a2 * nb + b2] =
              static_cast<Elem>(A.mul(a1, a2) * nb + B.mul(b1, b2));
    }
  return FiniteGroup(std::move(t), A.label() + "x" + B.label(), std::move(names));
}

/// Line 1: order n. Then n rows of n indices; row i column j is i*j.
inline FiniteGroup read_group_table(std::istream& in, std::string label = "table") {
  long long n = 0;
  if (!(in >> n) || n <= 0) throw GroupError("table file: line 1 must be a positive order");
  if (n > 4096) throw GroupError("table file: order too large");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      long long v = 0;
      if (!(in >> v)) {
        throw GroupError("table file: missing entry at row " + std::to_string(i + 1) +
                         ", column " + std::to_string(j + 1));
      }
      if (v < 0 || v >= n) {
        throw GroupError("table file: entry " + std::to_string(v) + " at row " +
                         std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                         " is out of range");
      }
      t[i][j] = static_cast<Elem>(v);
    }
  std::string extra;
  if (in >> extra) throw GroupError("table file: trailing data after " + std::to_string(n) + " rows");
  return FiniteGroup(std::move(t), std::move(label));
}

inline FiniteGroup read_group_table_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw GroupError("cannot open group table file '" + path + "'");
  return read_group_table(f, "table:" + path);
}

/// Parses `C<n>`, `S<n>`, `D<n>`, `A x B` (left-associative), or `file:<path>`.
inline FiniteGroup make_group(std::string_view spec) {
  std::string s;
  for (char ch : spec)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.rfind("file:", 0) == 0) return read_group_table_file(s.substr(5));
  if (s.empty()) throw GroupError("empty group spec");

  std::vector<std::string> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == 'x') {
      factors.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  auto atom = [&](const std::string& f, std::size_t pos) {
    if (f.size() < 2 || std::string("CSD").find(f[0]) == std::string::npos) {
      throw GroupError("group spec '" + s + "': expected C<n>, S<n> or D<n> at column " +
                       std::to_string(pos + 1));
    }
    for (std::size_t i = 1; i < f.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(f[i])))
        throw GroupError("group spec '" + s + "': bad digit at column " +
                         std::to_string(pos + i + 1));
    if (f.size() > 4) throw GroupError("group spec '" + s + "': parameter too large");
    const int n = std::stoi(f.substr(1));
    switch (f[0]) {
      case 'C': return cyclic_group(n);
      case 'S': return symmetric_group(n);
      default: return dihedral_group(n);
    }
  };
  std::size_t pos = 0;
  FiniteGroup g = atom(factors[0], pos);
  pos += factors[0].size() + 1;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    g = direct_product(g, atom(factors[i], pos));
    pos += factors[i].size() + 1;
  }
  return g;
}

inline GroupPtr make_group_ptr(std::string_view spec) {
  return std::make_shared<const FiniteGroup>(make_group(spec));
}

}  // namespace e2g
