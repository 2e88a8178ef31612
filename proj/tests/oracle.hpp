#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's group tables.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // 0-based one-line

/// (a o b)(i) = a(b(i))
inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

/// Position of a permutation in lexicographic order of S_n.
inline int lex_rank(const Perm& p) {
  Perm q(p.size());
  std::iota(q.begin(), q.end(), 0);
  int k = 0;
  do {
    if (q == p) return k;
    ++k;
  } while (std::next_permutation(q.begin(), q.end()));
  return -1;
}

/// Transposition of the 1-based points a, b in S_n.
inline Perm transposition(int n, int a, int b) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a - 1], p[b - 1]);
  return p;
}

/// Rank of an integer matrix over Z/p, p prime (Gaussian elimination).
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    long long inv = 1;
    while (m[rank][c] * inv % p != 1) ++inv;
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Naive orbit counts by union-find over every (sigma, b), sigma slot -> position.

using Table = std::vector<std::vector<int>>;

inline Table cyclic_table(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

/// S_n in lexicographic one-line order; a*b = a o b.
inline Table symmetric_table(int n) {
  std::vector<Perm> all;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<Perm, int> at;
  for (std::size_t i = 0; i < all.size(); ++i) at[all[i]] = static_cast<int>(i);
  Table t(all.size(), std::vector<int>(all.size()));
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) t[a][b] = at[compose(all[a], all[b])];
  return t;
}

struct UnionFind {
  std::vector<std::size_t> up;
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { up[find(a)] = find(b); }
};

namespace naive {

struct Space {
  const Table& t;
  int m, r;
  std::vector<Perm> perms;
  std::map<Perm, int> rank;
  std::size_t B = 1;

  Space(const Table& table, int arity) : t(table), m(static_cast<int>(table.size())), r(arity) {
    Perm p(r);
    std::iota(p.begin(), p.end(), 0);
    do {
      rank[p] = static_cast<int>(perms.size());
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (int i = 0; i < r; ++i) B *= static_cast<std::size_t>(m);
  }
  std::size_t size() const { return perms.size() * B; }
  int inv(int a) const {
    for (int x = 0; x < m; ++x)
      if (t[a][x] == 0) return x;
    return -1;
  }
  int conj(int a, int x) const { return t[t[a][x]][inv(a)]; }
  std::vector<int> labels(std::size_t c) const {
    std::vector<int> b(r);
    for (int i = r; i-- > 0;) {
      b[i] = static_cast<int>(c % m);
      c /= m;
    }
    return b;
  }
  std::size_t code(const Perm& s, const std::vector<int>& b) const {
    std::size_t c = 0;
    for (int v : b) c = c * m + v;
    return rank.at(s) * B + c;
  }
};

}  // namespace naive

/// Components of the crossed action with input colors g and output h.
inline std::size_t naive_pi0_component(const Table& t, const std::vector<int>& g, int h) {
  const naive::Space S(t, static_cast<int>(g.size()));
  UnionFind uf(S.size());
  std::vector<char> member(S.size(), 0);
  for (std::size_t si = 0; si < S.perms.size(); ++si) {
    const Perm& s = S.perms[si];
    const Perm at = inverse(s);  // position -> slot
    for (std::size_t bc = 0; bc < S.B; ++bc) {
      const auto b = S.labels(bc);
      const std::size_t me = si * S.B + bc;
      int x = 0;
      for (int p = 0; p < S.r; ++p) x = t[x][S.conj(b[at[p]], g[at[p]])];
      member[me] = x == h;
      for (int k = 0; k + 1 < S.r; ++k) {
        const int l = at[k], rt = at[k + 1];
        auto b2 = b;
        b2[rt] = t[S.conj(b[l], g[l])][b[rt]];
        Perm s2 = s;
        s2[l] = k + 1;
        s2[rt] = k;
        uf.unite(me, S.code(s2, b2));
      }
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (member[i]) roots.insert(uf.find(i));
  return roots.size();
}

/// Components of the plain Hurwitz action on positional tuples together with
/// simultaneous conjugation of all entries.
inline std::size_t naive_pi0_hurwitz_space(const Table& t, int r) {
  const naive::Space S(t, r);
  UnionFind uf(S.size());
  for (std::size_t si = 0; si < S.perms.size(); ++si) {
    const Perm& s = S.perms[si];
    for (std::size_t bc = 0; bc < S.B; ++bc) {
      const auto b = S.labels(bc);
      for (int k = 0; k + 1 < r; ++k) {
        auto b2 = b;
        b2[k] = S.conj(b[k], b[k + 1]);
        b2[k + 1] = b[k];
        Perm s2 = s;
        for (auto& v : s2) v = v == k ? k + 1 : v == k + 1 ? k : v;
        uf.unite(si * S.B + bc, S.code(s2, b2));
      }
      for (int a = 1; a < S.m; ++a) {
        auto b2 = b;
        for (auto& v : b2) v = S.conj(a, v);
        uf.unite(si * S.B + bc, S.code(s, b2));
      }
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < S.size(); ++i) roots.insert(uf.find(i));
  return roots.size();
}

}  // namespace oracle
