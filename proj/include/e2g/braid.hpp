#pragma once

// Braid words on r strands and equality through the left-greedy Garside
// normal form. Letter +j is the positive crossing of positions j, j+1.
//
// Convention: pi(l1 l2 ... lk) = s_{l1} o s_{l2} o ... o s_{lk}, so the
// rightmost letter happens first and pi maps source positions to target
// positions.

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"

namespace e2g {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int r, std::vector<int> ls) : strands(r), letters(std::move(ls)) {
    if (r < 0) throw std::invalid_argument("braid: negative strand count");
    for (int l : letters) {
      if (l == 0 || std::abs(l) >= r) {
        throw std::out_of_range("braid letter " + std::to_string(l) + " out of range for " +
                                std::to_string(r) + " strands");
      }
    }
  }

  static BraidWord identity(int r) { return BraidWord(r, {}); }

  BraidWord operator*(const BraidWord& rhs) const {
    if (strands != rhs.strands) throw std::invalid_argument("braid strand count mismatch");
    BraidWord w = *this;
    w.letters.insert(w.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return w;
  }

  BraidWord inverse() const {
    BraidWord w(strands, {});
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(letters[i]);
    }
    return s;
  }

  bool operator==(const BraidWord&) const = default;
};

/// Whitespace-separated signed indices, e.g. "1 2 -1".
inline BraidWord parse_braid(int strands, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> ls;
  std::string tok;
  std::size_t pos = 0;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      throw std::invalid_argument("braid word: bad token '" + tok + "' at index " +
                                  std::to_string(pos));
    }
    ls.push_back(v);
    ++pos;
  }
  return BraidWord(strands, std::move(ls));
}

inline Permutation underlying_permutation(const BraidWord& w) {
  Permutation p(static_cast<std::size_t>(w.strands));
  // p := p o s_l for each letter in order.
  for (int l : w.letters) p.swap_positions(static_cast<std::size_t>(std::abs(l) - 1));
  return p;
}

inline bool is_pure(const BraidWord& w) { return underlying_permutation(w).is_identity(); }

/// Delta^inf * A_1 * ... * A_k with every A_i a proper nontrivial simple
/// braid (positive permutation braid) and each pair left-weighted.
struct GarsideForm {
  int strands = 1;
  int inf = 0;
  std::vector<Permutation> factors;
  bool operator==(const GarsideForm&) const = default;
};

namespace detail {

inline bool in_finishing_set(const Permutation& a, std::size_t i) { return a[i] > a[i + 1]; }

inline bool in_starting_set(const Permutation& b, std::size_t i) {
  // s_i o b shorter than b  <=>  value i sits after value i+1.
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (b[x] == static_cast<int>(i)) return false;
    if (b[x] == static_cast<int>(i + 1)) return true;
  }
  return false;
}

/// Make (a, b) left-weighted: move starting letters of b to the end of a
/// while a stays simple. Returns true if anything moved.
inline bool left_weight(Permutation& a, Permutation& b) {
  bool changed = false;
  const std::size_t n = a.size();
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (in_starting_set(b, i) && !in_finishing_set(a, i)) {
        a.swap_positions(i);
        b.swap_values(i);
        again = changed = true;
      }
    }
  }
  return changed;
}

inline Permutation tau(const Permutation& p) {
  const auto w0 = Permutation::longest(p.size());
  return w0 * p * w0;
}

/// Reduced word (0-based letters) of a permutation, deterministic.
inline std::vector<int> reduced_word(Permutation p) {
  std::vector<int> rev;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        rev.push_back(static_cast<int>(i));
        p.swap_positions(i);
        found = true;
        break;
      }
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace detail

inline GarsideForm garside_form(const BraidWord& w) {
  GarsideForm g;
  g.strands = w.strands;
  const auto n = static_cast<std::size_t>(std::max(w.strands, 0));
  if (n <= 1) return g;
  const auto w0 = Permutation::longest(n);

  auto push = [&](Permutation x) {
    // Insert x at the end and restore left-weightedness from the right.
    g.factors.push_back(std::move(x));
    for (std::size_t k = g.factors.size() - 1; k > 0; --k) {
      if (!detail::left_weight(g.factors[k - 1], g.factors[k])) break;
    }
  };

  for (int l : w.letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    if (l > 0) {
      push(Permutation::transposition(n, i));
    } else {
      // s_i^-1 = Delta^-1 tau(s_i^-1 Delta); shift Delta^-1 past the factors.
      --g.inf;
      for (auto& f : g.factors) f = detail::tau(f);
      push(detail::tau(Permutation::transposition(n, i) * w0));
    }
  }
  while (!g.factors.empty() && g.factors.back().is_identity()) g.factors.pop_back();
  std::size_t lead = 0;
  while (lead < g.factors.size() && g.factors[lead] == w0) ++lead;
  if (lead > 0) {
    g.inf += static_cast<int>(lead);
    g.factors.erase(g.factors.begin(), g.factors.begin() + static_cast<std::ptrdiff_t>(lead));
  }
  return g;
}

/// Serialize a Garside form back to letters.
inline BraidWord to_word(const GarsideForm& g) {
  BraidWord w(g.strands, {});
  const auto n = static_cast<std::size_t>(std::max(g.strands, 0));
  if (n <= 1) return w;
  std::vector<int> delta;
  for (int l : detail::reduced_word(Permutation::longest(n))) delta.push_back(l + 1);
  for (int k = 0; k < std::abs(g.inf); ++k) {
    if (g.inf > 0) {
      w.letters.insert(w.letters.end(), delta.begin(), delta.end());
    } else {
      for (auto it = delta.rbegin(); it != delta.rend(); ++it) w.letters.push_back(-*it);
    }
  }
  for (const auto& f : g.factors)
    for (int l : detail::reduced_word(f)) w.letters.push_back(l + 1);
  return w;
}

inline BraidWord normal_form(const BraidWord& w) { return to_word(garside_form(w)); }

inline bool braid_equal(const BraidWord& u, const BraidWord& v) {
  return u.strands == v.strands && garside_form(u) == garside_form(v);
}

/// Replace strand j (1-based, source end) of `outer` with the strands of
/// `inner`; inner is inserted at the source end, i.e. it happens first.
inline BraidWord cable_compose(const BraidWord& outer, int j, const BraidWord& inner) {
  const int r = outer.strands, s = inner.strands;
  if (j < 1 || j > r) throw std::out_of_range("cable_compose: strand index out of range");
  // Fat strand position before each letter, scanning in temporal order.
  std::vector<int> fat_before(outer.letters.size());
  int f = j;
  for (std::size_t t = outer.letters.size(); t-- > 0;) {
    fat_before[t] = f;
    const int k = std::abs(outer.letters[t]);
    if (k == f) f = k + 1;
    else if (k + 1 == f) f = k;
  }
  BraidWord out(r + s - 1, {});
  for (std::size_t t = 0; t < outer.letters.size(); ++t) {
    const int l = outer.letters[t], k = std::abs(l), sign = l > 0 ? 1 : -1;
    const int fb = fat_before[t];
    if (k == fb) {
      // block at k..k+s-1 crosses the thin strand at k+s
      if (sign > 0) for (int m = k; m <= k + s - 1; ++m) out.letters.push_back(m);
      else for (int m = k; m <= k + s - 1; ++m) out.letters.push_back(-m);
    } else if (k + 1 == fb) {
      // thin strand at k crosses the block at k+1..k+s
      if (sign > 0) for (int m = k + s - 1; m >= k; --m) out.letters.push_back(m);
      else for (int m = k + s - 1; m >= k; --m) out.letters.push_back(-m);
    } else if (k > fb) {
      out.letters.push_back(sign * (k + s - 1));
    } else {
      out.letters.push_back(l);
    }
  }
  for (int l : inner.letters) {
    const int k = std::abs(l) + j - 1;
    out.letters.push_back(l > 0 ? k : -k);
  }
  return out;
}

}  // namespace e2g
