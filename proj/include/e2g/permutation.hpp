#pragma once

// Permutations of {0..n-1}, stored in one-line form. Text I/O is 1-based.
// Composition follows the library-wide convention (a * b)(i) = a(b(i)).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace e2g {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

  /// From 0-based images; throws unless the images form a bijection.
  static Permutation from_images(std::vector<int> images) {
    Permutation p;
    p.img_ = std::move(images);
    const int n = static_cast<int>(p.img_.size());
    auto bad = [&] { throw std::invalid_argument("not a permutation: " + p.one_line()); };
    if (n <= 64) {
      std::uint64_t seen = 0;
      for (int v : p.img_) {
        if (v < 0 || v >= n || (seen >> v & 1u)) bad();
        seen |= std::uint64_t{1} << v;
      }
      return p;
    }
    std::vector<bool> seen(p.img_.size(), false);
    for (int v : p.img_) {
      if (v < 0 || v >= n || seen[v]) bad();
      seen[v] = true;
    }
    return p;
  }

  /// From 1-based one-line notation, e.g. {2,1,3}.
  static Permutation from_one_line(const std::vector<int>& one_based) {
    std::vector<int> img(one_based.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = one_based[i] - 1;
    return from_images(std::move(img));
  }

  /// Adjacent transposition swapping i and i+1 (0-based).
  static Permutation transposition(std::size_t n, std::size_t i) {
    Permutation p(n);
    std::swap(p.img_[i], p.img_[i + 1]);
    return p;
  }

  static Permutation longest(std::size_t n) {
    Permutation p(n);
    std::reverse(p.img_.begin(), p.img_.end());
    return p;
  }

  std::size_t size() const { return img_.size(); }
  int operator()(std::size_t i) const { return img_[i]; }
  int operator[](std::size_t i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("permutation size mismatch");
    Permutation p;
    p.img_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) p.img_[i] = img_[rhs.img_[i]];
    return p;
  }

  Permutation inverse() const {
    Permutation p;
    p.img_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) p.img_[img_[i]] = static_cast<int>(i);
    return p;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (img_[i] != static_cast<int>(i)) return false;
    return true;
  }

  int inversions() const {
    int c = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (img_[i] > img_[j]) ++c;
    return c;
  }

  /// Swap the entries at positions i, i+1 (right multiplication by s_i).
  void swap_positions(std::size_t i) { std::swap(img_[i], img_[i + 1]); }
  /// Swap the values i, i+1 (left multiplication by s_i).
  void swap_values(std::size_t i) {
    for (int& v : img_) {
      if (v == static_cast<int>(i)) v = static_cast<int>(i + 1);
      else if (v == static_cast<int>(i + 1)) v = static_cast<int>(i);
    }
  }

  std::string one_line() const {
    std::string s = "[";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(img_[i] + 1);
    }
    return s + "]";
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Block substitution: strand j (1-based) of p becomes the s strands of q.
inline Permutation perm_compose(const Permutation& p, std::size_t j, const Permutation& q) {
  const std::size_t r = p.size(), s = q.size();
  if (j < 1 || j > r) throw std::out_of_range("perm_compose: slot out of range");
  const int pj = p[j - 1];
  auto expand = [&](int y) { return y < pj ? y : y + static_cast<int>(s) - 1; };
  std::vector<int> img(r + s - 1);
  for (std::size_t x = 0; x < r + s - 1; ++x) {
    if (x < j - 1) img[x] = expand(p[x]);
    else if (x >= j - 1 + s) img[x] = expand(p[x - s + 1]);
    else img[x] = pj + q[x - (j - 1)];
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace e2g

template <>
struct std::hash<e2g::Permutation> {
  std::size_t operator()(const e2g::Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (int v : p.images()) h = h * 31 + static_cast<std::size_t>(v);
    return h;
  }
};
