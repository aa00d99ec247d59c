#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: trees are parent-pointer arrays keyed by inorder rank, and
// fetch-and-discard is read off a plain splay-to-root traversal.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "splaytrav/tree.hpp"

namespace oracle {

struct Shape {
  std::vector<int> parent, left, right;
  int root = -1;

  int size() const { return static_cast<int>(left.size()); }
};

// Builds the shape of a library tree, renaming nodes by inorder rank.
inline Shape from_tree(const splaytrav::Tree& t) {
  Shape s;
  std::vector<splaytrav::Handle> order;
  std::vector<int> rank(t.store_size(), -1);
  std::vector<splaytrav::Handle> stack;
  for (splaytrav::Handle v = t.root(); v != splaytrav::kNone || !stack.empty();) {
    while (v != splaytrav::kNone) {
      stack.push_back(v);
      v = t.left(v);
    }
    v = stack.back();
    stack.pop_back();
    rank[v] = static_cast<int>(order.size());
    order.push_back(v);
    v = t.right(v);
  }
  const int n = static_cast<int>(order.size());
  s.parent.assign(n, -1);
  s.left.assign(n, -1);
  s.right.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const auto v = order[i];
    if (t.left(v) != splaytrav::kNone) s.left[i] = rank[t.left(v)], s.parent[rank[t.left(v)]] = i;
    if (t.right(v) != splaytrav::kNone) s.right[i] = rank[t.right(v)], s.parent[rank[t.right(v)]] = i;
  }
  s.root = n ? rank[t.root()] : -1;
  return s;
}

// Complete tree of height h on keys lo..lo+2^{h+1}-2.
inline int build_complete(Shape& s, int lo, int h) {
  if (h < 0) return -1;
  const int mid = lo + (1 << h) - 1;
  const int l = build_complete(s, lo, h - 1);
  const int r = build_complete(s, mid + 1, h - 1);
  s.left[mid] = l;
  s.right[mid] = r;
  if (l >= 0) s.parent[l] = mid;
  if (r >= 0) s.parent[r] = mid;
  return mid;
}

// M_h with e nodes chained above it as rightmost ancestors.
inline Shape maximal_extended(int h, int e) {
  const int m = (1 << (h + 1)) - 1;
  Shape s;
  s.parent.assign(m + e, -1);
  s.left.assign(m + e, -1);
  s.right.assign(m + e, -1);
  s.root = build_complete(s, 0, h);
  for (int i = 0; i < e; ++i) {
    const int x = m + i;
    s.left[x] = s.root;
    if (s.root >= 0) s.parent[s.root] = x;
    s.root = x;
  }
  return s;
}

inline void rotate(Shape& s, int x) {
  const int p = s.parent[x], g = s.parent[p];
  if (s.left[p] == x) {
    s.left[p] = s.right[x];
    if (s.right[x] >= 0) s.parent[s.right[x]] = p;
    s.right[x] = p;
  } else {
    s.right[p] = s.left[x];
    if (s.left[x] >= 0) s.parent[s.left[x]] = p;
    s.left[x] = p;
  }
  s.parent[p] = x;
  s.parent[x] = g;
  if (g < 0)
    s.root = x;
  else if (s.left[g] == p)
    s.left[g] = x;
  else
    s.right[g] = x;
}

inline std::uint64_t splay(Shape& s, int x) {
  std::uint64_t rotations = 0;
  while (s.parent[x] >= 0) {
    const int p = s.parent[x], g = s.parent[p];
    if (g < 0) {
      rotate(s, x);
      rotations += 1;
    } else if ((s.left[g] == p) == (s.left[p] == x)) {
      rotate(s, p);
      rotate(s, x);
      rotations += 2;
    } else {
      rotate(s, x);
      rotate(s, x);
      rotations += 2;
    }
  }
  return rotations;
}

struct Traversal {
  std::uint64_t rotations = 0;
  mpz_class tsl = 0;
  std::uint64_t rp = 0;
  std::uint64_t irp = 0;
  std::vector<std::uint64_t> spine_lengths;
};

// Splays keys 0..n-1 in order. Before splaying key k the not-yet-visited
// nodes form the right subtree of key k-1 (the whole tree for k = 0), which
// is fetch(k, T); key k is its leftmost node, so its depth there is the
// spine length.
inline Traversal traverse(Shape s) {
  Traversal out;
  const int n = s.size();
  const int y = s.root;
  bool y_left_spine = true;
  for (int k = 0; k <= n; ++k) {
    const int sub = k == 0 ? s.root : s.right[k - 1];
    if (sub == y && y >= 0) ++out.rp;
    bool on_spine = false;
    for (int v = sub; v >= 0; v = s.left[v]) on_spine |= v == y;
    if (y_left_spine && !on_spine) {
      out.irp = static_cast<std::uint64_t>(k);
      y_left_spine = false;
    }
    if (k == n) break;
    std::uint64_t len = 0;
    for (int v = sub; v >= 0; v = s.left[v]) ++len;
    out.spine_lengths.push_back(len);
    out.tsl += static_cast<unsigned long>(len);
    out.rotations += splay(s, k);
  }
  return out;
}

// Long division of p / 2^q, truncated to `places` fractional digits.
inline std::string dyadic_decimal(const mpz_class& p, unsigned long q, unsigned long places) {
  const mpz_class denom = mpz_class(1) << q;
  mpz_class whole = p / denom;
  mpz_class rem = p % denom;
  std::string s = whole.get_str() + ".";
  for (unsigned long i = 0; i < places; ++i) {
    rem *= 10;
    const mpz_class d = rem / denom;
    rem %= denom;
    s += static_cast<char>('0' + d.get_ui());
  }
  return s;
}

// Longest proper border of s, by direct comparison.
inline std::size_t naive_border(std::string_view s) {
  for (std::size_t len = s.empty() ? 0 : s.size() - 1; len > 0; --len)
    if (s.substr(0, len) == s.substr(s.size() - len)) return len;
  return 0;
}

// Max over all prefixes of the longest proper border.
inline std::size_t naive_max_border(std::string_view s) {
  std::size_t best = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) best = std::max(best, naive_border(s.substr(0, i)));
  return best;
}

}  // namespace oracle
