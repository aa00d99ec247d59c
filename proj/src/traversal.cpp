#include "splaytrav/traversal.hpp"

#include <algorithm>
#include <stdexcept>

namespace splaytrav {

std::map<std::string, std::string> TraversalStats::flat() const {
  return {
      {"steps", std::to_string(steps)},
      {"tsl", to_string(tsl)},
      {"rotations", std::to_string(rotations)},
      {"rp", std::to_string(rp)},
      {"irp", std::to_string(irp)},
  };
}

namespace {

// Rotates c above its parent p; pp is p's parent (kNone when p is the root).
void rotate_up(Tree& t, Handle c, Handle p, Handle pp) {
  if (t.left(p) == c) {
    t.set_left(p, t.right(c));
    t.set_right(c, p);
  } else {
    t.set_right(p, t.left(c));
    t.set_left(c, p);
  }
  if (pp == kNone) {
    t.set_root(c);
  } else if (t.left(pp) == p) {
    t.set_left(pp, c);
  } else {
    t.set_right(pp, c);
  }
}

// Splays path.back() to the root; path runs from the root down to it.
std::uint64_t splay_path(Tree& t, std::vector<Handle> path) {
  std::uint64_t rotations = 0;
  while (path.size() > 1) {
    const std::size_t n = path.size();
    const Handle x = path[n - 1];
    const Handle p = path[n - 2];
    if (n == 2) {
      rotate_up(t, x, p, kNone);  // zig
      rotations += 1;
      path.assign(1, x);
      continue;
    }
    const Handle g = path[n - 3];
    const Handle gg = n >= 4 ? path[n - 4] : kNone;
    const bool x_left = t.left(p) == x;
    const bool p_left = t.left(g) == p;
    if (x_left == p_left) {  // zig-zig
      rotate_up(t, p, g, gg);
      rotate_up(t, x, p, gg);
    } else {  // zig-zag
      rotate_up(t, x, p, g);
      rotate_up(t, x, g, gg);
    }
    rotations += 2;
    path.resize(n - 3);
    path.push_back(x);
  }
  return rotations;
}

std::vector<Handle> path_to(const Tree& t, Handle v) {
  if (t.empty() || v == kNone || v >= t.store_size()) throw std::out_of_range("node is not in the tree");
  // DFS with an explicit parent array over the reachable part.
  std::vector<Handle> parent(t.store_size(), kNone);
  std::vector<Handle> stack{t.root()};
  bool found = false;
  while (!stack.empty()) {
    Handle u = stack.back();
    stack.pop_back();
    if (u == v) {
      found = true;
      break;
    }
    for (Handle c : {t.left(u), t.right(u)}) {
      if (c != kNone) {
        parent[c] = u;
        stack.push_back(c);
      }
    }
  }
  if (!found) throw std::out_of_range("node is not in the tree");
  std::vector<Handle> path;
  for (Handle u = v; u != kNone; u = (u == t.root() ? kNone : parent[u])) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Handle> left_path_from(const Tree& t, Handle v) {
  std::vector<Handle> path;
  for (; v != kNone; v = t.left(v)) path.push_back(v);
  return path;
}

}  // namespace

std::uint64_t splay_to_root(Tree& t, Handle v) { return splay_path(t, path_to(t, v)); }

SplayTraversal::SplayTraversal(Tree t) : tree_(std::move(t)) {
  path_ = left_path_from(tree_, tree_.root());
  next_ = path_.empty() ? kNone : path_.back();
}

std::uint32_t SplayTraversal::pending_spine_length() const {
  if (done()) return 0;
  // The first splay walks the whole left branch from the root; later ones
  // walk the left branch from the root's right child.
  return static_cast<std::uint32_t>(first_ ? path_.size() : path_.size() - 1);
}

std::uint64_t SplayTraversal::step() {
  if (done()) throw std::logic_error("splay traversal already finished");
  const Handle v = next_;
  const std::uint64_t rotations = splay_path(tree_, path_);
  first_ = false;
  const Handle r = tree_.right(v);
  if (r == kNone) {
    next_ = kNone;
    path_.clear();
  } else {
    path_ = left_path_from(tree_, r);
    path_.insert(path_.begin(), v);
    next_ = path_.back();
  }
  return rotations;
}

Handle SplayTraversal::remaining_root() const { return first_ ? tree_.root() : tree_.right(tree_.root()); }

TraversalStats traverse_splay(const Tree& t) {
  TraversalStats stats;
  SplayTraversal walk(t);
  while (!walk.done()) {
    const auto spine = walk.pending_spine_length();
    stats.spine_lengths.push_back(spine);
    stats.tsl += spine;
    stats.rotations += walk.step();
    ++stats.steps;
  }
  return stats;
}

void fetch_step_in_place(Tree& t) {
  if (t.empty()) throw std::invalid_argument("fetch on an empty tree");
  SpineView spine = t.spine();
  std::reverse(spine.begin(), spine.end());  // x_1 (leftmost) first
  const std::size_t k = spine.size();
  const Handle x1 = spine[0];
  const Handle x1_right = t.right(x1);

  if (k == 1) {
    t.set_root(x1_right);
  } else {
    // 1-based j = 2, 4, ...: x_j stays on the spine, x_{j+1} (if any) is
    // pushed off as its right child, taking X_j as left subtree.
    Handle below = x1_right;
    Handle top = kNone;
    for (std::size_t j = 2; j <= k; j += 2) {
      const Handle xj = spine[j - 1];
      if (j < k) {
        const Handle pushed = spine[j];
        t.set_left(pushed, t.right(xj));
        t.set_right(xj, pushed);
      }
      t.set_left(xj, below);
      below = xj;
      top = xj;
    }
    t.set_root(top);
  }
  t.set_left(x1, kNone);
  t.set_right(x1, kNone);
  t.discard(x1);
}

Tree fetch_step(Tree t) {
  fetch_step_in_place(t);
  return t;
}

Tree fetch(std::size_t k, Tree t) {
  if (k > t.size()) throw std::invalid_argument("cannot fetch more nodes than the tree holds");
  for (std::size_t i = 0; i < k; ++i) fetch_step_in_place(t);
  return t;
}

TraversalStats traverse_fetch(const Tree& input) {
  TraversalStats stats;
  Tree t = input;
  const Handle y = t.root();
  bool irp_found = false;
  for (std::uint64_t k = 0;; ++k) {
    bool on_spine = false;
    std::uint32_t length = 0;
    for (Handle v = t.root(); v != kNone; v = t.left(v)) {
      on_spine = on_spine || v == y;
      ++length;
    }
    if (y != kNone && t.root() == y) ++stats.rp;
    if (!irp_found && !on_spine) {
      stats.irp = k;
      irp_found = true;
    }
    if (t.empty()) break;
    stats.spine_lengths.push_back(length);
    stats.tsl += length;
    fetch_step_in_place(t);
    ++stats.steps;
  }
  return stats;
}

bool check_fetch_splay_correspondence(const Tree& t, std::size_t k) {
  if (k == 0 || k > t.size()) throw std::invalid_argument("k must be in 1..|T|");
  const Tree fetched = fetch(k, t);
  SplayTraversal walk(t);
  for (std::size_t i = 0; i < k; ++i) walk.step();
  return same_shape(fetched, fetched.root(), walk.tree(), walk.remaining_root());
}

BigInt tsl(const Tree& t) { return traverse_fetch(t).tsl; }

}  // namespace splaytrav
