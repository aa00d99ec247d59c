#include "splaytrav/tree.hpp"

#include <algorithm>
#include <utility>

namespace splaytrav {

Handle Tree::add_node(Handle left, Handle right) {
  if (nodes_.size() >= kNone) throw std::length_error("tree node store exhausted");
  nodes_.push_back(Node{left, right});
  ++size_;
  return static_cast<Handle>(nodes_.size() - 1);
}

void Tree::discard(Handle v) {
  nodes_[v] = Node{};
  --size_;
}

void Tree::check_handle(Handle v) const {
  if (!contains(v)) throw std::out_of_range("node " + std::to_string(v) + " is not in the tree");
}

bool Tree::contains(Handle v) const {
  if (v == kNone || v >= nodes_.size() || root_ == kNone) return false;
  std::vector<Handle> stack{root_};
  while (!stack.empty()) {
    Handle u = stack.back();
    stack.pop_back();
    if (u == v) return true;
    if (nodes_[u].left != kNone) stack.push_back(nodes_[u].left);
    if (nodes_[u].right != kNone) stack.push_back(nodes_[u].right);
  }
  return false;
}

Height Tree::height() const {
  if (root_ == kNone) return -1;
  Height best = 0;
  std::vector<std::pair<Handle, Height>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto [u, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (nodes_[u].left != kNone) stack.emplace_back(nodes_[u].left, d + 1);
    if (nodes_[u].right != kNone) stack.emplace_back(nodes_[u].right, d + 1);
  }
  return best;
}

SpineView Tree::spine() const {
  SpineView out;
  for (Handle v = root_; v != kNone; v = nodes_[v].left) out.push_back(v);
  return out;
}

std::vector<Handle> Tree::highest_echelon() const {
  std::vector<Handle> out;
  for (Handle v = root_; v != kNone; v = nodes_[v].right) out.push_back(v);
  return out;
}

std::vector<Handle> Tree::subtree_inorder(Handle v) const {
  std::vector<Handle> out;
  std::vector<Handle> stack;
  Handle cur = v;
  while (cur != kNone || !stack.empty()) {
    while (cur != kNone) {
      stack.push_back(cur);
      cur = nodes_[cur].left;
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    cur = nodes_[cur].right;
  }
  return out;
}

std::vector<Handle> Tree::inorder() const { return subtree_inorder(root_); }

DepthPair Tree::depth_pair(Handle v) const {
  check_handle(v);
  std::vector<std::pair<Handle, DepthPair>> stack{{root_, {}}};
  while (!stack.empty()) {
    auto [u, d] = stack.back();
    stack.pop_back();
    if (u == v) return d;
    if (nodes_[u].left != kNone) stack.push_back({nodes_[u].left, {d.left + 1, d.right}});
    if (nodes_[u].right != kNone) stack.push_back({nodes_[u].right, {d.left, d.right + 1}});
  }
  throw std::out_of_range("node not reachable");
}

std::uint32_t Tree::left_depth(Handle v) const { return depth_pair(v).left; }
std::uint32_t Tree::right_depth(Handle v) const { return depth_pair(v).right; }
std::uint32_t Tree::depth(Handle v) const {
  auto d = depth_pair(v);
  return d.left + d.right;
}

std::vector<DepthPair> Tree::depth_profile() const {
  std::vector<DepthPair> out(nodes_.size());
  if (root_ == kNone) return out;
  std::vector<Handle> stack{root_};
  while (!stack.empty()) {
    Handle u = stack.back();
    stack.pop_back();
    if (Handle l = nodes_[u].left; l != kNone) {
      out[l] = {out[u].left + 1, out[u].right};
      stack.push_back(l);
    }
    if (Handle r = nodes_[u].right; r != kNone) {
      out[r] = {out[u].left, out[u].right + 1};
      stack.push_back(r);
    }
  }
  return out;
}

Tree Tree::subtree(Handle v) const {
  Tree out;
  if (v == kNone) return out;
  // Preorder copy; children are patched once allocated.
  std::vector<std::pair<Handle, Handle>> stack;  // (source, copy)
  out.root_ = out.add_node();
  stack.emplace_back(v, out.root_);
  while (!stack.empty()) {
    auto [src, dst] = stack.back();
    stack.pop_back();
    if (Handle l = nodes_[src].left; l != kNone) {
      Handle c = out.add_node();
      out.nodes_[dst].left = c;
      stack.emplace_back(l, c);
    }
    if (Handle r = nodes_[src].right; r != kNone) {
      Handle c = out.add_node();
      out.nodes_[dst].right = c;
      stack.emplace_back(r, c);
    }
  }
  return out;
}

namespace {

Handle build_maximal(Tree& t, Height h) {
  if (h < 0) return kNone;
  Handle l = build_maximal(t, h - 1);
  Handle v = t.add_node(l, kNone);
  t.set_right(v, build_maximal(t, h - 1));
  return v;
}

}  // namespace

Tree make_maximal(Height h) {
  if (h < -1) throw std::invalid_argument("height must be >= -1");
  if (h > kMaxExplicitHeight) throw std::length_error("maximal tree too large to build explicitly");
  Tree t;
  t.set_root(build_maximal(t, h));
  return t;
}

Tree join(Tree a, Tree b) {
  const auto offset = static_cast<Handle>(a.store_size());
  Tree out = std::move(a);
  for (std::size_t i = 0; i < b.store_size(); ++i) {
    auto h = static_cast<Handle>(i);
    Handle l = b.left(h), r = b.right(h);
    out.add_node(l == kNone ? kNone : l + offset, r == kNone ? kNone : r + offset);
  }
  // add_node counted every copied slot as live; correct for discarded ones.
  std::size_t dead = b.store_size() - b.size();
  Handle x = out.add_node(out.root(), b.empty() ? kNone : b.root() + offset);
  out.set_root(x);
  if (dead > 0) {
    // Discarded slots have no links, so discarding them again only fixes
    // the live count.
    std::vector<bool> live(b.store_size(), false);
    for (Handle v : b.inorder()) live[v] = true;
    for (std::size_t i = 0; i < live.size(); ++i)
      if (!live[i]) out.discard(static_cast<Handle>(i) + offset);
  }
  return out;
}

Tree extend(Tree a, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    Handle x = a.add_node(a.root(), kNone);
    a.set_root(x);
  }
  return a;
}

Tree make_left_path(std::size_t n) {
  Tree t;
  Handle below = kNone;
  for (std::size_t i = 0; i < n; ++i) below = t.add_node(below, kNone);
  t.set_root(below);
  return t;
}

bool same_shape(const Tree& a, Handle va, const Tree& b, Handle vb) {
  std::vector<std::pair<Handle, Handle>> stack{{va, vb}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if ((x == kNone) != (y == kNone)) return false;
    if (x == kNone) continue;
    stack.emplace_back(a.left(x), b.left(y));
    stack.emplace_back(a.right(x), b.right(y));
  }
  return true;
}

bool same_shape(const Tree& a, const Tree& b) {
  return a.size() == b.size() && same_shape(a, a.root(), b, b.root());
}

bool is_maximal(const Tree& t, Handle v, Height* h) {
  // Postorder height computation; -2 marks "not maximal".
  Height result = -1;
  if (v != kNone) {
    std::vector<std::pair<Handle, bool>> stack{{v, false}};
    std::vector<Height> values;
    while (!stack.empty()) {
      auto [u, expanded] = stack.back();
      stack.pop_back();
      if (u == kNone) {
        values.push_back(-1);
      } else if (!expanded) {
        stack.emplace_back(u, true);
        stack.emplace_back(t.right(u), false);
        stack.emplace_back(t.left(u), false);
      } else {
        Height r = values.back();
        values.pop_back();
        Height l = values.back();
        values.pop_back();
        values.push_back((l == -2 || l != r) ? -2 : l + 1);
      }
    }
    result = values.back();
  }
  if (h != nullptr) *h = result;
  return result != -2;
}

}  // namespace splaytrav
