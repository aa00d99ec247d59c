#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace splaytrav {

/// Index of a node in a Tree's node store. A handle is also the node's id:
/// it is assigned at creation and never reused within one tree.
using Handle = std::uint32_t;
inline constexpr Handle kNone = std::numeric_limits<Handle>::max();

/// Height of a tree; the empty tree has height -1.
using Height = int;

/// Largest height accepted when building an explicit maximal tree.
inline constexpr Height kMaxExplicitHeight = 28;

/// Left branch from the root downward; front() is the root.
using SpineView = std::vector<Handle>;

struct DepthPair {
  std::uint32_t left = 0;   // number of right ancestors
  std::uint32_t right = 0;  // number of left ancestors
};

/// A binary tree shape stored in a growable arena.
///
/// Nodes carry no payload. Nodes removed by a traversal stay in the store
/// (detached) so that handles remain stable; size() counts live nodes only.
class Tree {
 public:
  struct Node {
    Handle left = kNone;
    Handle right = kNone;
  };

  Tree() = default;

  bool empty() const { return root_ == kNone; }
  Handle root() const { return root_; }
  std::size_t size() const { return size_; }
  /// Number of handles ever allocated (live or discarded).
  std::size_t store_size() const { return nodes_.size(); }

  Handle left(Handle v) const { return nodes_[v].left; }
  Handle right(Handle v) const { return nodes_[v].right; }

  void set_left(Handle v, Handle child) { nodes_[v].left = child; }
  void set_right(Handle v, Handle child) { nodes_[v].right = child; }
  void set_root(Handle v) { root_ = v; }

  /// Appends a detached node and returns its handle. The caller links it.
  Handle add_node(Handle left = kNone, Handle right = kNone);

  /// Marks a node as removed from the tree. Links must already be cut.
  void discard(Handle v);

  /// True when v is a node currently reachable from the root.
  bool contains(Handle v) const;

  Height height() const;
  SpineView spine() const;
  std::vector<Handle> inorder() const;

  /// Handles on the rightmost branch from the root (the highest echelon).
  std::vector<Handle> highest_echelon() const;

  /// Number of right (left) ancestors of v. Throws std::out_of_range when
  /// v is not in the tree.
  std::uint32_t left_depth(Handle v) const;
  std::uint32_t right_depth(Handle v) const;
  std::uint32_t depth(Handle v) const;

  /// Left/right depth of every live node, indexed by handle. Entries for
  /// discarded handles are zero.
  std::vector<DepthPair> depth_profile() const;

  /// Subtree rooted at v, copied into a fresh compact tree.
  Tree subtree(Handle v) const;

  /// Node ids of the subtree rooted at v, in inorder.
  std::vector<Handle> subtree_inorder(Handle v) const;

 private:
  std::vector<Node> nodes_;
  Handle root_ = kNone;
  std::size_t size_ = 0;

  DepthPair depth_pair(Handle v) const;
  void check_handle(Handle v) const;
};

/// The maximal (perfect) tree of height h, with 2^{h+1}-1 nodes.
Tree make_maximal(Height h);

/// A^xB: a fresh root whose left subtree is a and right subtree is b.
/// Handles of b are renumbered past those of a.
Tree join(Tree a, Tree b);

/// A^{[k]}: applies join(., empty) k times. The k new nodes are the last
/// k nodes in inorder.
Tree extend(Tree a, std::size_t k);

/// Left path of n nodes (each node is the left child of its predecessor).
Tree make_left_path(std::size_t n);

/// Structural equality, ignoring node ids.
bool same_shape(const Tree& a, const Tree& b);
bool same_shape(const Tree& a, Handle va, const Tree& b, Handle vb);

/// True when the subtree at v is maximal; height is written to *h.
bool is_maximal(const Tree& t, Handle v, Height* h = nullptr);

// Text form: Tree := "." | "(" Tree Tree ")" | "M" <int >= -1>.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Tree parse_tree(std::string_view text);
std::string format_tree(const Tree& t);
std::string format_subtree(const Tree& t, Handle v);

}  // namespace splaytrav
