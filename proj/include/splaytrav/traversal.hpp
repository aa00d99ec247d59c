#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "splaytrav/dyadic.hpp"
#include "splaytrav/tree.hpp"

namespace splaytrav {

/// Record of one complete traversal.
///
/// Both traversals fill steps, spine_lengths and tsl. Only splay-to-root
/// counts rotations; only fetch-and-discard tracks rp and irp.
struct TraversalStats {
  std::uint64_t steps = 0;
  /// Spine length before each fetch (one entry per node).
  std::vector<std::uint32_t> spine_lengths;
  BigInt tsl = 0;
  std::uint64_t rotations = 0;
  /// Number of k in [0, |T|] with the original root at the root of fetch(k, T).
  std::uint64_t rp = 0;
  /// Smallest k with the original root off the spine of fetch(k, T).
  std::uint64_t irp = 0;

  /// Flat record with counts as decimal strings, for CSV/JSON emitters.
  std::map<std::string, std::string> flat() const;
};

/// Splays v to the root with zig / zig-zig / zig-zag steps and returns the
/// number of rotations. Throws std::out_of_range if v is not in t.
std::uint64_t splay_to_root(Tree& t, Handle v);

/// Splays every node to the root in inorder order.
TraversalStats traverse_splay(const Tree& t);

/// Splay-to-root traversal that can be advanced one node at a time.
/// After k steps the k-th node (inorder) is the root and the nodes not yet
/// visited form its right subtree.
class SplayTraversal {
 public:
  explicit SplayTraversal(Tree t);

  bool done() const { return next_ == kNone; }
  /// Splays the next node; returns the rotations used.
  std::uint64_t step();
  /// Nodes on the path that the next splay walks (the measured spine).
  std::uint32_t pending_spine_length() const;

  const Tree& tree() const { return tree_; }
  /// Root of the not-yet-visited part.
  Handle remaining_root() const;

 private:
  Tree tree_;
  Handle next_ = kNone;
  std::vector<Handle> path_;  // root .. next_
  bool first_ = true;
};

/// One fetch-and-discard step: the leftmost node is brought up the spine by
/// splay operations and removed. Throws std::invalid_argument on an empty
/// tree.
void fetch_step_in_place(Tree& t);
Tree fetch_step(Tree t);

/// k fetch-and-discard steps. Throws std::invalid_argument when k > |t|.
Tree fetch(std::size_t k, Tree t);

TraversalStats traverse_fetch(const Tree& t);

/// fetch(k, t) is shape-isomorphic to the right subtree of the root after k
/// steps of splay-to-root traversal.
bool check_fetch_splay_correspondence(const Tree& t, std::size_t k);

/// Convenience: tsl of a tree.
BigInt tsl(const Tree& t);

}  // namespace splaytrav
