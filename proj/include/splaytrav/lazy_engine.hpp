#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "splaytrav/dyadic.hpp"
#include "splaytrav/tree.hpp"

namespace splaytrav {

/// Reference to a lazy subtree: an explicit node, or an unexpanded maximal
/// tree M_h (h = -1 is the empty tree).
class LazyRef {
 public:
  static constexpr LazyRef node(std::uint32_t index) { return LazyRef(static_cast<std::int64_t>(index)); }
  static constexpr LazyRef maximal(Height h) { return LazyRef(-static_cast<std::int64_t>(h) - 2); }
  static constexpr LazyRef empty() { return maximal(-1); }

  constexpr bool is_empty() const { return raw_ == -1; }
  constexpr bool is_node() const { return raw_ >= 0; }
  constexpr bool is_thunk() const { return raw_ < -1; }
  constexpr std::uint32_t index() const { return static_cast<std::uint32_t>(raw_); }
  constexpr Height thunk_height() const { return static_cast<Height>(-raw_ - 2); }

  friend constexpr bool operator==(LazyRef, LazyRef) = default;

 private:
  constexpr explicit LazyRef(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_;
};

/// Node store in which pristine maximal subtrees stay as height-only thunks
/// until their root has to join a spine.
class LazyTree {
 public:
  struct Node {
    LazyRef left = LazyRef::empty();
    LazyRef right = LazyRef::empty();
  };

  std::uint32_t add_node(LazyRef left, LazyRef right);

  /// Expands a thunk in place into an explicit root with two thunk children
  /// and returns the node index. ref must not be empty.
  std::uint32_t force(LazyRef& ref);

  Node& operator[](std::uint32_t i) { return nodes_[i]; }
  const Node& operator[](std::uint32_t i) const { return nodes_[i]; }
  std::size_t explicit_nodes() const { return nodes_.size(); }

  BigInt size(LazyRef ref) const;

  /// Full expansion into an explicit tree; only for small sizes.
  Tree materialize(LazyRef ref) const;

 private:
  std::vector<Node> nodes_;
};

struct M2Result {
  std::uint64_t rp = 0;
  std::uint64_t irp = 0;
};

/// State seen by an observer at every step where y is the root: the tree is
/// C^y with C = left_of_y. step is the fetch count so far; it is tracked only
/// when an observer is attached.
struct RootStep {
  const LazyTree& tree;
  LazyRef left_of_y;
  BigInt step;
};
using RootStepObserver = std::function<void(const RootStep&)>;

/// Root persistence and initial root persistence of M_h^{[2]}.
///
/// Only steps where the root y is on the spine are simulated. y is the
/// inorder-last node, so it is on the spine exactly when it is the root. If
/// a fetch pushes y off, y keeps the old right subtree Z of its left child
/// as its left subtree, and Z is untouched until every node before it has
/// been fetched; at that moment the tree is Z^y, so the engine resumes there
/// directly.
M2Result evaluate_m2(Height h, const RootStepObserver& observer = {});

std::uint64_t rp_m2(Height h);
std::uint64_t irp_m2(Height h);

struct TableOptions {
  unsigned jobs = 1;
  /// "h rp" lines; existing rows are reused and new rows appended.
  std::optional<std::filesystem::path> checkpoint;
};

/// rp(M_h^{[2]}) for h = 0..h_max.
std::vector<std::uint64_t> rp_m2_table(Height h_max, const TableOptions& options = {});

/// Longest valid prefix of a checkpoint file (rows must run 0, 1, 2, ...).
std::vector<std::uint64_t> read_checkpoint(const std::filesystem::path& path);

}  // namespace splaytrav
