#pragma once

#include <cstdint>
#include <random>

#include "splaytrav/tree.hpp"

namespace splaytrav {

using Rng = std::mt19937_64;

/// Random shape with exactly n nodes: the left subtree size is drawn
/// uniformly from 0..n-1 at every node.
Tree random_tree(std::size_t n, Rng& rng);

/// Random shape whose size is uniform in [min_nodes, max_nodes].
Tree random_tree_up_to(std::size_t min_nodes, std::size_t max_nodes, Rng& rng);

}  // namespace splaytrav
