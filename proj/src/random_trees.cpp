#include "splaytrav/random_trees.hpp"

#include <utility>
#include <vector>

namespace splaytrav {

Tree random_tree(std::size_t n, Rng& rng) {
  Tree t;
  if (n == 0) return t;
  struct Item {
    std::size_t count;
    Handle parent;
    bool as_left;
  };
  std::vector<Item> stack{{n, kNone, false}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    if (it.count == 0) continue;
    const Handle v = t.add_node();
    if (it.parent == kNone)
      t.set_root(v);
    else if (it.as_left)
      t.set_left(it.parent, v);
    else
      t.set_right(it.parent, v);
    std::uniform_int_distribution<std::size_t> split(0, it.count - 1);
    const std::size_t left = split(rng);
    stack.push_back({it.count - 1 - left, v, false});
    stack.push_back({left, v, true});
  }
  return t;
}

Tree random_tree_up_to(std::size_t min_nodes, std::size_t max_nodes, Rng& rng) {
  std::uniform_int_distribution<std::size_t> size(min_nodes, max_nodes);
  return random_tree(size(rng), rng);
}

}  // namespace splaytrav
