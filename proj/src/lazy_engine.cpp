#include "splaytrav/lazy_engine.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace splaytrav {

std::uint32_t LazyTree::add_node(LazyRef left, LazyRef right) {
  nodes_.push_back(Node{left, right});
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t LazyTree::force(LazyRef& ref) {
  if (ref.is_node()) return ref.index();
  if (ref.is_empty()) throw std::logic_error("cannot expand the empty tree");
  const Height h = ref.thunk_height();
  const auto child = LazyRef::maximal(h - 1);
  const std::uint32_t index = add_node(child, child);
  ref = LazyRef::node(index);
  return index;
}

BigInt LazyTree::size(LazyRef ref) const {
  BigInt total = 0;
  std::vector<LazyRef> stack{ref};
  while (!stack.empty()) {
    LazyRef r = stack.back();
    stack.pop_back();
    if (r.is_empty()) continue;
    if (r.is_thunk()) {
      BigInt m = 1;
      m <<= static_cast<mp_bitcnt_t>(r.thunk_height() + 1);
      total += m - 1;
      continue;
    }
    total += 1;
    stack.push_back(nodes_[r.index()].left);
    stack.push_back(nodes_[r.index()].right);
  }
  return total;
}

Tree LazyTree::materialize(LazyRef ref) const {
  Tree out;
  if (ref.is_empty()) return out;
  // Fill a fresh tree in preorder; each work item owns a link slot.
  struct Item {
    LazyRef src;
    Handle parent;
    bool as_left;
  };
  std::vector<Item> stack{{ref, kNone, false}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.src.is_empty()) continue;
    const Handle v = out.add_node();
    if (it.parent == kNone)
      out.set_root(v);
    else if (it.as_left)
      out.set_left(it.parent, v);
    else
      out.set_right(it.parent, v);
    LazyRef l = LazyRef::empty(), r = LazyRef::empty();
    if (it.src.is_thunk()) {
      l = r = LazyRef::maximal(it.src.thunk_height() - 1);
    } else {
      l = nodes_[it.src.index()].left;
      r = nodes_[it.src.index()].right;
    }
    stack.push_back({r, v, false});
    stack.push_back({l, v, true});
  }
  return out;
}

namespace {

// Engine state: the tree is C^y with y at the root.
class M2Engine {
 public:
  explicit M2Engine(Height h) {
    // M_h^{[2]} = ((M_h)^{x0})^y, so C = (M_h)^{x0}.
    left_of_y_ = LazyRef::node(tree_.add_node(LazyRef::maximal(h), LazyRef::empty()));
  }

  M2Result run(const RootStepObserver& observer) {
    M2Result result;
    bool irp_found = false;
    BigInt step = 0;
    for (;;) {
      ++result.rp;
      if (observer) observer(RootStep{tree_, left_of_y_, step});
      if (left_of_y_.is_empty()) {
        // Only y is left; the next fetch removes it.
        if (!irp_found) result.irp = result.rp;
        return result;
      }
      collect_spine();
      if (spine_.size() % 2 == 0) {
        // With y on top the full spine has odd length, so y is pushed off
        // and will next be the root of Z^y, Z = right subtree of C's root.
        if (!irp_found) {
          result.irp = result.rp;
          irp_found = true;
        }
        const LazyRef z = tree_[spine_.front()].right;
        if (observer) step += tree_.size(left_of_y_) - tree_.size(z);
        left_of_y_ = z;
      } else {
        fetch_below_y();
        if (observer) step += 1;
      }
    }
  }

 private:
  LazyTree tree_;
  LazyRef left_of_y_ = LazyRef::empty();
  std::vector<std::uint32_t> spine_;  // top (C's root) first

  void collect_spine() {
    spine_.clear();
    std::uint32_t v = tree_.force(left_of_y_);
    spine_.push_back(v);
    while (!tree_[v].left.is_empty()) {
      LazyRef link = tree_[v].left;
      const std::uint32_t child = tree_.force(link);
      tree_[v].left = link;
      spine_.push_back(child);
      v = child;
    }
  }

  // One fetch on C when its spine length is odd: y stays on top and C's
  // spine pairs up as in an ordinary fetch.
  void fetch_below_y() {
    const std::size_t k = spine_.size();
    auto x = [&](std::size_t j) { return spine_[k - j]; };  // 1-based, bottom up
    const LazyRef x1_right = tree_[x(1)].right;
    if (k == 1) {
      left_of_y_ = x1_right;
      return;
    }
    LazyRef below = x1_right;
    for (std::size_t j = 2; j <= k; j += 2) {
      const std::uint32_t xj = x(j);
      if (j < k) {
        const std::uint32_t pushed = x(j + 1);
        tree_[pushed].left = tree_[xj].right;
        tree_[xj].right = LazyRef::node(pushed);
      }
      tree_[xj].left = below;
      below = LazyRef::node(xj);
    }
    left_of_y_ = below;
  }
};

}  // namespace

M2Result evaluate_m2(Height h, const RootStepObserver& observer) {
  if (h < 0) throw std::invalid_argument("height must be >= 0");
  return M2Engine(h).run(observer);
}

std::uint64_t rp_m2(Height h) { return evaluate_m2(h).rp; }
std::uint64_t irp_m2(Height h) { return evaluate_m2(h).irp; }

std::vector<std::uint64_t> read_checkpoint(const std::filesystem::path& path) {
  std::vector<std::uint64_t> rows;
  std::ifstream in(path);
  if (!in) return rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    long long h = -1;
    unsigned long long rp = 0;
    std::string rest;
    if (!(fields >> h >> rp) || (fields >> rest) || h != static_cast<long long>(rows.size())) break;
    rows.push_back(rp);
  }
  return rows;
}

std::vector<std::uint64_t> rp_m2_table(Height h_max, const TableOptions& options) {
  if (h_max < 0) throw std::invalid_argument("h_max must be >= 0");
  const auto count = static_cast<std::size_t>(h_max) + 1;
  std::vector<std::uint64_t> table;
  std::ofstream checkpoint;
  if (options.checkpoint) {
    table = read_checkpoint(*options.checkpoint);
    // Rewrite the valid prefix so that trailing garbage never survives.
    checkpoint.open(*options.checkpoint, std::ios::trunc);
    if (!checkpoint) throw std::runtime_error("cannot write checkpoint " + options.checkpoint->string());
    for (std::size_t h = 0; h < table.size(); ++h) checkpoint << h << ' ' << table[h] << '\n';
    checkpoint.flush();
  }
  if (table.size() >= count) {
    table.resize(count);
    return table;
  }

  const unsigned jobs = std::max(1u, options.jobs);
  constexpr std::size_t kBlock = 512;
  while (table.size() < count) {
    const std::size_t begin = table.size();
    const std::size_t end = std::min(count, begin + kBlock);
    std::vector<std::uint64_t> block(end - begin);
    std::atomic<std::size_t> next{begin};
    auto worker = [&] {
      for (std::size_t h; (h = next.fetch_add(1)) < end;) block[h - begin] = rp_m2(static_cast<Height>(h));
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    }
    for (std::size_t h = begin; h < end; ++h) {
      table.push_back(block[h - begin]);
      if (checkpoint.is_open()) checkpoint << h << ' ' << block[h - begin] << '\n';
    }
    if (checkpoint.is_open()) checkpoint.flush();
  }
  return table;
}

}  // namespace splaytrav
