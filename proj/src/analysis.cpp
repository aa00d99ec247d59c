#include "splaytrav/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "splaytrav/traversal.hpp"

namespace splaytrav {

std::uint64_t ceil_log2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("log2 of zero");
  return x == 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(x - 1));
}

bool is_upper_segment(const Tree& t, const UpperSegment& e) {
  const std::unordered_set<Handle> members(e.nodes.begin(), e.nodes.end());
  const SpineView spine = t.spine();
  if (members.size() > spine.size()) return false;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!members.contains(spine[i])) return false;
  return true;
}

UpperSegment top_of_spine(const Tree& t, std::size_t length) {
  const SpineView spine = t.spine();
  if (length > spine.size()) throw std::invalid_argument("segment longer than the spine");
  return UpperSegment{{spine.begin(), spine.begin() + static_cast<std::ptrdiff_t>(length)}};
}

namespace {

// For every node v, E restricted to the left branch from v is a prefix of
// that branch.
bool every_subtree_has_upper_segment(const Tree& t, const std::vector<bool>& in_e) {
  for (Handle v : t.inorder()) {
    bool left_segment = false;
    for (Handle u = v; u != kNone; u = t.left(u)) {
      if (!in_e[u])
        left_segment = true;
      else if (left_segment)
        return false;
    }
  }
  return true;
}

std::vector<bool> on_spine_flags(const Tree& t) {
  std::vector<bool> flags(t.store_size(), false);
  for (Handle v : t.spine()) flags[v] = true;
  return flags;
}

}  // namespace

bool check_upper_segment_preservation(const Tree& a, const UpperSegment& e, std::size_t n) {
  if (!is_upper_segment(a, e)) throw std::invalid_argument("E is not an upper segment of A");
  if (n > a.size()) throw std::invalid_argument("n exceeds |A|");
  std::vector<bool> in_e(a.store_size(), false);
  for (Handle v : e.nodes) in_e[v] = true;
  Tree t = a;
  for (std::size_t step = 0;; ++step) {
    if (!every_subtree_has_upper_segment(t, in_e)) return false;
    if (step == n) return true;
    fetch_step_in_place(t);
  }
}

bool check_continuation(const Tree& a, const UpperSegment& e) {
  if (e.nodes.empty() || !is_upper_segment(a, e)) throw std::invalid_argument("E must be a nonempty upper segment of A");
  std::unordered_set<Handle> survivors(e.nodes.begin(), e.nodes.end());
  const std::uint64_t steps = ceil_log2(survivors.size());
  Tree t = a;
  for (std::uint64_t i = 0; i < steps; ++i) {
    fetch_step_in_place(t);
    const auto flags = on_spine_flags(t);
    std::unordered_set<Handle> next;
    for (Handle v : survivors)
      if (flags[v]) next.insert(v);
    if (next.size() > (survivors.size() + 1) / 2) return false;
    survivors = std::move(next);
  }
  return survivors.size() <= 1;
}

CompressSpineResult check_compress_spine(Height h, std::size_t e) {
  if (h < 0) throw std::invalid_argument("height must be >= 0");
  CompressSpineResult result;
  result.k = 2 * ceil_log2(static_cast<std::uint64_t>(h) + 1 + e) - 1;
  const std::uint64_t maximal_size = (std::uint64_t{1} << (h + 1)) - 1;
  if (result.k > maximal_size) {
    result.applicable = false;
    return result;
  }
  Tree t = extend(make_maximal(h), e);
  const Handle root = t.root();
  for (std::uint64_t step = 0; !t.empty(); ++step) {
    const SpineView spine = t.spine();
    if (!result.single_node_step && spine.size() == 1) result.single_node_step = step;
    if (!result.root_off_step && std::find(spine.begin(), spine.end(), root) == spine.end())
      result.root_off_step = step;
    if (result.single_node_step && result.root_off_step) break;
    fetch_step_in_place(t);
  }
  const bool compressed = result.single_node_step && *result.single_node_step <= result.k;
  const bool root_slips = e < 2 || (result.root_off_step && *result.root_off_step <= result.k);
  result.pass = compressed && root_slips;
  return result;
}

bool check_no_repeat_nodes(const Tree& a, Handle u) {
  const SpineView spine = a.spine();
  if (std::find(spine.begin(), spine.end(), u) == spine.end())
    throw std::invalid_argument("u is not on the spine");
  Handle rightmost = u;
  while (a.right(rightmost) != kNone) rightmost = a.right(rightmost);
  const std::vector<Handle> order = a.inorder();
  const auto rank = static_cast<std::size_t>(std::find(order.begin(), order.end(), rightmost) - order.begin()) + 1;

  Tree t = a;
  std::vector<bool> pushed(t.store_size(), false);
  std::vector<bool> was_on_spine = on_spine_flags(t);
  for (std::size_t step = 0; step < rank; ++step) {
    const Handle fetched = t.spine().back();
    fetch_step_in_place(t);
    const auto now = on_spine_flags(t);
    for (std::size_t v = 0; v < now.size(); ++v)
      if (was_on_spine[v] && !now[v] && v != fetched) pushed[v] = true;
    was_on_spine = now;
  }
  for (Handle v : t.spine())
    if (pushed[v]) return false;
  return true;
}

bool check_left_depth_monotone(const Tree& a) {
  Tree t = a;
  while (!t.empty()) {
    const auto before = t.depth_profile();
    fetch_step_in_place(t);
    const auto after = t.depth_profile();
    for (Handle v : t.inorder())
      if (after[v].left > before[v].left) return false;
  }
  return true;
}

namespace {

struct Candidate {
  const char* name;
  Tree tree;
};

// Left path of 2^r + 1 nodes; the leftmost node heads a right branch of r
// nodes (itself included).
Tree witness_leftmost_branch(std::uint64_t r) {
  Tree t = make_left_path((std::size_t{1} << r) + 1);
  Handle tail = t.spine().back();
  for (std::uint64_t i = 1; i < r; ++i) {
    Handle v = t.add_node();
    t.set_right(tail, v);
    tail = v;
  }
  return t;
}

// Same spine; the root heads the rightmost branch instead.
Tree witness_root_branch(std::uint64_t r) {
  Tree t = make_left_path((std::size_t{1} << r) + 1);
  Handle tail = t.root();
  for (std::uint64_t i = 1; i < r; ++i) {
    Handle v = t.add_node();
    t.set_right(tail, v);
    tail = v;
  }
  return t;
}

}  // namespace

BetaWitnessReport beta_witness(std::uint64_t r) {
  if (r < 1 || r > 20) throw std::invalid_argument("beta witness needs 1 <= r <= 20");
  const Tree residual_model = make_maximal(static_cast<Height>(r) - 1);
  const BigInt residual_tsl = traverse_fetch(residual_model).tsl;
  const BigInt head_total = (BigInt(1) << static_cast<mp_bitcnt_t>(r + 1)) + r - 1;
  const std::uint64_t size = (std::uint64_t{1} << r) + r;

  std::vector<Candidate> candidates;
  candidates.push_back({"left-path+leftmost-right-branch", witness_leftmost_branch(r)});
  candidates.push_back({"left-path+root-right-branch", witness_root_branch(r)});

  for (auto& c : candidates) {
    if (c.tree.size() != size) continue;
    const TraversalStats stats = traverse_fetch(c.tree);
    BigInt head = 0;
    for (std::uint64_t i = 0; i <= r && i < stats.spine_lengths.size(); ++i) head += stats.spine_lengths[i];
    const Tree residual = fetch(r + 1, c.tree);
    Height residual_height = -2;
    const bool maximal = is_maximal(residual, residual.root(), &residual_height) &&
                         residual_height == static_cast<Height>(r) - 1;
    if (head != head_total || !maximal || stats.tsl != head_total + residual_tsl) continue;

    BetaWitnessReport report;
    report.r = r;
    report.candidate = c.name;
    report.size = size;
    report.measured_tsl = stats.tsl;
    report.expected_tsl = head_total + residual_tsl;
    report.head_spine_total = head;
    report.residual_is_maximal = true;
    report.residual = format_tree(residual);
    report.ratio = stats.tsl.get_d() / static_cast<double>(size);
    report.two_plus_alpha = 2.0 + residual_tsl.get_d() / std::ldexp(1.0, static_cast<int>(r));
    return report;
  }
  throw std::runtime_error("no beta witness candidate verified for r=" + std::to_string(r));
}

namespace {

std::vector<std::size_t> failure_function(std::string_view s) {
  std::vector<std::size_t> fail(s.size(), 0);
  for (std::size_t i = 1, k = 0; i < s.size(); ++i) {
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

}  // namespace

std::size_t max_border(std::string_view s) {
  const auto fail = failure_function(s);
  return fail.empty() ? 0 : *std::max_element(fail.begin(), fail.end());
}

std::size_t longest_border(std::string_view s) {
  const auto fail = failure_function(s);
  return fail.empty() ? 0 : fail.back();
}

std::size_t max_self_overlap(std::string_view digits) {
  const std::string reversed(digits.rbegin(), digits.rend());
  return max_border(reversed);
}

std::vector<BoundRecord> check_rp_growth_bounds(const RpTslTable& table, const std::vector<std::uint64_t>& irp) {
  std::vector<BoundRecord> out;
  for (std::size_t h = 0; h < irp.size(); ++h) {
    const std::uint64_t bound = 2 * ceil_log2(h + 3);
    out.push_back({"irp_m2", static_cast<Height>(h), irp[h] <= bound,
                   "irp=" + std::to_string(irp[h]) + " bound=" + std::to_string(bound)});
  }
  for (std::size_t h = 0; h < table.rp2.size(); ++h) {
    const long double lg = std::log2(4.0L * static_cast<long double>(h + 1));
    const long double bound = 15.0L * static_cast<long double>(h + 3) * lg * lg;
    out.push_back({"rp_m2", static_cast<Height>(h), static_cast<long double>(table.rp2[h]) <= bound,
                   "rp2=" + std::to_string(table.rp2[h]) + " bound=" + std::to_string(static_cast<double>(bound))});
  }
  for (std::size_t h = 3; h < table.rp1.size(); ++h) {
    const BigInt base = static_cast<unsigned long>(h + 3);
    const BigInt bound = 8 * base * base * base * base;
    out.push_back({"rp_m1", static_cast<Height>(h), BigInt(static_cast<unsigned long>(table.rp1[h])) <= bound,
                   "rp1=" + std::to_string(table.rp1[h]) + " bound=" + to_string(bound)});
  }
  return out;
}

}  // namespace splaytrav
