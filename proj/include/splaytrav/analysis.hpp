#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splaytrav/alpha.hpp"
#include "splaytrav/tree.hpp"

namespace splaytrav {

/// Subset of spine(T) closed under taking parents, i.e. a top prefix of the
/// spine. Stored as node ids.
struct UpperSegment {
  std::vector<Handle> nodes;
};

bool is_upper_segment(const Tree& t, const UpperSegment& e);

/// The top `length` nodes of the spine.
UpperSegment top_of_spine(const Tree& t, std::size_t length);

/// After each of the first n fetches, E intersected with the spine of every
/// subtree is an upper segment of that subtree. Throws std::invalid_argument
/// if E is not an upper segment of A or n > |A|.
bool check_upper_segment_preservation(const Tree& a, const UpperSegment& e, std::size_t n);

/// Tracks L_i, the nodes of E that stayed on the spine through the first i
/// fetches. Holds when |L_{i+1}| <= ceil(|L_i| / 2) at every step and at
/// most one node survives ceil(log2 |E|) fetches.
bool check_continuation(const Tree& a, const UpperSegment& e);

struct CompressSpineResult {
  bool applicable = true;  // k <= |M_h|
  bool pass = true;
  std::uint64_t k = 0;
  /// First step t with |spine(fetch(t, A))| == 1, if any within the tree.
  std::optional<std::uint64_t> single_node_step;
  /// First step t where the root of A is off the spine.
  std::optional<std::uint64_t> root_off_step;
};

/// Simulates A = M_h^{[e]} and tests that within k = 2 ceil(log2(h+1+e)) - 1
/// steps the spine shrinks to one node; for e >= 2 the root must also leave
/// the spine within k steps. Inapplicable cases pass vacuously.
CompressSpineResult check_compress_spine(Height h, std::size_t e);

/// With D the subtree at spine node u and k the inorder rank of D's
/// rightmost node, fetch(k, A) has no node on its spine that was pushed off
/// earlier and came back. Throws std::invalid_argument if u is not on the
/// spine.
bool check_no_repeat_nodes(const Tree& a, Handle u);

/// No fetch step increases the left depth of a surviving node.
bool check_left_depth_monotone(const Tree& a);

struct BetaWitnessReport {
  std::uint64_t r = 0;
  std::string candidate;           // construction that passed verification
  std::uint64_t size = 0;          // |T| = 2^r + r
  BigInt measured_tsl = 0;
  BigInt expected_tsl = 0;         // 2^{r+1} + r - 1 + tsl(M_{r-1})
  BigInt head_spine_total = 0;     // spine lengths of the first r+1 fetches
  bool residual_is_maximal = false;
  std::string residual;            // fetch(r+1, T) in tree text
  double ratio = 0;                // tsl(T) / |T|
  double two_plus_alpha = 0;       // 2 + alpha_{r-1}
};

/// A tree of 2^r + r nodes whose traversal costs 2^{r+1} + r - 1 +
/// tsl(M_{r-1}). Candidate constructions are tried in order and the first
/// one passing every check is reported; throws std::runtime_error naming r
/// when none does.
BetaWitnessReport beta_witness(std::uint64_t r);

/// Maximum failure-function value (longest proper border of any prefix) of
/// the reversed string; 0 for strings shorter than two characters.
std::size_t max_self_overlap(std::string_view digits);

/// Maximum failure-function value of the string as given.
std::size_t max_border(std::string_view s);

/// Longest proper border of the whole string.
std::size_t longest_border(std::string_view s);

struct BoundRecord {
  std::string check;
  Height h = 0;
  bool pass = true;
  std::string details;
};

/// Per-h checks of
///   irp(M_h^{[2]}) <= 2 ceil(log2(h+3))
///   rp(M_h^{[2]})  <= 15 (h+3) log2^2(4(h+1))
///   rp(M_h^{[1]})  <= 8 (h+3)^4 for h >= 3.
/// irp values are optional; when given they cover h = 0..irp.size()-1.
std::vector<BoundRecord> check_rp_growth_bounds(const RpTslTable& table,
                                                const std::vector<std::uint64_t>& irp = {});

/// ceil(log2(x)) for x >= 1.
std::uint64_t ceil_log2(std::uint64_t x);

}  // namespace splaytrav
