#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "splaytrav/tree.hpp"

namespace splaytrav {

/// One checked instance. subject is "h=<h>", "r=<r>" or "case=<i>";
/// counterexample holds a tree in text form when a check fails on one.
struct CheckRecord {
  std::string check;
  std::string subject;
  bool pass = true;
  std::string details;
  std::string counterexample;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 500;
  std::size_t max_nodes = 48;
  /// Largest h for lazy-engine vs brute-force comparisons.
  Height oracle_h_max = 14;
  /// Largest h for the bound suite.
  Height bounds_h_max = 512;
  std::uint64_t beta_r_max = 12;
  unsigned jobs = 1;
};

/// Upper-segment preservation, continuation, spine compression, no repeat
/// nodes and left-depth monotonicity, `cases` random instances each.
std::vector<CheckRecord> run_lemma_suite(const SuiteOptions& options);

/// Splay rotations vs tsl - 1, fetch/splay correspondence, the lazy engine
/// vs brute force, and the table recurrences vs brute force.
std::vector<CheckRecord> run_oracle_diff_suite(const SuiteOptions& options);

/// Growth bounds on irp/rp of M_h^{[2]} and rp of M_h^{[1]}.
std::vector<CheckRecord> run_bounds_suite(const SuiteOptions& options);

/// The beta >= 2 + alpha witness for r = 1..beta_r_max.
std::vector<CheckRecord> run_beta_suite(const SuiteOptions& options);

bool all_pass(const std::vector<CheckRecord>& records);

nlohmann::json to_json(const std::vector<CheckRecord>& records);

}  // namespace splaytrav
