#include "splaytrav/suites.hpp"

#include <algorithm>
#include <sstream>

#include "splaytrav/alpha.hpp"
#include "splaytrav/analysis.hpp"
#include "splaytrav/lazy_engine.hpp"
#include "splaytrav/random_trees.hpp"
#include "splaytrav/traversal.hpp"

namespace splaytrav {

namespace {

std::string case_id(std::size_t i) { return "case=" + std::to_string(i); }

// Independent stream per check so adding one check does not shift another.
Rng stream(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{seed, salt};
  return Rng(seq);
}

CheckRecord record(std::string check, std::string subject, bool pass, std::string details = {},
                   std::string counterexample = {}) {
  return {std::move(check), std::move(subject), pass, std::move(details), pass ? std::string() : std::move(counterexample)};
}

}  // namespace

std::vector<CheckRecord> run_lemma_suite(const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  const std::size_t max_nodes = std::max<std::size_t>(1, o.max_nodes);

  {
    Rng rng = stream(o.seed, 1);
    for (std::size_t i = 0; i < o.cases; ++i) {
      const Tree a = random_tree_up_to(1, max_nodes, rng);
      const std::size_t spine = a.spine().size();
      const UpperSegment e = top_of_spine(a, std::uniform_int_distribution<std::size_t>(0, spine)(rng));
      const bool ok = check_upper_segment_preservation(a, e, a.size());
      out.push_back(record("upper_segment_preservation", case_id(i), ok, "|E|=" + std::to_string(e.nodes.size()),
                           format_tree(a)));
    }
  }
  {
    Rng rng = stream(o.seed, 2);
    for (std::size_t i = 0; i < o.cases; ++i) {
      const Tree a = random_tree_up_to(1, max_nodes, rng);
      const std::size_t spine = a.spine().size();
      const UpperSegment e = top_of_spine(a, std::uniform_int_distribution<std::size_t>(1, spine)(rng));
      const bool ok = check_continuation(a, e);
      out.push_back(record("continuation", case_id(i), ok, "|E|=" + std::to_string(e.nodes.size()), format_tree(a)));
    }
  }
  {
    Rng rng = stream(o.seed, 3);
    std::uniform_int_distribution<int> pick_h(0, 10);
    std::uniform_int_distribution<std::size_t> pick_e(1, 4);
    for (std::size_t i = 0; i < o.cases; ++i) {
      const Height h = pick_h(rng);
      const std::size_t e = pick_e(rng);
      const CompressSpineResult r = check_compress_spine(h, e);
      std::ostringstream details;
      details << "h=" << h << " e=" << e << " k=" << r.k;
      if (!r.applicable) details << " (k > |M_h|, vacuous)";
      if (r.single_node_step) details << " single_spine_at=" << *r.single_node_step;
      if (r.root_off_step) details << " root_off_at=" << *r.root_off_step;
      out.push_back(record("compress_spine", case_id(i), r.pass, details.str(),
                           format_tree(extend(make_maximal(h), e))));
    }
  }
  {
    Rng rng = stream(o.seed, 4);
    for (std::size_t i = 0; i < o.cases; ++i) {
      const Tree a = random_tree_up_to(1, max_nodes, rng);
      const SpineView spine = a.spine();
      const Handle u = spine[std::uniform_int_distribution<std::size_t>(0, spine.size() - 1)(rng)];
      const bool ok = check_no_repeat_nodes(a, u);
      out.push_back(record("no_repeat_nodes", case_id(i), ok, "u=" + std::to_string(u), format_tree(a)));
    }
  }
  {
    Rng rng = stream(o.seed, 5);
    for (std::size_t i = 0; i < o.cases; ++i) {
      const Tree a = random_tree_up_to(1, max_nodes, rng);
      const bool ok = check_left_depth_monotone(a);
      out.push_back(record("left_depth_monotone", case_id(i), ok, "|T|=" + std::to_string(a.size()), format_tree(a)));
    }
  }
  return out;
}

std::vector<CheckRecord> run_oracle_diff_suite(const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  {
    Rng rng = stream(o.seed, 11);
    for (std::size_t i = 0; i < o.cases; ++i) {
      const Tree t = random_tree_up_to(1, 64, rng);
      const auto splay = traverse_splay(t);
      const auto fetched = traverse_fetch(t);
      const bool ok = BigInt(static_cast<unsigned long>(splay.rotations)) == fetched.tsl - 1;
      out.push_back(record("cost_equals_tsl_minus_1", case_id(i), ok,
                           "rotations=" + std::to_string(splay.rotations) + " tsl=" + to_string(fetched.tsl),
                           format_tree(t)));
    }
  }
  {
    Rng rng = stream(o.seed, 12);
    for (std::size_t i = 0; i < o.cases; ++i) {
      const Tree t = random_tree_up_to(1, std::max<std::size_t>(1, o.max_nodes), rng);
      bool ok = true;
      std::size_t bad_k = 0;
      for (std::size_t k = 1; k <= t.size() && ok; ++k) {
        ok = check_fetch_splay_correspondence(t, k);
        if (!ok) bad_k = k;
      }
      out.push_back(record("fetch_splay_correspondence", case_id(i), ok,
                           ok ? "all k" : "fails at k=" + std::to_string(bad_k), format_tree(t)));
    }
  }
  for (Height h = 0; h <= o.oracle_h_max; ++h) {
    const M2Result lazy = evaluate_m2(h);
    const TraversalStats brute = traverse_fetch(extend(make_maximal(h), 2));
    const bool ok = lazy.rp == brute.rp && lazy.irp == brute.irp;
    out.push_back(record("lazy_engine_vs_oracle", "h=" + std::to_string(h), ok,
                         "lazy rp=" + std::to_string(lazy.rp) + " irp=" + std::to_string(lazy.irp) +
                             "; oracle rp=" + std::to_string(brute.rp) + " irp=" + std::to_string(brute.irp)));
  }
  {
    const Height top = std::min<Height>(12, o.oracle_h_max);
    const RpTslTable table = build_table(top, [](Height h) { return rp_m2(h); });
    for (Height h = 0; h <= top; ++h) {
      const BigInt tsl_brute = traverse_fetch(make_maximal(h)).tsl;
      const std::uint64_t rp1_brute = traverse_fetch(extend(make_maximal(h), 1)).rp;
      const auto i = static_cast<std::size_t>(h);
      const bool ok = table.tsl[i] == tsl_brute && table.rp1[i] == rp1_brute;
      out.push_back(record("recurrences_vs_oracle", "h=" + std::to_string(h), ok,
                           "tsl=" + to_string(table.tsl[i]) + "/" + to_string(tsl_brute) +
                               " rp1=" + std::to_string(table.rp1[i]) + "/" + std::to_string(rp1_brute)));
    }
  }
  return out;
}

std::vector<CheckRecord> run_bounds_suite(const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  const std::vector<std::uint64_t> rp2 = rp_m2_table(o.bounds_h_max, TableOptions{o.jobs, std::nullopt});
  std::vector<std::uint64_t> irp;
  irp.reserve(rp2.size());
  for (Height h = 0; h <= o.bounds_h_max; ++h) irp.push_back(irp_m2(h));
  const RpTslTable table = build_table(o.bounds_h_max + 1, rp2);
  for (const BoundRecord& b : check_rp_growth_bounds(table, irp))
    out.push_back(record(b.check + "_bound", "h=" + std::to_string(b.h), b.pass, b.details));
  return out;
}

std::vector<CheckRecord> run_beta_suite(const SuiteOptions& o) {
  std::vector<CheckRecord> out;
  for (std::uint64_t r = 1; r <= o.beta_r_max; ++r) {
    try {
      const BetaWitnessReport w = beta_witness(r);
      std::ostringstream details;
      details << w.candidate << " |T|=" << w.size << " tsl=" << to_string(w.measured_tsl)
              << " expected=" << to_string(w.expected_tsl) << " ratio=" << w.ratio
              << " 2+alpha_{r-1}=" << w.two_plus_alpha;
      out.push_back(record("beta_witness", "r=" + std::to_string(r), true, details.str()));
    } catch (const std::exception& e) {
      out.push_back(record("beta_witness", "r=" + std::to_string(r), false, e.what()));
    }
  }
  return out;
}

bool all_pass(const std::vector<CheckRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

nlohmann::json to_json(const std::vector<CheckRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json item = {{"check", r.check}, {"case", r.subject}, {"pass", r.pass}, {"details", r.details}};
    if (!r.counterexample.empty()) item["counterexample"] = r.counterexample;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace splaytrav
