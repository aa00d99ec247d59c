#include "splaytrav/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "splaytrav/alpha.hpp"
#include "splaytrav/analysis.hpp"
#include "splaytrav/lazy_engine.hpp"
#include "splaytrav/suites.hpp"
#include "splaytrav/traversal.hpp"

namespace splaytrav {

namespace {

// Brute-force rp-table rows get expensive quickly; M_22 has 8M nodes.
constexpr Height kOracleTableLimit = 20;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Writes to `path`, or to `fallback` when path is empty or "-".
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path);
  write(file);
  file.flush();
  if (!file) throw IoError("write failed: " + path);
}

std::optional<std::filesystem::path> checkpoint_path(const std::string& resume) {
  if (!resume.empty()) return std::filesystem::path(resume);
  if (const char* dir = std::getenv("ALPHA_CHECKPOINT_DIR"); dir && *dir) {
    std::filesystem::create_directories(dir);
    return std::filesystem::path(dir) / "rp_m2.checkpoint";
  }
  return std::nullopt;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct AlphaArgs {
  std::uint64_t levels = 0;
  std::string output;
  bool annotated = false;
  unsigned jobs = default_jobs();
  std::string resume;
};

int cmd_alpha(const AlphaArgs& a, std::ostream& out, std::ostream& err) {
  if (a.levels <= 1) {
    err << "alpha: --levels must be > 1\n";
    return kExitUsage;
  }
  const auto top = static_cast<Height>(a.levels - 1);
  const std::vector<std::uint64_t> rp2 =
      top > 0 ? rp_m2_table(top - 1, TableOptions{a.jobs, checkpoint_path(a.resume)}) : std::vector<std::uint64_t>{};
  const CertifiedDigits digits = certified_digits(a.levels, rp2);

  // The tolerance rests on rp(M_h^[1]) <= 8 (h+3)^4; refuse to certify past a
  // violation.
  const RpTslTable table = build_table(top, rp2);
  for (const BoundRecord& b : check_rp_growth_bounds(table)) {
    if (b.check == "rp_m1" && !b.pass) {
      err << "alpha: bound violated at h=" << b.h << ": " << b.details << '\n';
      return kExitPropertyFailure;
    }
  }

  emit(a.output, out, [&](std::ostream& s) { write_digit_file(s, digits, a.annotated); });
  out << "certified=" << digits.certified_count << " N=" << a.levels << '\n';
  return kExitPass;
}

struct TableArgs {
  Height h_max = 0;
  std::string format = "text";
  std::string output;
  std::string resume;
  bool oracle_only = false;
  unsigned jobs = default_jobs();
};

int cmd_rp_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  if (a.h_max < 0) {
    err << "rp-table: --h-max must be >= 0\n";
    return kExitUsage;
  }
  std::vector<std::uint64_t> rp2;
  if (a.oracle_only) {
    if (a.h_max > kOracleTableLimit) {
      err << "rp-table: --oracle-only supports h <= " << kOracleTableLimit << '\n';
      return kExitUsage;
    }
    for (Height h = 0; h <= a.h_max; ++h) rp2.push_back(traverse_fetch(extend(make_maximal(h), 2)).rp);
  } else {
    rp2 = rp_m2_table(a.h_max, TableOptions{a.jobs, checkpoint_path(a.resume)});
  }
  const RpTslTable table = build_table(a.h_max, rp2);

  emit(a.output, out, [&](std::ostream& s) {
    if (a.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t h = 0; h < rp2.size(); ++h)
        rows.push_back({{"h", h}, {"rp2", rp2[h]}, {"rp1", table.rp1[h]}, {"tsl", to_string(table.tsl[h])}});
      s << rows.dump(2) << '\n';
      return;
    }
    const char* sep = a.format == "csv" ? "," : " ";
    s << "h" << sep << "rp2" << sep << "rp1" << sep << "tsl\n";
    for (std::size_t h = 0; h < rp2.size(); ++h)
      s << h << sep << rp2[h] << sep << table.rp1[h] << sep << to_string(table.tsl[h]) << '\n';
  });
  return kExitPass;
}

struct CheckArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t cases = 500;
  std::string output;
  Height h_max = 512;
  unsigned jobs = default_jobs();
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  SuiteOptions o;
  o.seed = a.seed;
  o.cases = a.cases;
  o.bounds_h_max = a.h_max;
  o.jobs = a.jobs;

  nlohmann::json suites = nlohmann::json::object();
  bool pass = true;
  std::size_t failures = 0;
  auto run = [&](const std::string& name, auto&& fn) {
    if (a.suite != name && a.suite != "all") return;
    const std::vector<CheckRecord> records = fn(o);
    for (const auto& r : records) {
      if (r.pass) continue;
      ++failures;
      err << name << ": " << r.check << ' ' << r.subject << " FAILED " << r.details;
      if (!r.counterexample.empty()) err << " counterexample: " << r.counterexample;
      err << '\n';
    }
    pass = pass && all_pass(records);
    suites[name] = to_json(records);
  };
  run("lemmas", run_lemma_suite);
  run("oracle-diff", run_oracle_diff_suite);
  run("bounds", run_bounds_suite);
  run("beta", run_beta_suite);

  const nlohmann::json report = {{"suite", a.suite}, {"seed", a.seed},         {"cases", a.cases},
                                 {"pass", pass},     {"failures", failures}, {"results", suites}};
  emit(a.output, out, [&](std::ostream& s) { s << report.dump(2) << '\n'; });
  return pass ? kExitPass : kExitPropertyFailure;
}

int cmd_period(const std::string& path, std::ostream& out) {
  std::istringstream in(read_input(path));
  const std::string text = read_digit_file(in);
  const std::string digits = text.find('.') == std::string::npos ? text : fraction_part(text);
  out << max_self_overlap(digits) << '\n';
  return kExitPass;
}

int cmd_tsl(const std::string& path, std::ostream& out, std::ostream& err) {
  Tree t;
  try {
    t = parse_tree(read_input(path));
  } catch (const ParseError& e) {
    err << "tsl: parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  const TraversalStats stats = traverse_fetch(t);
  // The empty traversal performs no rotations.
  const BigInt cost = t.empty() ? BigInt(0) : BigInt(stats.tsl - 1);
  out << "size " << t.size() << '\n'
      << "tsl " << to_string(stats.tsl) << '\n'
      << "cost " << to_string(cost) << '\n'
      << "rp " << stats.rp << '\n'
      << "irp " << stats.irp << '\n';
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Splay traversal simulator and certified digits of alpha", "splaytrav"};
  app.require_subcommand(1, 1);

  AlphaArgs alpha;
  auto* alpha_cmd = app.add_subcommand("alpha", "certify decimal digits of alpha at level N");
  alpha_cmd->add_option("--levels,-N", alpha.levels, "level N (> 1)")->required();
  alpha_cmd->add_option("-o,--output", alpha.output, "digit file to write (default stdout)");
  alpha_cmd->add_flag("--annotated", alpha.annotated, "prefix the file with a '# alpha' header");
  alpha_cmd->add_option("--jobs,-j", alpha.jobs, "worker threads")->check(CLI::PositiveNumber);
  alpha_cmd->add_option("--resume", alpha.resume, "rp table checkpoint file");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("rp-table", "emit h, rp(M_h^[2]), rp(M_h^[1]), tsl(M_h)");
  table_cmd->add_option("--h-max", table.h_max, "largest h")->required();
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"text", "json", "csv"}));
  table_cmd->add_option("-o,--output", table.output);
  table_cmd->add_option("--resume", table.resume, "checkpoint file");
  table_cmd->add_flag("--oracle-only", table.oracle_only, "use brute-force simulation only");
  table_cmd->add_option("--jobs,-j", table.jobs)->check(CLI::PositiveNumber);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "run property suites, JSON report");
  check_cmd->add_option("--suite", check.suite)->check(CLI::IsMember({"lemmas", "oracle-diff", "bounds", "beta", "all"}));
  check_cmd->add_option("--seed", check.seed);
  check_cmd->add_option("--cases", check.cases);
  check_cmd->add_option("--h-max", check.h_max, "largest h for the bound suite")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("-o,--output", check.output);
  check_cmd->add_option("--jobs,-j", check.jobs)->check(CLI::PositiveNumber);

  std::string period_file;
  auto* period_cmd = app.add_subcommand("period", "maximum self-overlap of a digit file");
  period_cmd->add_option("file", period_file, "digit file ('-' for stdin)")->required();

  std::string tree_file;
  auto* tsl_cmd = app.add_subcommand("tsl", "traversal statistics of a tree");
  tsl_cmd->add_option("file", tree_file, "tree text file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*alpha_cmd) return cmd_alpha(alpha, out, err);
    if (*table_cmd) return cmd_rp_table(table, out, err);
    if (*check_cmd) return cmd_check(check, out, err);
    if (*period_cmd) return cmd_period(period_file, out);
    if (*tsl_cmd) return cmd_tsl(tree_file, out, err);
  } catch (const std::exception& e) {
    err << app.get_subcommands().front()->get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace splaytrav
