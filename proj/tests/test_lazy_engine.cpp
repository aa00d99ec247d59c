#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "splaytrav/lazy_engine.hpp"
#include "splaytrav/traversal.hpp"

using namespace splaytrav;

TEST_CASE("rp and irp of M_h^[2] for small h") {
  const std::uint64_t rp[] = {2, 4, 2, 4, 2, 14, 2, 4, 2, 10, 2, 4, 2, 12};
  const std::uint64_t irp[] = {1, 3, 1, 2, 1, 7, 1, 2, 1, 3, 1, 2, 1, 4};
  for (Height h = 0; h < 14; ++h) {
    CAPTURE(h);
    const M2Result r = evaluate_m2(h);
    CHECK(r.rp == rp[h]);
    CHECK(r.irp == irp[h]);
  }
}

TEST_CASE("lazy engine agrees with the reference splay") {
  for (Height h = 0; h <= 14; ++h) {
    CAPTURE(h);
    const auto ref = oracle::traverse(oracle::maximal_extended(h, 2));
    CHECK(rp_m2(h) == ref.rp);
    CHECK(irp_m2(h) == ref.irp);
  }
}

TEST_CASE("lazy trees") {
  LazyTree lt;
  CHECK(lt.size(LazyRef::empty()) == 0);
  CHECK(lt.size(LazyRef::maximal(4)) == 31);
  LazyRef r = LazyRef::maximal(3);
  const auto root = lt.force(r);
  CHECK(r.is_node());
  CHECK(lt[root].left == LazyRef::maximal(2));
  CHECK(lt.size(r) == 15);
  CHECK(same_shape(lt.materialize(r), make_maximal(3)));
  const auto top = lt.add_node(r, LazyRef::empty());
  CHECK(format_tree(lt.materialize(LazyRef::node(top))) == "(M 3 .)");
}

TEST_CASE("every simulated root step matches the brute-force tree") {
  for (Height h = 0; h <= 8; ++h) {
    CAPTURE(h);
    const Tree start = extend(make_maximal(h), 2);
    std::vector<std::pair<std::size_t, Tree>> seen;
    evaluate_m2(h, [&](const RootStep& s) {
      seen.emplace_back(s.step.get_ui(), extend(s.tree.materialize(s.left_of_y), 1));
    });
    REQUIRE(!seen.empty());
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (i > 0) CHECK(seen[i].first > seen[i - 1].first);
      CHECK(same_shape(seen[i].second, fetch(seen[i].first, start)));
    }
    CHECK(seen.size() == rp_m2(h));
  }
}

TEST_CASE("parallel tables and checkpoints") {
  const auto serial = rp_m2_table(300);
  CHECK(rp_m2_table(300, {4, std::nullopt}) == serial);

  const auto dir = std::filesystem::temp_directory_path() / "splaytrav_test_ckpt";
  std::filesystem::create_directories(dir);
  const auto path = dir / "rp.txt";
  std::filesystem::remove(path);
  CHECK(rp_m2_table(120, {2, path}) == std::vector<std::uint64_t>(serial.begin(), serial.begin() + 121));
  CHECK(read_checkpoint(path).size() == 121);
  CHECK(rp_m2_table(300, {2, path}) == serial);
  CHECK(read_checkpoint(path) == serial);

  {
    std::ofstream bad(path, std::ios::app);
    bad << "garbage\n";
  }
  CHECK(read_checkpoint(path) == serial);
  CHECK(rp_m2_table(10, {1, path}) == std::vector<std::uint64_t>(serial.begin(), serial.begin() + 11));
  std::filesystem::remove_all(dir);
}
