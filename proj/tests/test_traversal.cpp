#include <doctest.h>

#include "oracle.hpp"
#include "splaytrav/random_trees.hpp"
#include "splaytrav/traversal.hpp"

using namespace splaytrav;

namespace {

std::vector<std::uint64_t> widen(const std::vector<std::uint32_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("tsl of small maximal trees") {
  const unsigned long expected[] = {1, 4, 11, 28, 63};
  for (Height h = 0; h <= 4; ++h) CHECK(tsl(make_maximal(h)) == expected[h]);
  for (Height h = 0; h <= 10; ++h) CHECK(tsl(make_maximal(h)) == oracle::traverse(oracle::maximal_extended(h, 0)).tsl);
  CHECK(tsl(Tree{}) == 0);
}

TEST_CASE("fetch step on a spine of five") {
  // x5 .. x1 as a left path: x1 goes, x3 becomes right child of x2, x5 of
  // x4, and x2 hangs left of x4.
  const Tree t = fetch_step(make_left_path(5));
  CHECK(format_tree(t) == "((. M 0) M 0)");
  CHECK(fetch_step(make_left_path(1)).empty());
  CHECK_THROWS_AS(fetch_step(Tree{}), std::invalid_argument);
  CHECK_THROWS_AS(fetch(4, make_maximal(0)), std::invalid_argument);
}

TEST_CASE("fetch and splay traversal agree with the reference splay") {
  Rng rng(11);
  for (int i = 0; i < 400; ++i) {
    const Tree t = random_tree_up_to(0, 64, rng);
    const auto ref = oracle::traverse(oracle::from_tree(t));
    const auto fetched = traverse_fetch(t);
    const auto splayed = traverse_splay(t);
    CHECK(fetched.tsl == ref.tsl);
    CHECK(fetched.rp == ref.rp);
    CHECK(fetched.irp == ref.irp);
    CHECK(widen(fetched.spine_lengths) == ref.spine_lengths);
    CHECK(splayed.rotations == ref.rotations);
    CHECK(widen(splayed.spine_lengths) == ref.spine_lengths);
    if (!t.empty()) CHECK(mpz_class(static_cast<unsigned long>(splayed.rotations)) == fetched.tsl - 1);
  }
}

TEST_CASE("fetch(k) matches the splay right subtree for every k") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Tree t = random_tree_up_to(1, 40, rng);
    for (std::size_t k = 1; k <= t.size(); ++k) REQUIRE(check_fetch_splay_correspondence(t, k));
  }
}

TEST_CASE("SplayTraversal exposes the pending spine") {
  const Tree t = extend(make_maximal(3), 2);
  const auto ref = oracle::traverse(oracle::from_tree(t));
  SplayTraversal walk(t);
  std::size_t i = 0;
  while (!walk.done()) {
    CHECK(walk.pending_spine_length() == ref.spine_lengths[i++]);
    walk.step();
  }
  CHECK(i == t.size());
}

TEST_CASE("root persistence of extended maximal trees") {
  CHECK(traverse_fetch(extend(make_maximal(0), 2)).irp == 1);
  CHECK(traverse_fetch(extend(make_maximal(1), 2)).irp == 3);
  const std::uint64_t rp2[] = {2, 4, 2, 4, 2, 14, 2, 4, 2, 10, 2, 4};
  for (Height h = 0; h < 12; ++h) {
    const auto ref = oracle::traverse(oracle::maximal_extended(h, 2));
    CHECK(ref.rp == rp2[h]);
    CHECK(traverse_fetch(extend(make_maximal(h), 2)).rp == rp2[h]);
  }
  const std::uint64_t rp1[] = {2, 3, 6, 7, 10};
  for (Height h = 0; h < 5; ++h) CHECK(oracle::traverse(oracle::maximal_extended(h, 1)).rp == rp1[h]);
}

TEST_CASE("flat record") {
  const auto flat = traverse_fetch(make_maximal(1)).flat();
  CHECK(flat.at("tsl") == "4");
  CHECK(flat.at("steps") == "3");
}
