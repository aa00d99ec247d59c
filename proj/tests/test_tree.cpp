#include <doctest.h>

#include "splaytrav/random_trees.hpp"
#include "splaytrav/tree.hpp"

using namespace splaytrav;

TEST_CASE("maximal trees") {
  CHECK(make_maximal(-1).empty());
  for (Height h = 0; h <= 10; ++h) {
    const Tree t = make_maximal(h);
    CHECK(t.size() == (std::size_t{1} << (h + 1)) - 1);
    CHECK(t.height() == h);
    CHECK(t.spine().size() == static_cast<std::size_t>(h + 1));
    Height got = -2;
    CHECK(is_maximal(t, t.root(), &got));
    CHECK(got == h);
  }
  CHECK_THROWS(make_maximal(kMaxExplicitHeight + 1));
}

TEST_CASE("extension and join") {
  const Tree m = make_maximal(2);
  const Tree e = extend(m, 3);
  CHECK(e.size() == 10);
  CHECK(e.spine().size() == 6);
  CHECK(e.highest_echelon().size() == 1);
  const auto order = e.inorder();
  // The new nodes are the last three in inorder.
  CHECK(order.back() == e.root());
  CHECK(!is_maximal(e, e.root()));

  const Tree j = join(make_maximal(1), make_maximal(1));
  CHECK(same_shape(j, make_maximal(2)));
  CHECK(join(Tree{}, Tree{}).size() == 1);
}

TEST_CASE("text form") {
  CHECK(format_tree(Tree{}) == ".");
  CHECK(format_tree(make_maximal(3)) == "M 3");
  CHECK(format_tree(extend(make_maximal(1), 2)) == "((M 1 .) .)");
  CHECK(format_tree(make_left_path(2)) == "(M 0 .)");
  CHECK(parse_tree("M 1").size() == 3);
  CHECK(parse_tree("M -1").empty());
  CHECK(parse_tree("  ( M 0 ( . M 0 ) ) ").size() == 4);
  CHECK(same_shape(parse_tree("((. .) (. .))"), make_maximal(1)));

  auto position_of = [](const char* text) {
    try {
      parse_tree(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position_of("(M 1") == 0);
  CHECK(position_of(". .") == 2);
  CHECK(position_of("(. . .)") == 5);
  CHECK(position_of(")") == 0);
  CHECK(position_of("x") == 0);
  CHECK(position_of("") == 0);
  CHECK(position_of("M") >= 1);
  CHECK(position_of("(. M 0)") == -1);
}

TEST_CASE("property: format and parse round trip") {
  Rng rng(20240601);
  for (int i = 0; i < 300; ++i) {
    const Tree t = random_tree_up_to(0, 80, rng);
    const std::string text = format_tree(t);
    const Tree back = parse_tree(text);
    REQUIRE(same_shape(t, back));
    CHECK(format_tree(back) == text);
  }
}

TEST_CASE("property: depth splits into left and right depth") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Tree t = random_tree_up_to(1, 60, rng);
    const auto profile = t.depth_profile();
    for (Handle v : t.inorder()) {
      CHECK(t.depth(v) == t.left_depth(v) + t.right_depth(v));
      CHECK(profile[v].left == t.left_depth(v));
      CHECK(profile[v].right == t.right_depth(v));
    }
    // A spine node's ancestors are the spine nodes above it, all right
    // ancestors.
    const auto spine = t.spine();
    for (std::size_t i = 0; i < spine.size(); ++i) {
      CHECK(t.left_depth(spine[i]) == i);
      CHECK(t.right_depth(spine[i]) == 0);
    }
  }
}

TEST_CASE("depths in M_2") {
  const Tree t = make_maximal(2);
  const Handle bottom = t.spine().back();
  CHECK(t.left_depth(bottom) == 2);
  CHECK(t.right_depth(bottom) == 0);
  const Handle last = t.highest_echelon().back();
  CHECK(t.left_depth(last) == 0);
  CHECK(t.right_depth(last) == 2);
}

TEST_CASE("random trees have the requested size") {
  Rng rng(3);
  for (std::size_t n = 0; n < 40; ++n) CHECK(random_tree(n, rng).size() == n);
}

TEST_CASE("subtree copies") {
  const Tree t = make_maximal(3);
  const Tree s = t.subtree(t.left(t.root()));
  CHECK(same_shape(s, make_maximal(2)));
  CHECK(t.subtree_inorder(t.left(t.root())).size() == 7);
  CHECK_THROWS_AS(t.left_depth(999), std::out_of_range);
}
