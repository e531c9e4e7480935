#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "treelab/avl_tree.hpp"
#include "treelab/minimal_tree.hpp"

using namespace treelab::avl;

TEST_CASE("insert performs rotations") {
  AvlTree t;
  t.insert(5);
  CHECK(height(t) == 0);
  CHECK(t.size() == 1);

  AvlTree asc;
  for (Key k : {1, 2, 3}) asc.insert(k);
  CHECK(asc.root()->key == 2);
  CHECK(height(asc) == 1);

  AvlTree seven;
  for (Key k = 1; k <= 7; ++k) seven.insert(k);
  CHECK(height(seven) == 2);
  CHECK(count_leaves(seven) == 4);
  CHECK(seven.root()->key == 4);

  // left-right and right-left double rotations
  AvlTree lr;
  for (Key k : {3, 1, 2}) lr.insert(k);
  CHECK(lr.root()->key == 2);
  AvlTree rl;
  for (Key k : {1, 3, 2}) rl.insert(k);
  CHECK(rl.root()->key == 2);
  CHECK(validate_avl(lr));
  CHECK(validate_avl(rl));
}

TEST_CASE("duplicate keys are rejected without changing the tree") {
  AvlTree t;
  for (Key k : {4, 2, 6}) t.insert(k);
  CHECK_THROWS_AS(t.insert(2), std::invalid_argument);
  CHECK(t.size() == 3);
  CHECK(count_nodes(t) == 3);
  CHECK(validate_avl(t));
}

TEST_CASE("validate_avl") {
  CHECK(validate_avl(AvlTree{}));

  // 3 -> 2 -> 1 chain: balance factor 2 at the root.
  auto chain = AvlTree::adopt(make_node(3, make_node(2, make_node(1))));
  auto r = validate_avl(chain);
  CHECK_FALSE(r);
  CHECK(r.first_violation.find("balance factor 2") != std::string::npos);

  auto bad_height = AvlTree::adopt(make_node(2, make_node(1), make_node(3)));
  bad_height.mutable_root()->height = 5;
  CHECK_FALSE(validate_avl(bad_height));

  auto bad_order = AvlTree::adopt(make_node(2, make_node(3), make_node(1)));
  CHECK_FALSE(validate_avl(bad_order));
  CHECK(validate_avl(bad_order, false));
}

TEST_CASE("height and counts") {
  AvlTree empty;
  CHECK(height(empty) == -1);
  CHECK(measured_height(empty) == -1);
  CHECK(count_nodes(empty) == 0);
  CHECK(count_leaves(empty) == 0);

  auto t3 = treelab::minimal::build_recursive(3);
  CHECK(count_nodes(t3) == 7);
  CHECK(count_leaves(t3) == 3);
  auto t4 = treelab::minimal::build_recursive(4);
  CHECK(count_nodes(t4) == 12);
  CHECK(height(t4) == 4);

  auto perfect = AvlTree::adopt(make_node(4, make_node(2, make_node(1), make_node(3)),
                                          make_node(6, make_node(5), make_node(7))));
  CHECK(count_nodes(perfect) == 7);
  CHECK(count_leaves(perfect) == 4);
}

TEST_CASE("height_bound_check") {
  AvlTree one;
  one.insert(1);
  CHECK(height_bound_check(one));
  auto t10 = treelab::minimal::build_recursive(10);
  CHECK(count_nodes(t10) == 232);
  CHECK(height_bound_check(t10));
  CHECK_THROWS_AS(height_bound_check(AvlTree{}), std::invalid_argument);
  auto chain = AvlTree::adopt(make_node(3, make_node(2, make_node(1))));
  CHECK_THROWS_AS(height_bound_check(chain), std::invalid_argument);
}

TEST_CASE("property: random insert sequences stay valid") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t len = 1 + rng() % 2000;
    AvlTree t;
    std::vector<Key> inserted;
    for (std::size_t i = 0; i < len; ++i) {
      const Key k = static_cast<Key>(rng() % 5000);
      if (t.contains(k)) {
        CHECK_THROWS_AS(t.insert(k), std::invalid_argument);
        continue;
      }
      t.insert(k);
      inserted.push_back(k);
    }
    REQUIRE(validate_avl(t));
    CHECK(count_nodes(t) == inserted.size());
    CHECK(t.size() == inserted.size());
    CHECK(height(t) == measured_height(t));
    CHECK(height_bound_check(t));
    for (Key k : inserted) CHECK(t.contains(k));
  }
}

TEST_CASE("property: 10^4 ascending and descending inserts") {
  AvlTree up;
  AvlTree down;
  for (Key k = 0; k < 10000; ++k) {
    up.insert(k);
    down.insert(10000 - k);
  }
  CHECK(validate_avl(up));
  CHECK(validate_avl(down));
  CHECK(height_bound_check(up));
  CHECK(height_bound_check(down));
}

TEST_CASE("copies are deep") {
  AvlTree a;
  for (Key k = 0; k < 50; ++k) a.insert(k);
  AvlTree b = a;
  b.insert(100);
  CHECK(a.size() == 50);
  CHECK_FALSE(a.contains(100));
  CHECK(same_shape(a.root(), AvlTree(a).root()));
}
