#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "treelab/heap.hpp"
#include "treelab/inputs.hpp"

using namespace treelab::heap;
using treelab::inputs::InputKind;

namespace {

std::vector<Key> keys(const HeapBuffer& b) { return {b.data().begin(), b.data().end()}; }

}  // namespace

TEST_CASE("sift_down hand traces") {
  HeapBuffer a{5, 3, 1};
  auto s = sift_down(a, 1);
  CHECK(s.iterations == 1);
  CHECK(s.comparisons == 2);
  CHECK(keys(a) == std::vector<Key>{5, 3, 1});

  HeapBuffer b{1, 2, 3, 4};
  s = sift_down(b, 2);
  CHECK(s.iterations == 1);
  CHECK(keys(b) == std::vector<Key>{1, 4, 3, 2});

  HeapBuffer c{1, 5, 7, 4, 2, 6, 3};
  s = sift_down(c, 1);
  CHECK(s.start_index == 1);
  CHECK(s.iterations == 2);
  CHECK(keys(c) == std::vector<Key>{7, 5, 6, 4, 2, 1, 3});

  HeapBuffer leaf{1, 2};
  CHECK(sift_down(leaf, 2).iterations == 0);

  CHECK_THROWS_AS(sift_down(c, 0), std::out_of_range);
  CHECK_THROWS_AS(sift_down(c, 8), std::out_of_range);
  CHECK_THROWS_AS(c.at(8), std::out_of_range);
}

TEST_CASE("build_heap hand traces") {
  HeapBuffer one{42};
  CHECK(build_heap(one).empty());
  CHECK(keys(one) == std::vector<Key>{42});

  HeapBuffer four{1, 2, 3, 4};
  auto stats = build_heap(four);
  REQUIRE(stats.size() == 2);
  CHECK(stats[0].start_index == 2);
  CHECK(stats[0].iterations == 1);
  CHECK(stats[1].iterations == 2);
  CHECK(total_iterations(stats) == 3);
  CHECK(keys(four) == std::vector<Key>{4, 2, 3, 1});

  HeapBuffer seven{1, 2, 3, 4, 5, 6, 7};
  stats = build_heap(seven);
  CHECK(total_iterations(stats) == 4);
  CHECK(validate_heap(seven));

  HeapBuffer empty;
  CHECK(build_heap(empty).empty());
}

TEST_CASE("validate_heap") {
  CHECK(validate_heap(HeapBuffer{}));
  CHECK(validate_heap(HeapBuffer{4, 2, 3, 1}));
  auto r = validate_heap(HeapBuffer{1, 2, 3});
  CHECK_FALSE(r);
  CHECK(r.first_violation == "keys[1]=1 < keys[2]=2");
}

TEST_CASE("aggregate_bound") {
  CHECK(aggregate_bound(1) == 0);
  CHECK(aggregate_bound(7) == 4);
  CHECK(aggregate_bound(8) == 7);
  CHECK_THROWS_AS(aggregate_bound(0), std::invalid_argument);
}

TEST_CASE("subtree heights") {
  CHECK(subtree_height(7, 1) == 2);
  CHECK(subtree_height(4, 2) == 1);
  CHECK(subtree_height(5, 3) == 0);
  CHECK(subtree_height_counts(7) == std::vector<std::uint64_t>{4, 2, 1});
  // Only one height-1 subtree at n = 5, below ceil(5/4) = 2.
  CHECK(subtree_height_counts(5) == std::vector<std::uint64_t>{3, 1, 1});
}

TEST_CASE("property: subtree counts never exceed ceil(n / 2^(h+1))") {
  for (std::size_t n = 1; n <= 2048; ++n) {
    const auto counts = subtree_height_counts(n);
    std::uint64_t total = 0;
    for (std::size_t h = 0; h < counts.size(); ++h) {
      const std::uint64_t d = std::uint64_t{1} << (h + 1);
      CHECK(counts[h] <= (n + d - 1) / d);
      total += counts[h];
    }
    CHECK(total == n);
    // brute-force recursive heights agree with the closed form
    std::vector<unsigned> h(n + 2, 0);
    for (std::size_t i = n; i >= 1; --i) {
      h[i] = 2 * i <= n ? 1 + std::max(h[2 * i], 2 * i + 1 <= n ? h[2 * i + 1] : 0u) : 0;
      REQUIRE(subtree_height(n, i) == h[i]);
    }
  }
}

TEST_CASE("property: build_heap over n = 1..2048") {
  for (auto kind : {InputKind::Ascending, InputKind::Descending, InputKind::Random}) {
    for (std::size_t n = 1; n <= 2048; ++n) {
      auto data = treelab::inputs::generate(kind, n, n);
      HeapBuffer buf(data);
      const auto stats = build_heap(buf);
      REQUIRE(validate_heap(buf));
      REQUIRE(stats.size() == n / 2);
      for (const auto& s : stats) {
        REQUIRE(s.iterations <= subtree_height(n, s.start_index));
        REQUIRE(s.comparisons <= 2 * s.iterations);
      }
      REQUIRE(2 * total_iterations(stats) <= 3 * n);
      auto after = keys(buf);
      std::sort(after.begin(), after.end());
      std::sort(data.begin(), data.end());
      REQUIRE(after == data);
    }
  }
}

TEST_CASE("aggregate_sweep matches its serial reference") {
  const auto par = aggregate_sweep(100000);
  const auto ser = aggregate_sweep_serial(100000);
  CHECK(par.violations == 0);
  CHECK(par.violations == ser.violations);
  CHECK(par.max_ratio == ser.max_ratio);
  CHECK(par.n_at_max == ser.n_at_max);
  CHECK(par.max_ratio <= 2.0);
}
