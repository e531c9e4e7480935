#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "treelab/fib_math.hpp"

using namespace treelab::fib;

TEST_CASE("fib uses the F(0) = F(1) = 1 convention") {
  CHECK(fib(0) == 1);
  CHECK(fib(1) == 1);
  CHECK(fib(5) == 8);
  CHECK(fib(92) == 12200160415121876738ULL);
  CHECK_THROWS_AS(fib(93), std::overflow_error);
}

TEST_CASE("fib_prefix_sum and min_nodes") {
  CHECK(fib_prefix_sum(0) == 1);
  CHECK(fib_prefix_sum(3) == 7);
  CHECK(fib_prefix_sum(4) == 12);
  CHECK(min_nodes(0) == 1);
  CHECK(min_nodes(3) == 7);
  CHECK(min_nodes(4) == 12);
  CHECK(fib_prefix_sum(90) == fib(92) - 1);
  CHECK_THROWS_AS(fib_prefix_sum(91), std::overflow_error);
  CHECK_THROWS_AS(min_nodes(91), std::overflow_error);
}

TEST_CASE("min_leaves") {
  CHECK(min_leaves(0) == 1);
  CHECK(min_leaves(2) == 2);
  CHECK(min_leaves(4) == 5);
}

TEST_CASE("golden_height_bound") {
  // ln(n + 1) / ln(phi), evaluated independently.
  CHECK(golden_height_bound(1) == doctest::Approx(1.4404200904125564).epsilon(1e-9));
  CHECK(golden_height_bound(7) == doctest::Approx(4.321260271237668).epsilon(1e-9));
  CHECK(golden_height_bound(232) == doctest::Approx(11.327731717504092).epsilon(1e-9));
  CHECK_THROWS_AS(golden_height_bound(0), std::invalid_argument);
  double prev = 0;
  for (std::uint64_t n = 1; n < 5000; ++n) {
    const double b = golden_height_bound(n);
    REQUIRE(b >= prev);
    prev = b;
  }
}

TEST_CASE("identities over 0..80") {
  for (unsigned i = 0; i <= 80; ++i) {
    const double lower = std::pow(std::numbers::phi, static_cast<double>(i) - 2.0);
    CHECK(static_cast<double>(fib(i)) >= lower * (1.0 - kPhiTolerance));
    CHECK(fib_prefix_sum(i) == fib(i + 2) - 1);
    if (i >= 2) {
      CHECK(fib(i) == fib(i - 1) + fib(i - 2));
      CHECK(min_nodes(i) == min_nodes(i - 1) + min_nodes(i - 2) + 1);
    }
  }
}
