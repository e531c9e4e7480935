#include "treelab/fib_math.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace treelab::fib {
namespace {

constexpr auto kTable = [] {
  std::array<Count, kMaxIndex + 1> t{};
  t[0] = 1;
  t[1] = 1;
  for (unsigned i = 2; i <= kMaxIndex; ++i) t[i] = t[i - 1] + t[i - 2];
  return t;
}();

[[noreturn]] void overflow(const char* what, unsigned i) {
  throw std::overflow_error(std::string(what) + "(" + std::to_string(i) +
                            ") exceeds 64-bit range");
}

}  // namespace

Count fib(unsigned i) {
  if (i > kMaxIndex) overflow("fib", i);
  return kTable[i];
}

Count fib_prefix_sum(unsigned h) {
  if (h + 2 > kMaxIndex) overflow("fib_prefix_sum", h);
  Count sum = 0;
  for (unsigned i = 0; i <= h; ++i) {
    if (__builtin_add_overflow(sum, kTable[i], &sum)) overflow("fib_prefix_sum", h);
  }
  return sum;
}

Count min_nodes(unsigned h) {
  if (h + 2 > kMaxIndex) overflow("min_nodes", h);
  return kTable[h + 2] - 1;
}

Count min_leaves(unsigned h) { return fib(h); }

double golden_height_bound(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("golden_height_bound: n must be >= 1");
  return std::log(static_cast<double>(n) + 1.0) / std::log(std::numbers::phi);
}

}  // namespace treelab::fib
