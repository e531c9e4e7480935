#include "treelab/heap.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace treelab::heap {

const Key& HeapBuffer::at(std::size_t i) const {
  if (i == 0 || i > keys_.size()) {
    throw std::out_of_range("heap index " + std::to_string(i) + " outside 1.." +
                            std::to_string(keys_.size()));
  }
  return (*this)[i];
}

SiftStats sift_down(HeapBuffer& buf, std::size_t i) {
  const std::size_t n = buf.size();
  if (i == 0 || i > n) {
    throw std::out_of_range("sift_down index " + std::to_string(i) + " outside 1.." +
                            std::to_string(n));
  }
  SiftStats s{i, 0, 0};
  while (2 * i <= n) {
    ++s.iterations;
    std::size_t child = 2 * i;
    if (child + 1 <= n) {
      ++s.comparisons;
      if (buf[child] < buf[child + 1]) ++child;
    }
    ++s.comparisons;
    if (!(buf[i] < buf[child])) break;
    std::swap(buf[i], buf[child]);
    i = child;
  }
  return s;
}

std::vector<SiftStats> build_heap(HeapBuffer& buf) {
  std::vector<SiftStats> stats;
  stats.reserve(buf.size() / 2);
  for (std::size_t i = buf.size() / 2; i >= 1; --i) stats.push_back(sift_down(buf, i));
  return stats;
}

std::uint64_t total_iterations(const std::vector<SiftStats>& stats) {
  std::uint64_t t = 0;
  for (const auto& s : stats) t += s.iterations;
  return t;
}

HeapReport validate_heap(const HeapBuffer& buf) {
  for (std::size_t j = 2; j <= buf.size(); ++j) {
    if (buf[j / 2] < buf[j]) {
      return {false, "keys[" + std::to_string(j / 2) + "]=" + std::to_string(buf[j / 2]) +
                         " < keys[" + std::to_string(j) + "]=" + std::to_string(buf[j])};
    }
  }
  return {};
}

unsigned subtree_height(std::size_t n, std::size_t i) {
  // Largest k with i * 2^k <= n, i.e. floor(log2(n / i)).
  unsigned k = 0;
  while ((i << (k + 1)) <= n) ++k;
  return k;
}

std::uint64_t aggregate_bound(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("aggregate_bound: n must be >= 1");
  const unsigned top = std::bit_width(n) - 1;
  std::uint64_t sum = 0;
  for (unsigned h = 0; h <= top; ++h) {
    const std::uint64_t d = std::uint64_t{1} << (h + 1);
    sum += h * ((n + d - 1) / d);
  }
  return sum;
}

std::vector<std::uint64_t> subtree_height_counts(std::size_t n) {
  std::vector<std::uint64_t> counts;
  for (std::size_t i = 1; i <= n; ++i) {
    const unsigned h = subtree_height(n, i);
    if (counts.size() <= h) counts.resize(h + 1, 0);
    ++counts[h];
  }
  return counts;
}

namespace {

void fold(AggregateSweep& acc, std::uint64_t n) {
  const std::uint64_t a = aggregate_bound(n);
  if (a > 2 * n) {
    if (acc.violations++ == 0 || n < acc.first_violation) acc.first_violation = n;
  }
  const double r = static_cast<double>(a) / static_cast<double>(n);
  if (r > acc.max_ratio || (r == acc.max_ratio && n < acc.n_at_max)) {
    acc.max_ratio = r;
    acc.n_at_max = n;
  }
}

void merge(AggregateSweep& into, const AggregateSweep& part) {
  if (part.violations) {
    if (!into.violations || part.first_violation < into.first_violation) {
      into.first_violation = part.first_violation;
    }
    into.violations += part.violations;
  }
  if (part.n_at_max &&
      (part.max_ratio > into.max_ratio ||
       (part.max_ratio == into.max_ratio && part.n_at_max < into.n_at_max) || !into.n_at_max)) {
    into.max_ratio = part.max_ratio;
    into.n_at_max = part.n_at_max;
  }
}

}  // namespace

AggregateSweep aggregate_sweep_serial(std::uint64_t n_max) {
  AggregateSweep acc;
  acc.n_max = n_max;
  for (std::uint64_t n = 1; n <= n_max; ++n) fold(acc, n);
  return acc;
}

AggregateSweep aggregate_sweep(std::uint64_t n_max) {
  AggregateSweep result;
  result.n_max = n_max;
#pragma omp parallel
  {
    AggregateSweep local;
#pragma omp for schedule(static) nowait
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(n_max); ++n) {
      fold(local, static_cast<std::uint64_t>(n));
    }
#pragma omp critical
    merge(result, local);
  }
  return result;
}

}  // namespace treelab::heap
