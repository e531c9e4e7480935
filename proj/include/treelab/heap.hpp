#pragma once

// Binary max-heap over a 1-indexed buffer and Floyd's bottom-up build-heap,
// instrumented in loop iterations.
//
// Cost unit: one sift-down iteration = compare the current element with its
// larger child and swap if needed.  An iteration that finds the element
// already in place still counts; reaching a childless slot ends the loop
// without an extra iteration.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace treelab::heap {

using Key = std::int64_t;

class HeapBuffer {
 public:
  HeapBuffer() = default;
  /// Copies 0-indexed data; element k becomes index k + 1.
  explicit HeapBuffer(std::span<const Key> data) : keys_(data.begin(), data.end()) {}
  HeapBuffer(std::initializer_list<Key> data) : keys_(data) {}

  std::size_t size() const { return keys_.size(); }
  Key& operator[](std::size_t i) { return keys_[i - 1]; }
  const Key& operator[](std::size_t i) const { return keys_[i - 1]; }
  /// Bounds-checked 1-based access.
  const Key& at(std::size_t i) const;

  /// 0-indexed view of the keys.
  std::span<const Key> data() const { return keys_; }

 private:
  std::vector<Key> keys_;
};

struct SiftStats {
  std::size_t start_index = 0;
  std::uint64_t iterations = 0;
  std::uint64_t comparisons = 0;
};

/// Throws std::out_of_range unless 1 <= i <= n.
SiftStats sift_down(HeapBuffer& buf, std::size_t i);

/// One record per i from floor(n/2) down to 1.
std::vector<SiftStats> build_heap(HeapBuffer& buf);

std::uint64_t total_iterations(const std::vector<SiftStats>& stats);

struct HeapReport {
  bool ok = true;
  std::string first_violation;
  explicit operator bool() const { return ok; }
};

HeapReport validate_heap(const HeapBuffer& buf);

/// Height of the subtree rooted at 1-based index i in a complete tree of n.
unsigned subtree_height(std::size_t n, std::size_t i);

/// Sum over h = 0..floor(log2 n) of h * ceil(n / 2^(h+1)).
std::uint64_t aggregate_bound(std::uint64_t n);

/// counts[h] = number of indices whose subtree has height h.
std::vector<std::uint64_t> subtree_height_counts(std::size_t n);

struct AggregateSweep {
  std::uint64_t n_max = 0;
  std::uint64_t violations = 0;   // n with aggregate_bound(n) > 2n
  std::uint64_t first_violation = 0;
  double max_ratio = 0.0;         // max aggregate_bound(n) / n
  std::uint64_t n_at_max = 0;
};

/// Checks aggregate_bound(n) <= 2n for every n in 1..n_max (OpenMP).
AggregateSweep aggregate_sweep(std::uint64_t n_max);
/// Single-threaded reference for aggregate_sweep.
AggregateSweep aggregate_sweep_serial(std::uint64_t n_max);

}  // namespace treelab::heap
