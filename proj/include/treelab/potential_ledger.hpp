#pragma once

// Heap-forest ledger for bottom-up build-heap.
//
// The buffer starts as n singleton heaps of level 1 (level = height + 1,
// empty heap = 0), so the potential Phi = sum of root levels = n.  The
// sift-down at index i merges the level-1 parent heap at i with the child
// heaps at 2i and 2i+1 into one heap of level max(child levels) + 1:
//
//   phi_after = phi_before - (1 + left + right) + (max(left, right) + 1)
//   amortized = actual_cost + phi_after - phi_before
//
// With l = max child level this gives amortized = cost + 1 - l when the
// child levels differ and cost - l when they are equal; since cost <= l the
// two cases are bounded by 1 and 0.  Summing telescopes to
// total_actual = total_amortized + phi_initial - phi_final <= 1.5 n.

#include <cstdint>
#include <string>
#include <vector>

#include "treelab/heap.hpp"
#include "treelab/inputs.hpp"

namespace treelab::ledger {

using HeapLevel = std::uint32_t;

enum class MergeCase { DifferentLevels, SameLevel };

/// "diff" or "same", as written in CSV traces.
const char* case_name(MergeCase c);

struct MergeEvent {
  std::uint64_t step = 0;
  std::uint64_t root_index = 0;
  HeapLevel left_level = 0;
  HeapLevel right_level = 0;
  MergeCase case_tag = MergeCase::DifferentLevels;
  std::uint64_t actual_cost = 0;
  std::uint64_t phi_before = 0;
  std::uint64_t phi_after = 0;
  std::int64_t amortized = 0;
};

struct PotentialTrace {
  std::uint64_t n = 0;
  std::vector<MergeEvent> events;
  std::uint64_t phi_initial = 0;
  std::uint64_t phi_final = 0;
  std::uint64_t total_actual = 0;
  std::int64_t total_amortized = 0;
};

/// levels[i] for 1 <= i <= n is floor(log2(n / i)) + 1; levels[0] is unused.
std::vector<HeapLevel> subtree_levels(std::uint64_t n);

/// Runs build-heap on buf while keeping the forest bookkeeping. An empty
/// buffer yields an empty trace with Phi = 0.
PotentialTrace ledger_run(heap::HeapBuffer& buf);

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, or a note
};

struct VerificationReport {
  std::vector<Check> checks;
  bool passed() const;
  const Check* first_failure() const;
};

/// Checks every per-event and trace-level identity; never throws on a
/// failed identity.
VerificationReport verify_trace(const PotentialTrace& trace);

struct ScanInput {
  inputs::InputKind kind = inputs::InputKind::Ascending;
  std::uint64_t seed = 0;
};

struct ScanRow {
  ScanInput input;
  std::uint64_t runs = 0;
  std::uint64_t max_actual = 0;  // total_actual at n_at_max
  std::uint64_t n_at_max = 0;    // argmax of total_actual / n, smallest n on ties
  double max_ratio = 0.0;
  std::uint64_t failures = 0;
  std::string first_failure;     // "n=..: check: detail"
};

/// ledger_run + verify_trace for every n in 1..n_max and every input, one
/// row per input in the given order. Parallel over (input, n) with OpenMP.
std::vector<ScanRow> worst_case_scan(std::uint64_t n_max, const std::vector<ScanInput>& kinds);
/// Single-threaded reference for worst_case_scan; identical output.
std::vector<ScanRow> worst_case_scan_serial(std::uint64_t n_max,
                                            const std::vector<ScanInput>& kinds);

/// Ascending, descending and random seeds 0..seeds-1.
std::vector<ScanInput> standard_inputs(std::uint64_t seeds);

}  // namespace treelab::ledger
