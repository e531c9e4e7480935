#pragma once

// Fibonacci arithmetic for the minimal-AVL identities.
//
// Indexing convention used everywhere in treelab: F(0) = F(1) = 1, so the
// sequence reads 1, 1, 2, 3, 5, 8, ...  This is the shift that makes the
// leaf count of the minimal AVL tree of height h equal to F(h) (a height-0
// tree is a single leaf).  The common F(0) = 0 convention is NOT used.

#include <cstdint>

namespace treelab::fib {

using Count = std::uint64_t;

/// Largest index whose value fits in Count.
inline constexpr unsigned kMaxIndex = 92;

/// F(i). Throws std::overflow_error when i > kMaxIndex.
Count fib(unsigned i);

/// Sum of F(0..h), accumulated term by term with overflow checking.
/// Equals fib(h + 2) - 1.
Count fib_prefix_sum(unsigned h);

/// Node count of the minimal AVL tree of height h: F(h + 2) - 1.
Count min_nodes(unsigned h);

/// Leaf count of the minimal AVL tree of height h: F(h).
Count min_leaves(unsigned h);

/// log_phi(n + 1). Throws std::invalid_argument for n == 0.
double golden_height_bound(std::uint64_t n);

/// Relative slack used for every floating-point phi comparison.
inline constexpr double kPhiTolerance = 1e-9;

}  // namespace treelab::fib
