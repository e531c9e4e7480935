#pragma once

// Brute-force oracles.  Nothing here calls into the avl, minimal, heap or
// ledger modules, so agreement with them is an independent check.

#include <cstdint>
#include <vector>

namespace treelab::oracle {

/// A binary tree shape as a preorder bitstring: 1 = node, 0 = empty slot.
/// A shape with n nodes has 2n + 1 bits; the first bit is the most
/// significant of the low 2n + 1 bits of code.
struct Shape {
  std::uint64_t code : 40;
  std::uint64_t height_plus_one : 8;  // 0 for the empty shape
  std::uint64_t avl : 1;

  int height() const { return static_cast<int>(height_plus_one) - 1; }
  bool is_avl() const { return avl != 0; }
};

inline constexpr unsigned kMaxShapeNodes = 16;

struct ShapeTable {
  /// shapes[n] lists every shape with n nodes.
  std::vector<std::vector<Shape>> shapes;
  unsigned n_max() const { return static_cast<unsigned>(shapes.size()) - 1; }
};

/// All shapes with up to n_max nodes. Throws std::invalid_argument when
/// n_max > kMaxShapeNodes (C(16) alone is 35 million shapes).
ShapeTable enumerate_shapes(unsigned n_max);

/// Leaf count of a shape with n nodes, decoded from its bitstring.
unsigned shape_leaves(const Shape& s, unsigned n);

/// Catalan numbers by the convolution recurrence.
std::vector<std::uint64_t> catalan(unsigned n_max);

inline constexpr unsigned kMaxEnumeratedHeight = 4;
inline constexpr unsigned kMaxSearchedHeight = 5;

/// Smallest n admitting an AVL shape of height h. h <= 4 is answered by
/// exhaustive enumeration; h = 5 by branch-and-bound over shapes. Larger h
/// throws std::invalid_argument.
std::uint64_t min_nodes_oracle(unsigned h);

/// Fewest leaves among minimum-size AVL shapes of height h (same reach).
std::uint64_t min_leaves_oracle(unsigned h);

struct MinShapeResult {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// Depth-first search over AVL shapes of height h built node by node,
/// pruning on the best node count found so far. Independent of enumeration.
MinShapeResult min_shape_search(unsigned h);

inline constexpr unsigned kMaxPermutationSize = 9;

struct HeapOracleResult {
  unsigned n = 0;
  std::uint64_t worst_cost = 0;      // max over all n! permutations
  std::uint64_t ascending_cost = 0;  // cost of 1..n
  std::uint64_t depth_sum = 0;       // sum of subtree heights over internal indices
};

/// Worst build-heap iteration total over every permutation of 1..n,
/// parallel over the first element. Throws for n == 0 or n > 9.
HeapOracleResult heap_worst_cost_oracle(unsigned n);
/// Single-threaded reference for heap_worst_cost_oracle.
HeapOracleResult heap_worst_cost_oracle_serial(unsigned n);

}  // namespace treelab::oracle
