#pragma once

// Minimal AVL trees T_h (Fibonacci trees), built two ways:
//  * recursively: T_h = root(T_{h-1}, T_{h-2}), taller subtree on the left;
//  * incrementally: T_h = grow(T_{h-1}), which only attaches new leaves.
//
// grow() rewrites the fringe of T_{h-1}.  Every T0 leaf (a leaf not hanging
// off a T1 root) receives a new left child.  Every T1 root (a node whose only
// child is a leaf) has its leaf child receive a new left child and its empty
// slot receive a new leaf.  The old nodes become exactly the internal nodes
// of T_h, so |T_h| = |T_{h-1}| + leaves(T_h).

#include <cstdint>
#include <vector>

#include "treelab/avl_tree.hpp"

namespace treelab::minimal {

using avl::AvlNode;
using avl::AvlTree;

struct FringeClassification {
  std::vector<const AvlNode*> t1_roots;   // one child, that child a leaf
  std::vector<const AvlNode*> t0_leaves;  // leaves not under a T1 root
};

struct GrowthRecord {
  std::uint32_t step = 0;
  std::uint64_t leaves_added = 0;
  std::uint64_t nodes_total = 0;
  std::uint64_t leaves_total = 0;
};

struct GrowthTrace {
  std::vector<GrowthRecord> generations;
};

/// T_h for h >= -1 (h = -1 is the empty tree), keys 1..n in order.
AvlTree build_recursive(int h);

/// Throws std::invalid_argument when a node with two leaf children is
/// found, which cannot happen in a minimal tree.
FringeClassification classify_fringe(const AvlTree& tree);

/// T_{h-1} -> T_h. New nodes are tagged with next_generation and keys are
/// relabelled in order afterwards. Throws std::invalid_argument if the input
/// is not a minimal AVL tree.
AvlTree grow(AvlTree tree, std::uint32_t next_generation);

struct GrownTree {
  AvlTree tree;
  GrowthTrace trace;
};

/// Starts from T_0 (generation 0) and applies grow h times.
GrownTree grow_from_empty(unsigned h);

/// Bucket g counts nodes with generation g. Throws std::invalid_argument
/// on an untagged node.
std::vector<std::uint64_t> generation_histogram(const AvlTree& tree);

/// True when the tree has height h and exactly F(h + 2) - 1 nodes.
bool is_minimal(const AvlTree& tree);

}  // namespace treelab::minimal
