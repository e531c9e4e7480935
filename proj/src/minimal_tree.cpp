#include "treelab/minimal_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "treelab/fib_math.hpp"

namespace treelab::minimal {
namespace {

std::unique_ptr<AvlNode> recursive(int h) {
  if (h < 0) return nullptr;
  auto left = recursive(h - 1);
  auto right = recursive(h - 2);
  return avl::make_node(0, std::move(left), std::move(right));
}

template <class Node>
struct Fringe {
  std::vector<Node*> t1_roots;
  std::vector<Node*> t0_leaves;
};

template <class Node>
void collect(Node* n, Fringe<Node>& out) {
  if (!n) return;
  if (n->is_leaf()) {
    out.t0_leaves.push_back(n);
    return;
  }
  const bool one_child = !n->left || !n->right;
  if (one_child) {
    Node* only = n->left ? n->left.get() : n->right.get();
    if (only->is_leaf()) {
      out.t1_roots.push_back(n);
      return;
    }
  } else if (n->left->is_leaf() && n->right->is_leaf()) {
    throw std::invalid_argument("classify_fringe: node " + std::to_string(n->key) +
                                " has two leaf children (tree is not minimal)");
  }
  collect<Node>(n->left.get(), out);
  collect<Node>(n->right.get(), out);
}

void refresh_heights(AvlNode* n) {
  if (!n) return;
  refresh_heights(n->left.get());
  refresh_heights(n->right.get());
  n->height = 1 + std::max(avl::height_of(n->left.get()), avl::height_of(n->right.get()));
}

void collect_generations(const AvlNode* n, std::vector<std::uint64_t>& hist) {
  if (!n) return;
  if (!n->generation) {
    throw std::invalid_argument("generation_histogram: node " + std::to_string(n->key) +
                                " has no generation tag");
  }
  const auto g = *n->generation;
  if (hist.size() <= g) hist.resize(g + 1, 0);
  ++hist[g];
  collect_generations(n->left.get(), hist);
  collect_generations(n->right.get(), hist);
}

}  // namespace

AvlTree build_recursive(int h) {
  if (h < -1) throw std::invalid_argument("build_recursive: h must be >= -1");
  auto tree = AvlTree::adopt(recursive(h));
  avl::relabel_inorder(tree);
  return tree;
}

FringeClassification classify_fringe(const AvlTree& tree) {
  Fringe<const AvlNode> f;
  collect<const AvlNode>(tree.root(), f);
  return {std::move(f.t1_roots), std::move(f.t0_leaves)};
}

bool is_minimal(const AvlTree& tree) {
  const int h = avl::height(tree);
  if (h < 0) return tree.empty();
  if (!avl::validate_avl(tree, false)) return false;
  return avl::count_nodes(tree) == fib::min_nodes(static_cast<unsigned>(h));
}

AvlTree grow(AvlTree tree, std::uint32_t next_generation) {
  if (tree.empty()) {
    return AvlTree::adopt(avl::make_node(1, nullptr, nullptr, next_generation));
  }
  if (!is_minimal(tree)) throw std::invalid_argument("grow: input is not a minimal AVL tree");

  Fringe<AvlNode> f;
  collect<AvlNode>(tree.mutable_root(), f);
  auto fresh = [&] { return avl::make_node(0, nullptr, nullptr, next_generation); };

  for (AvlNode* leaf : f.t0_leaves) leaf->left = fresh();
  for (AvlNode* root : f.t1_roots) {
    if (root->left) {
      root->left->left = fresh();
      root->right = fresh();
    } else {
      root->right->left = fresh();
      root->left = fresh();
    }
  }
  refresh_heights(tree.mutable_root());
  tree.recount();
  avl::relabel_inorder(tree);
  return tree;
}

GrownTree grow_from_empty(unsigned h) {
  GrownTree out;
  out.tree = grow(AvlTree{}, 0);
  out.trace.generations.push_back({0, 1, 1, 1});
  for (std::uint32_t g = 1; g <= h; ++g) {
    const auto before = out.tree.size();
    out.tree = grow(std::move(out.tree), g);
    const auto after = out.tree.size();
    out.trace.generations.push_back({g, after - before, after, avl::count_leaves(out.tree)});
  }
  return out;
}

std::vector<std::uint64_t> generation_histogram(const AvlTree& tree) {
  std::vector<std::uint64_t> hist;
  collect_generations(tree.root(), hist);
  return hist;
}

}  // namespace treelab::minimal
