#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace treelab::avl {

using Key = std::int64_t;

struct AvlNode {
  Key key = 0;
  std::unique_ptr<AvlNode> left;
  std::unique_ptr<AvlNode> right;
  int height = 0;  // empty subtree = -1, leaf = 0
  // Growth step at which the node was attached as a leaf; absent for
  // insert-built trees.
  std::optional<std::uint32_t> generation;

  bool is_leaf() const { return !left && !right; }
};

inline int height_of(const AvlNode* n) { return n ? n->height : -1; }

/// Allocates a node whose cached height is derived from its children.
/// Performs no balance check, so hand-built invalid trees are possible.
std::unique_ptr<AvlNode> make_node(Key key, std::unique_ptr<AvlNode> left = nullptr,
                                   std::unique_ptr<AvlNode> right = nullptr,
                                   std::optional<std::uint32_t> generation = std::nullopt);

class AvlTree {
 public:
  AvlTree() = default;
  /// Adopts an externally built node graph; size is recounted.
  static AvlTree adopt(std::unique_ptr<AvlNode> root);

  AvlTree(AvlTree&&) noexcept = default;
  AvlTree& operator=(AvlTree&&) noexcept = default;
  AvlTree(const AvlTree& other);
  AvlTree& operator=(const AvlTree& other);

  /// Throws std::invalid_argument on a duplicate key; the tree is unchanged.
  void insert(Key key);
  bool contains(Key key) const;

  const AvlNode* root() const { return root_.get(); }
  AvlNode* mutable_root() { return root_.get(); }
  std::unique_ptr<AvlNode> release() {
    size_ = 0;
    return std::move(root_);
  }
  std::size_t size() const { return size_; }
  bool empty() const { return !root_; }

  /// Resyncs size after the node graph was edited through mutable_root().
  void recount();

 private:
  std::unique_ptr<AvlNode> root_;
  std::size_t size_ = 0;
};

struct AvlReport {
  bool ok = true;
  std::string first_violation;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// Checks balance, cached heights and strict BST key order.
AvlReport validate_avl(const AvlTree& tree, bool check_order = true);

/// Cached height of the root, -1 when empty.
int height(const AvlTree& tree);
/// Height recomputed by traversal, ignoring cached values.
int measured_height(const AvlTree& tree);

std::size_t count_nodes(const AvlTree& tree);
std::size_t count_leaves(const AvlTree& tree);
std::size_t count_internal(const AvlTree& tree);

/// height(tree) <= log_phi(n + 1) up to the shared relative tolerance.
/// Throws std::invalid_argument when the tree is empty or not a valid AVL tree.
bool height_bound_check(const AvlTree& tree);

/// Rewrites keys to 1..n in in-order position.
void relabel_inorder(AvlTree& tree);

/// Structural equality, ignoring keys and generation tags.
bool same_shape(const AvlNode* a, const AvlNode* b);

}  // namespace treelab::avl
