#include "treelab/avl_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "treelab/fib_math.hpp"

namespace treelab::avl {
namespace {

using Ptr = std::unique_ptr<AvlNode>;

void update(AvlNode& n) {
  n.height = 1 + std::max(height_of(n.left.get()), height_of(n.right.get()));
}

int balance(const AvlNode& n) {
  return height_of(n.left.get()) - height_of(n.right.get());
}

Ptr rotate_right(Ptr y) {
  Ptr x = std::move(y->left);
  y->left = std::move(x->right);
  update(*y);
  x->right = std::move(y);
  update(*x);
  return x;
}

Ptr rotate_left(Ptr x) {
  Ptr y = std::move(x->right);
  x->right = std::move(y->left);
  update(*x);
  y->left = std::move(x);
  update(*y);
  return y;
}

Ptr rebalance(Ptr n) {
  update(*n);
  const int b = balance(*n);
  if (b > 1) {
    if (balance(*n->left) < 0) n->left = rotate_left(std::move(n->left));
    return rotate_right(std::move(n));
  }
  if (b < -1) {
    if (balance(*n->right) > 0) n->right = rotate_right(std::move(n->right));
    return rotate_left(std::move(n));
  }
  return n;
}

Ptr insert_at(Ptr n, Key key) {
  if (!n) return make_node(key);
  if (key < n->key) {
    n->left = insert_at(std::move(n->left), key);
  } else if (n->key < key) {
    n->right = insert_at(std::move(n->right), key);
  } else {
    throw std::invalid_argument("duplicate key " + std::to_string(key));
  }
  return rebalance(std::move(n));
}

Ptr clone(const AvlNode* n) {
  if (!n) return nullptr;
  auto c = std::make_unique<AvlNode>();
  c->key = n->key;
  c->height = n->height;
  c->generation = n->generation;
  c->left = clone(n->left.get());
  c->right = clone(n->right.get());
  return c;
}

std::size_t count(const AvlNode* n) {
  return n ? 1 + count(n->left.get()) + count(n->right.get()) : 0;
}

std::size_t leaves(const AvlNode* n) {
  if (!n) return 0;
  if (n->is_leaf()) return 1;
  return leaves(n->left.get()) + leaves(n->right.get());
}

int measure(const AvlNode* n) {
  return n ? 1 + std::max(measure(n->left.get()), measure(n->right.get())) : -1;
}

struct Checker {
  bool check_order;
  AvlReport report;
  const Key* prev = nullptr;

  // Returns the true height of the subtree.
  int visit(const AvlNode* n) {
    if (!n || !report.ok) return -1;
    const int hl = visit(n->left.get());
    if (check_order && report.ok) {
      if (prev && !(*prev < n->key)) {
        fail(n, "key order broken after key " + std::to_string(*prev));
      }
      prev = &n->key;
    }
    const int hr = visit(n->right.get());
    if (!report.ok) return -1;
    const int h = 1 + std::max(hl, hr);
    if (n->height != h) {
      fail(n, "cached height " + std::to_string(n->height) + " != " + std::to_string(h));
    } else if (hl - hr > 1 || hr - hl > 1) {
      fail(n, "balance factor " + std::to_string(hl - hr));
    }
    return h;
  }

  void fail(const AvlNode* n, const std::string& why) {
    report.ok = false;
    report.first_violation = "node " + std::to_string(n->key) + ": " + why;
  }
};

void relabel(AvlNode* n, Key& next) {
  if (!n) return;
  relabel(n->left.get(), next);
  n->key = next++;
  relabel(n->right.get(), next);
}

}  // namespace

std::unique_ptr<AvlNode> make_node(Key key, std::unique_ptr<AvlNode> left,
                                   std::unique_ptr<AvlNode> right,
                                   std::optional<std::uint32_t> generation) {
  auto n = std::make_unique<AvlNode>();
  n->key = key;
  n->left = std::move(left);
  n->right = std::move(right);
  n->generation = generation;
  update(*n);
  return n;
}

AvlTree AvlTree::adopt(std::unique_ptr<AvlNode> root) {
  AvlTree t;
  t.root_ = std::move(root);
  t.recount();
  return t;
}

AvlTree::AvlTree(const AvlTree& other) : root_(clone(other.root_.get())), size_(other.size_) {}

AvlTree& AvlTree::operator=(const AvlTree& other) {
  if (this != &other) {
    root_ = clone(other.root_.get());
    size_ = other.size_;
  }
  return *this;
}

void AvlTree::insert(Key key) {
  // insert_at unwinds through unique_ptr moves, so a throw mid-descent would
  // orphan the path; check first.
  if (contains(key)) throw std::invalid_argument("duplicate key " + std::to_string(key));
  root_ = insert_at(std::move(root_), key);
  ++size_;
}

bool AvlTree::contains(Key key) const {
  const AvlNode* n = root_.get();
  while (n) {
    if (key < n->key) {
      n = n->left.get();
    } else if (n->key < key) {
      n = n->right.get();
    } else {
      return true;
    }
  }
  return false;
}

void AvlTree::recount() { size_ = count(root_.get()); }

AvlReport validate_avl(const AvlTree& tree, bool check_order) {
  Checker c{check_order, {}};
  c.visit(tree.root());
  return c.report;
}

int height(const AvlTree& tree) { return height_of(tree.root()); }
int measured_height(const AvlTree& tree) { return measure(tree.root()); }

std::size_t count_nodes(const AvlTree& tree) { return count(tree.root()); }
std::size_t count_leaves(const AvlTree& tree) { return leaves(tree.root()); }
std::size_t count_internal(const AvlTree& tree) {
  return count_nodes(tree) - count_leaves(tree);
}

bool height_bound_check(const AvlTree& tree) {
  if (tree.empty()) throw std::invalid_argument("height_bound_check: empty tree");
  if (auto r = validate_avl(tree); !r) {
    throw std::invalid_argument("height_bound_check: not an AVL tree (" + r.first_violation + ")");
  }
  const double bound = fib::golden_height_bound(count_nodes(tree));
  return static_cast<double>(height(tree)) <= bound * (1.0 + fib::kPhiTolerance);
}

void relabel_inorder(AvlTree& tree) {
  Key next = 1;
  relabel(tree.mutable_root(), next);
}

bool same_shape(const AvlNode* a, const AvlNode* b) {
  if (!a || !b) return a == b;
  return same_shape(a->left.get(), b->left.get()) && same_shape(a->right.get(), b->right.get());
}

}  // namespace treelab::avl
