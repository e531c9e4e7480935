#include "treelab/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace treelab::oracle {
namespace {

Shape empty_shape() { return Shape{0, 0, 1}; }

Shape join(const Shape& l, unsigned nl, const Shape& r, unsigned nr) {
  const unsigned lbits = 2 * nl + 1;
  const unsigned rbits = 2 * nr + 1;
  Shape s{};
  s.code = (std::uint64_t{1} << (lbits + rbits)) | (std::uint64_t{l.code} << rbits) | r.code;
  const int hl = l.height();
  const int hr = r.height();
  s.height_plus_one = static_cast<std::uint64_t>(std::max(hl, hr) + 2);
  s.avl = l.is_avl() && r.is_avl() && hl - hr <= 1 && hr - hl <= 1;
  return s;
}

// Walks the preorder bitstring starting at bit position pos (counting down).
unsigned leaves_at(std::uint64_t code, int& pos) {
  const bool node = (code >> pos) & 1;
  --pos;
  if (!node) return 0;
  const bool left_empty = !((code >> pos) & 1);
  const unsigned l = leaves_at(code, pos);
  const bool right_empty = !((code >> pos) & 1);
  const unsigned r = leaves_at(code, pos);
  return (left_empty && right_empty) ? 1 : l + r;
}

// Appends the shapes with one more node than the table currently holds.
void extend(ShapeTable& t) {
  const unsigned n = static_cast<unsigned>(t.shapes.size());
  std::vector<Shape> out;
  for (unsigned nl = 0; nl < n; ++nl) {
    const unsigned nr = n - 1 - nl;
    for (const auto& l : t.shapes[nl]) {
      for (const auto& r : t.shapes[nr]) out.push_back(join(l, nl, r, nr));
    }
  }
  t.shapes.push_back(std::move(out));
}

void check_height(unsigned h, unsigned reach) {
  if (h > reach) {
    throw std::invalid_argument("oracle: height " + std::to_string(h) +
                                " is beyond exhaustive reach (max " + std::to_string(reach) + ")");
  }
}

// Searches AVL shapes of exactly height h, counting nodes against a budget.
// Returns the fewest nodes (and fewest leaves among those) not exceeding
// budget, or nodes = max when none fits.
MinShapeResult search(int h, std::uint64_t budget) {
  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  if (h < 0) return {0, 0};
  if (h == 0) return budget >= 1 ? MinShapeResult{1, 1} : MinShapeResult{kNone, 0};
  if (budget < static_cast<std::uint64_t>(h) + 1) return {kNone, 0};
  MinShapeResult best{kNone, 0};
  // Child height pairs allowed under the balance rule.
  const int pairs[3][2] = {{h - 1, h - 1}, {h - 1, h - 2}, {h - 2, h - 1}};
  for (const auto& p : pairs) {
    const std::uint64_t cap = std::min(budget, best.nodes) - 1;
    const auto l = search(p[0], cap);
    if (l.nodes == kNone) continue;
    const auto r = search(p[1], cap - l.nodes);
    if (r.nodes == kNone) continue;
    const std::uint64_t nodes = 1 + l.nodes + r.nodes;
    const std::uint64_t leaves = (l.nodes == 0 && r.nodes == 0) ? 1 : l.leaves + r.leaves;
    if (nodes < best.nodes || (nodes == best.nodes && leaves < best.leaves)) best = {nodes, leaves};
  }
  return best;
}

// Independent max-heap sift-down, counting loop iterations.
std::uint64_t build_cost(std::vector<int>& a) {
  const std::size_t n = a.size();
  std::uint64_t cost = 0;
  for (std::size_t start = n / 2; start > 0; --start) {
    std::size_t pos = start - 1;  // 0-based
    for (;;) {
      const std::size_t l = 2 * pos + 1;
      if (l >= n) break;
      ++cost;
      std::size_t big = l;
      if (l + 1 < n && a[l + 1] > a[l]) big = l + 1;
      if (a[pos] >= a[big]) break;
      std::swap(a[pos], a[big]);
      pos = big;
    }
  }
  return cost;
}

std::uint64_t depth_sum(unsigned n) {
  std::uint64_t sum = 0;
  for (unsigned i = 1; i <= n / 2; ++i) {
    unsigned depth = 0;
    for (unsigned j = i; 2 * j <= n; j *= 2) ++depth;  // leftmost path is the longest
    sum += depth;
  }
  return sum;
}

std::uint64_t worst_with_first(unsigned n, int first) {
  std::vector<int> rest;
  for (int v = 1; v <= static_cast<int>(n); ++v) {
    if (v != first) rest.push_back(v);
  }
  std::uint64_t worst = 0;
  std::vector<int> work(n);
  do {
    work[0] = first;
    std::copy(rest.begin(), rest.end(), work.begin() + 1);
    worst = std::max(worst, build_cost(work));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return worst;
}

HeapOracleResult finish(unsigned n, std::uint64_t worst) {
  std::vector<int> asc(n);
  std::iota(asc.begin(), asc.end(), 1);
  return {n, worst, build_cost(asc), depth_sum(n)};
}

void check_perm_size(unsigned n) {
  if (n == 0 || n > kMaxPermutationSize) {
    throw std::invalid_argument("heap_worst_cost_oracle: n must be in 1.." +
                                std::to_string(kMaxPermutationSize));
  }
}

}  // namespace

ShapeTable enumerate_shapes(unsigned n_max) {
  if (n_max > kMaxShapeNodes) {
    throw std::invalid_argument("enumerate_shapes: n_max " + std::to_string(n_max) +
                                " exceeds " + std::to_string(kMaxShapeNodes) +
                                " (Catalan growth; C(17) shapes would not fit in memory)");
  }
  ShapeTable t;
  t.shapes.push_back({empty_shape()});
  while (t.n_max() < n_max) extend(t);
  return t;
}

unsigned shape_leaves(const Shape& s, unsigned n) {
  int pos = static_cast<int>(2 * n);
  return leaves_at(s.code, pos);
}

std::vector<std::uint64_t> catalan(unsigned n_max) {
  std::vector<std::uint64_t> c(n_max + 1, 0);
  c[0] = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned k = 0; k < n; ++k) c[n] += c[k] * c[n - 1 - k];
  }
  return c;
}

MinShapeResult min_shape_search(unsigned h) {
  check_height(h, kMaxSearchedHeight);
  // Any AVL tree of height h fits under a complete tree's 2^(h+1) - 1 nodes.
  return search(static_cast<int>(h), (std::uint64_t{1} << (h + 1)) - 1);
}

namespace {

MinShapeResult enumerate_min(unsigned h) {
  // Grows the table one size at a time and stops at the first size that
  // admits an AVL shape of height h.
  ShapeTable table;
  table.shapes.push_back({empty_shape()});
  while (table.n_max() < kMaxShapeNodes) {
    extend(table);
    const unsigned n = table.n_max();
    MinShapeResult best{0, std::numeric_limits<std::uint64_t>::max()};
    for (const auto& s : table.shapes[n]) {
      if (s.is_avl() && s.height() == static_cast<int>(h)) {
        best.nodes = n;
        best.leaves = std::min<std::uint64_t>(best.leaves, shape_leaves(s, n));
      }
    }
    if (best.nodes) return best;
  }
  throw std::logic_error("enumerate_min: no AVL shape of height " + std::to_string(h) +
                         " within " + std::to_string(kMaxShapeNodes) + " nodes");
}

MinShapeResult min_shape(unsigned h) {
  check_height(h, kMaxSearchedHeight);
  return h <= kMaxEnumeratedHeight ? enumerate_min(h) : min_shape_search(h);
}

}  // namespace

std::uint64_t min_nodes_oracle(unsigned h) { return min_shape(h).nodes; }
std::uint64_t min_leaves_oracle(unsigned h) { return min_shape(h).leaves; }

HeapOracleResult heap_worst_cost_oracle_serial(unsigned n) {
  check_perm_size(n);
  std::uint64_t worst = 0;
  for (int first = 1; first <= static_cast<int>(n); ++first) {
    worst = std::max(worst, worst_with_first(n, first));
  }
  return finish(n, worst);
}

HeapOracleResult heap_worst_cost_oracle(unsigned n) {
  check_perm_size(n);
  std::uint64_t worst = 0;
#pragma omp parallel for reduction(max : worst) schedule(dynamic, 1)
  for (int first = 1; first <= static_cast<int>(n); ++first) {
    worst = std::max(worst, worst_with_first(n, first));
  }
  return finish(n, worst);
}

}  // namespace treelab::oracle
