// Slow oracle checks (ctest label "slow"): h = 5 needs shapes of 20 nodes,
// beyond exhaustive enumeration, so the search oracle answers it.

#include <iostream>

#include "treelab/fib_math.hpp"
#include "treelab/oracle.hpp"

int main() {
  using namespace treelab;
  int failures = 0;
  for (unsigned h = 0; h <= oracle::kMaxSearchedHeight; ++h) {
    const auto nodes = oracle::min_nodes_oracle(h);
    const auto leaves = oracle::min_leaves_oracle(h);
    const bool ok = nodes == fib::min_nodes(h) && leaves == fib::min_leaves(h);
    failures += !ok;
    std::cout << "h=" << h << " nodes=" << nodes << " leaves=" << leaves << (ok ? " ok" : " FAIL")
              << '\n';
  }
  // Shapes up to 13 nodes: full table, compared with Catalan numbers.
  const auto table = oracle::enumerate_shapes(13);
  const auto cat = oracle::catalan(13);
  for (unsigned n = 0; n <= 13; ++n) failures += table.shapes[n].size() != cat[n];
  for (unsigned n = 1; n <= oracle::kMaxPermutationSize; ++n) {
    const auto r = oracle::heap_worst_cost_oracle(n);
    failures += 2 * r.worst_cost > 3 * n;
  }
  std::cout << (failures ? "FAIL" : "ok") << '\n';
  return failures ? 1 : 0;
}
