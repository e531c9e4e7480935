#include "treelab/emit.hpp"

#include <cstddef>
#include <string>

namespace treelab::emit {

void write_trace_csv(std::ostream& os, const ledger::PotentialTrace& trace) {
  os << kTraceCsvHeader << '\n';
  for (const auto& e : trace.events) {
    os << e.step << ',' << e.root_index << ',' << e.left_level << ',' << e.right_level << ','
       << ledger::case_name(e.case_tag) << ',' << e.actual_cost << ',' << e.phi_before << ','
       << e.phi_after << ',' << e.amortized << '\n';
  }
}

Json trace_json(const ledger::PotentialTrace& trace, Json config) {
  Json events = Json::array();
  for (const auto& e : trace.events) {
    events.push_back({{"step", e.step},
                      {"root_index", e.root_index},
                      {"left_level", e.left_level},
                      {"right_level", e.right_level},
                      {"case", ledger::case_name(e.case_tag)},
                      {"actual_cost", e.actual_cost},
                      {"phi_before", e.phi_before},
                      {"phi_after", e.phi_after},
                      {"amortized", e.amortized}});
  }
  Json summary = {{"n", trace.n},
                  {"phi_initial", trace.phi_initial},
                  {"phi_final", trace.phi_final},
                  {"total_actual", trace.total_actual},
                  {"total_amortized", trace.total_amortized}};
  return {{"config", std::move(config)}, {"summary", std::move(summary)}, {"events", std::move(events)}};
}

namespace {

void dot_nodes(std::ostream& os, const avl::AvlNode* n, std::size_t& next) {
  const std::size_t id = next++;
  os << "  n" << id << " [label=\"" << n->key << '"';
  if (n->generation) os << ", fillcolor=\"/set312/" << (*n->generation % 12) + 1 << '"';
  os << "];\n";
  for (const avl::AvlNode* child : {n->left.get(), n->right.get()}) {
    if (!child) continue;
    os << "  n" << id << " -> n" << next << ";\n";
    dot_nodes(os, child, next);
  }
}

}  // namespace

void write_dot(std::ostream& os, const avl::AvlTree& tree) {
  os << "digraph avl {\n  node [shape=circle, style=filled, fillcolor=white];\n";
  std::size_t next = 0;
  if (tree.root()) dot_nodes(os, tree.root(), next);
  os << "}\n";
}

Json tree_json(const avl::AvlTree& tree, const minimal::GrowthTrace* trace, Json config) {
  Json summary = {{"nodes", avl::count_nodes(tree)},
                  {"leaves", avl::count_leaves(tree)},
                  {"height", avl::height(tree)}};
  Json generations = Json::array();
  if (trace) {
    for (const auto& g : trace->generations) {
      generations.push_back({{"step", g.step},
                             {"leaves_added", g.leaves_added},
                             {"nodes_total", g.nodes_total},
                             {"leaves_total", g.leaves_total}});
    }
  }
  return {{"config", std::move(config)},
          {"summary", std::move(summary)},
          {"generations", std::move(generations)}};
}

}  // namespace treelab::emit
