#pragma once

#include <ostream>
#include <string_view>

#include "json.hpp"
#include "treelab/avl_tree.hpp"
#include "treelab/minimal_tree.hpp"
#include "treelab/potential_ledger.hpp"

namespace treelab::emit {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kTraceCsvHeader =
    "step,root_index,left_level,right_level,case,actual_cost,phi_before,phi_after,amortized";

void write_trace_csv(std::ostream& os, const ledger::PotentialTrace& trace);

/// {config, summary, events}; event fields are named after the CSV columns.
Json trace_json(const ledger::PotentialTrace& trace, Json config);

/// One digraph; node ids are preorder indices, labels are keys, and tagged
/// nodes are filled from the set312 palette by generation.
void write_dot(std::ostream& os, const avl::AvlTree& tree);

/// {config, summary, generations}. generations is empty for untraced trees.
Json tree_json(const avl::AvlTree& tree, const minimal::GrowthTrace* trace, Json config);

}  // namespace treelab::emit
