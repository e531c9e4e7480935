#include "treelab/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treelab/avl_tree.hpp"
#include "treelab/emit.hpp"
#include "treelab/fib_math.hpp"
#include "treelab/heap.hpp"
#include "treelab/inputs.hpp"
#include "treelab/minimal_tree.hpp"
#include "treelab/oracle.hpp"
#include "treelab/potential_ledger.hpp"

namespace treelab::cli {
namespace {

using emit::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// fibtree

int fibtree_build(int height, const std::string& method, const std::string& format,
                  const std::string& out_path, std::ostream& out) {
  if (height < 0) throw UsageError("--height must be >= 0");
  const auto h = static_cast<unsigned>(height);
  avl::AvlTree tree;
  minimal::GrowthTrace trace;
  const bool grown = method == "grow";
  if (grown) {
    auto g = minimal::grow_from_empty(h);
    tree = std::move(g.tree);
    trace = std::move(g.trace);
  } else {
    tree = minimal::build_recursive(height);
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + out_path);
  }
  std::ostream& os = out_path.empty() ? out : file;
  if (format == "dot") {
    emit::write_dot(os, tree);
  } else {
    Json config = {{"command", "fibtree build"}, {"height", height}, {"method", method}};
    os << emit::tree_json(tree, grown ? &trace : nullptr, std::move(config)).dump(2) << '\n';
  }

  const bool ok = avl::validate_avl(tree).ok && avl::height(tree) == height &&
                  avl::count_nodes(tree) == fib::min_nodes(h) &&
                  avl::count_leaves(tree) == fib::min_leaves(h);
  return ok ? kExitOk : kExitVerificationFailed;
}

struct HeightRow {
  unsigned h = 0;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  bool lemma1 = true;     // |T_h| = |T_{h-1}| + leaves(T_h) and internal(T_h) = |T_{h-1}|
  bool lemma2 = true;     // leaves = F(h), both constructions
  bool corollary = true;  // nodes = F(h+2) - 1 = prefix sum, both constructions
  bool histogram = true;  // generations = F(0..h)
  bool shape = true;      // grow(T_{h-1}) ~ T_h and grow_from_empty(h) ~ T_h
  bool valid = true;      // AVL-valid with exact height
  bool all() const { return lemma1 && lemma2 && corollary && histogram && shape && valid; }
};

std::vector<HeightRow> fibtree_rows(unsigned max_height) {
  std::vector<HeightRow> rows;
  avl::AvlTree prev;  // T_{h-1}, empty for h = 0
  for (unsigned h = 0; h <= max_height; ++h) {
    HeightRow r;
    r.h = h;
    const auto rec = minimal::build_recursive(static_cast<int>(h));
    const auto grown = minimal::grow_from_empty(h);
    const auto stepped = minimal::grow(prev, h);
    r.nodes = avl::count_nodes(rec);
    r.leaves = avl::count_leaves(rec);
    if (h >= 1) {
      r.lemma1 = avl::count_nodes(stepped) == avl::count_nodes(prev) + avl::count_leaves(stepped) &&
                 avl::count_internal(stepped) == avl::count_nodes(prev);
    }
    r.lemma2 = r.leaves == fib::fib(h) && avl::count_leaves(grown.tree) == fib::fib(h);
    r.corollary = r.nodes == fib::fib(h + 2) - 1 && avl::count_nodes(grown.tree) == r.nodes &&
                  r.nodes == fib::fib_prefix_sum(h);
    const auto hist = minimal::generation_histogram(grown.tree);
    r.histogram = hist.size() == h + 1;
    for (unsigned g = 0; r.histogram && g <= h; ++g) r.histogram = hist[g] == fib::fib(g);
    r.shape = avl::same_shape(stepped.root(), rec.root()) &&
              avl::same_shape(grown.tree.root(), rec.root());
    for (const auto* t : {&rec, &grown.tree, &stepped}) {
      r.valid = r.valid && avl::validate_avl(*t).ok && avl::height(*t) == static_cast<int>(h) &&
                avl::measured_height(*t) == static_cast<int>(h);
    }
    rows.push_back(r);
    prev = rec;
  }
  return rows;
}

int fibtree_verify(int max_height, std::ostream& out) {
  if (max_height < 0) throw UsageError("--max-height must be >= 0");
  if (max_height > 40) throw UsageError("--max-height above 40 would build > 10^9 nodes");
  out << "h,nodes,leaves,lemma1,lemma2,corollary,histogram,shape,valid\n";
  bool ok = true;
  for (const auto& r : fibtree_rows(static_cast<unsigned>(max_height))) {
    out << r.h << ',' << r.nodes << ',' << r.leaves << ',' << mark(r.lemma1) << ','
        << mark(r.lemma2) << ',' << mark(r.corollary) << ',' << mark(r.histogram) << ','
        << mark(r.shape) << ',' << mark(r.valid) << '\n';
    ok = ok && r.all();
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// avl

int avl_experiment(std::uint64_t n, const std::string& input, std::uint64_t seed,
                   const std::string& format, std::ostream& out) {
  const auto keys = input == "random" ? inputs::shuffled_range(n, seed)
                                      : inputs::generate(inputs::InputKind::Ascending, n, 0);
  const bool csv = format == "csv";
  if (csv) {
    out << "n,height,bound,pass\n";
  } else {
    out << std::setw(10) << "n" << std::setw(8) << "height" << std::setw(14) << "bound"
        << "  pass\n";
  }
  avl::AvlTree tree;
  bool ok = true;
  std::uint64_t next_report = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    tree.insert(keys[k]);
    const std::uint64_t size = k + 1;
    if (size != next_report && size != n) continue;
    while (next_report <= size) next_report *= 2;
    const bool pass = avl::height_bound_check(tree);
    ok = ok && pass;
    const std::string bound = fixed(fib::golden_height_bound(size));
    if (csv) {
      out << size << ',' << avl::height(tree) << ',' << bound << ',' << (pass ? "pass" : "fail")
          << '\n';
    } else {
      out << std::setw(10) << size << std::setw(8) << avl::height(tree) << std::setw(14) << bound
          << "  " << (pass ? "pass" : "fail") << '\n';
    }
  }
  ok = ok && avl::validate_avl(tree).ok && tree.size() == n;
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// heap

int heap_trace(std::uint64_t size, const std::string& input, std::uint64_t seed,
               const std::string& file, const std::string& format, std::ostream& out,
               std::ostream& err) {
  const auto kind = inputs::parse_kind(input);
  std::vector<std::int64_t> data;
  if (kind == inputs::InputKind::File) {
    if (file.empty()) throw UsageError("--input file requires --file PATH");
    data = inputs::read_integers(file);
  } else {
    data = inputs::generate(kind, size, seed);
  }
  heap::HeapBuffer buf(data);
  const auto trace = ledger::ledger_run(buf);
  if (format == "json") {
    Json config = {{"command", "heap trace"}, {"size", data.size()}, {"input", input},
                   {"seed", seed}};
    if (kind == inputs::InputKind::File) config["file"] = file;
    out << emit::trace_json(trace, std::move(config)).dump(2) << '\n';
  } else {
    emit::write_trace_csv(out, trace);
  }
  const auto report = ledger::verify_trace(trace);
  bool ok = report.passed();
  if (const auto* f = report.first_failure()) err << "verification failed: " << f->name << ": " << f->detail << '\n';
  if (auto h = heap::validate_heap(buf); !h) {
    err << "heap property violated: " << h.first_violation << '\n';
    ok = false;
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

bool print_scan(const std::vector<ledger::ScanRow>& rows, std::ostream& out) {
  out << "kind,seed,runs,max_ratio,n_at_max,max_actual,failures,first_failure\n";
  bool ok = true;
  for (const auto& r : rows) {
    out << inputs::to_string(r.input.kind) << ',' << r.input.seed << ',' << r.runs << ','
        << fixed(r.max_ratio) << ',' << r.n_at_max << ',' << r.max_actual << ',' << r.failures
        << ',' << r.first_failure << '\n';
    ok = ok && r.failures == 0 && 2 * r.max_actual <= 3 * r.n_at_max;
  }
  return ok;
}

int heap_verify(std::uint64_t max_size, std::uint64_t seeds, std::ostream& out) {
  if (max_size == 0) throw UsageError("--max-size must be >= 1");
  const auto rows = ledger::worst_case_scan(max_size, ledger::standard_inputs(seeds));
  return print_scan(rows, out) ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// oracle

int oracle_avl(int max_height, std::ostream& out) {
  if (max_height < 0 || max_height > static_cast<int>(oracle::kMaxSearchedHeight)) {
    throw UsageError("--max-height must be in 0.." + std::to_string(oracle::kMaxSearchedHeight));
  }
  out << "h,min_nodes_oracle,min_nodes,min_leaves_oracle,min_leaves,agree\n";
  bool ok = true;
  for (unsigned h = 0; h <= static_cast<unsigned>(max_height); ++h) {
    const auto on = oracle::min_nodes_oracle(h);
    const auto ol = oracle::min_leaves_oracle(h);
    const bool agree = on == fib::min_nodes(h) && ol == fib::min_leaves(h);
    ok = ok && agree;
    out << h << ',' << on << ',' << fib::min_nodes(h) << ',' << ol << ',' << fib::min_leaves(h)
        << ',' << mark(agree) << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int oracle_heap(std::uint64_t max_size, std::ostream& out) {
  if (max_size < 1 || max_size > oracle::kMaxPermutationSize) {
    throw UsageError("--max-size must be in 1.." + std::to_string(oracle::kMaxPermutationSize));
  }
  out << "n,worst_cost,ascending_cost,depth_sum,within_1.5n,ascending_is_worst,worst_eq_depth_sum\n";
  bool ok = true;
  for (unsigned n = 1; n <= max_size; ++n) {
    const auto r = oracle::heap_worst_cost_oracle(n);
    const bool within = 2 * r.worst_cost <= 3 * n;
    ok = ok && within;
    out << n << ',' << r.worst_cost << ',' << r.ascending_cost << ',' << r.depth_sum << ','
        << mark(within) << ',' << (r.ascending_cost == r.worst_cost ? "yes" : "no") << ','
        << (r.worst_cost == r.depth_sum ? "yes" : "no") << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// verify all

int verify_all(int max_height, std::uint64_t max_size, std::ostream& out) {
  if (max_size == 0) throw UsageError("--max-size must be >= 1");
  struct Section {
    std::string name;
    std::function<int(std::ostream&)> body;
  };
  const std::vector<Section> sections = {
      {"fibtree verify --max-height " + std::to_string(max_height),
       [&](std::ostream& os) { return fibtree_verify(max_height, os); }},
      {"heap verify --max-size " + std::to_string(max_size) + " --seeds 10",
       [&](std::ostream& os) { return heap_verify(max_size, 10, os); }},
      {"oracle avl --max-height 4", [](std::ostream& os) { return oracle_avl(4, os); }},
      {"oracle heap --max-size 8", [](std::ostream& os) { return oracle_heap(8, os); }},
      {"avl experiment --n 10000 --input random --seed 0",
       [](std::ostream& os) { return avl_experiment(10000, "random", 0, "csv", os); }},
      {"aggregate bound <= 2n for n <= " + std::to_string(max_size),
       [&](std::ostream& os) {
         const auto s = heap::aggregate_sweep(max_size);
         os << "n_max,violations,max_ratio,n_at_max\n"
            << s.n_max << ',' << s.violations << ',' << fixed(s.max_ratio) << ',' << s.n_at_max
            << '\n';
         return s.violations == 0 ? kExitOk : kExitVerificationFailed;
       }},
  };
  bool ok = true;
  for (const auto& s : sections) {
    std::ostringstream body;
    const int code = s.body(body);
    ok = ok && code == kExitOk;
    out << "== " << s.name << ": " << (code == kExitOk ? "pass" : "FAIL") << '\n';
    if (code != kExitOk) out << body.str();
  }
  out << "verify all: " << (ok ? "pass" : "FAIL") << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Instrumented minimal-AVL and build-heap laboratory", "treelab"};
  app.require_subcommand(1);

  int height = 0;
  int max_height = 20;
  std::string method = "recursive";
  std::string format;
  std::string out_path;
  std::string input = "ascending";
  std::string file;
  std::uint64_t n = 0;
  std::uint64_t size = 0;
  std::uint64_t max_size = 1024;
  std::uint64_t seed = 0;
  std::uint64_t seeds = 10;

  std::function<int()> action;

  auto* fibtree = app.add_subcommand("fibtree", "Minimal AVL (Fibonacci) trees");
  fibtree->require_subcommand(1);
  auto* build = fibtree->add_subcommand("build", "Build T_h and emit it");
  build->add_option("--height", height, "Tree height h")->required();
  build->add_option("--method", method)->check(CLI::IsMember({"recursive", "grow"}));
  build->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  build->add_option("--out", out_path, "Output path (default stdout)");
  build->callback([&] {
    action = [&] { return fibtree_build(height, method, format.empty() ? "json" : format, out_path, out); };
  });
  auto* fverify = fibtree->add_subcommand("verify", "Check the minimal-tree identities for h <= H");
  fverify->add_option("--max-height", max_height);
  fverify->callback([&] { action = [&] { return fibtree_verify(max_height, out); }; });

  auto* avl_cmd = app.add_subcommand("avl", "AVL insertion experiments");
  avl_cmd->require_subcommand(1);
  auto* experiment = avl_cmd->add_subcommand("experiment", "Insert N keys and check the height bound");
  experiment->add_option("--n", n)->required();
  experiment->add_option("--input", input)->check(CLI::IsMember({"random", "ascending"}));
  experiment->add_option("--seed", seed);
  experiment->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));
  experiment->callback([&] {
    action = [&] { return avl_experiment(n, input, seed, format.empty() ? "text" : format, out); };
  });

  auto* heap_cmd = app.add_subcommand("heap", "Build-heap potential ledger");
  heap_cmd->require_subcommand(1);
  auto* trace = heap_cmd->add_subcommand("trace", "Emit the merge ledger of one build-heap run");
  trace->add_option("--size", size);
  trace->add_option("--input", input)
      ->check(CLI::IsMember({"ascending", "descending", "random", "file"}));
  trace->add_option("--seed", seed);
  trace->add_option("--file", file);
  trace->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  trace->callback([&] {
    action = [&] {
      return heap_trace(size, input, seed, file, format.empty() ? "csv" : format, out, err);
    };
  });
  auto* hverify = heap_cmd->add_subcommand("verify", "Ledger sweep over n = 1..N");
  hverify->add_option("--max-size", max_size);
  hverify->add_option("--seeds", seeds);
  hverify->callback([&] { action = [&] { return heap_verify(max_size, seeds, out); }; });

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force oracles");
  oracle_cmd->require_subcommand(1);
  auto* oavl = oracle_cmd->add_subcommand("avl", "Exhaustive minimal AVL search");
  oavl->add_option("--max-height", max_height)->required();
  oavl->callback([&] { action = [&] { return oracle_avl(max_height, out); }; });
  auto* oheap = oracle_cmd->add_subcommand("heap", "Worst build-heap cost over all permutations");
  oheap->add_option("--max-size", max_size)->required();
  oheap->callback([&] { action = [&] { return oracle_heap(max_size, out); }; });

  auto* verify = app.add_subcommand("verify", "Run every check");
  verify->require_subcommand(1);
  auto* all = verify->add_subcommand("all", "Every verification at desk scale");
  all->add_option("--max-height", max_height);
  all->add_option("--max-size", max_size);
  all->callback([&] { action = [&] { return verify_all(max_height, max_size, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const std::exception& e) {
    // Identity failures are reported through exit code 1; anything thrown
    // is a bad argument or an IO problem.
    err << "treelab: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace treelab::cli
