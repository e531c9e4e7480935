#include "treelab/potential_ledger.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace treelab::ledger {

const char* case_name(MergeCase c) {
  return c == MergeCase::SameLevel ? "same" : "diff";
}

std::vector<HeapLevel> subtree_levels(std::uint64_t n) {
  std::vector<HeapLevel> levels(n + 1, 0);
  for (std::uint64_t i = 1; i <= n; ++i) levels[i] = heap::subtree_height(n, i) + 1;
  return levels;
}

PotentialTrace ledger_run(heap::HeapBuffer& buf) {
  const std::uint64_t n = buf.size();
  PotentialTrace t;
  t.n = n;
  // forest[i] = level of the heap rooted at i, 0 once absorbed.
  std::vector<HeapLevel> forest(n + 2, 1);
  forest[0] = 0;
  forest[n + 1] = 0;
  std::uint64_t phi = n;
  t.phi_initial = phi;
  t.events.reserve(n / 2);

  auto level_at = [&](std::uint64_t j) -> HeapLevel { return j <= n ? forest[j] : 0; };

  for (std::uint64_t i = n / 2; i >= 1; --i) {
    MergeEvent e;
    e.step = t.events.size() + 1;
    e.root_index = i;
    e.left_level = level_at(2 * i);
    e.right_level = level_at(2 * i + 1);
    e.case_tag = e.left_level == e.right_level ? MergeCase::SameLevel : MergeCase::DifferentLevels;
    e.actual_cost = heap::sift_down(buf, i).iterations;
    e.phi_before = phi;

    const HeapLevel merged = std::max(e.left_level, e.right_level) + 1;
    phi = phi - (forest[i] + e.left_level + e.right_level) + merged;
    forest[i] = merged;
    if (2 * i <= n) forest[2 * i] = 0;
    if (2 * i + 1 <= n) forest[2 * i + 1] = 0;

    e.phi_after = phi;
    e.amortized = static_cast<std::int64_t>(e.actual_cost) + static_cast<std::int64_t>(e.phi_after) -
                  static_cast<std::int64_t>(e.phi_before);
    t.total_actual += e.actual_cost;
    t.total_amortized += e.amortized;
    t.events.push_back(e);
  }

  std::uint64_t remaining = 0;
  for (std::uint64_t j = 1; j <= n; ++j) remaining += forest[j];
  t.phi_final = remaining;
  return t;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

std::string describe(const MergeEvent& e) {
  std::ostringstream os;
  os << "step " << e.step << " (i=" << e.root_index << ", levels " << e.left_level << ","
     << e.right_level << ", " << case_name(e.case_tag) << ", cost " << e.actual_cost << ", phi "
     << e.phi_before << "->" << e.phi_after << ", amortized " << e.amortized << ")";
  return os.str();
}

Check make(std::string name) { return Check{std::move(name), true, {}}; }

void fail(Check& c, std::string detail) {
  if (c.passed) {
    c.passed = false;
    c.detail = std::move(detail);
  }
}

}  // namespace

VerificationReport verify_trace(const PotentialTrace& t) {
  VerificationReport r;
  const std::uint64_t n = t.n;

  Check cases = make("amortized_cases");
  Check arith = make("event_arithmetic");
  Check forest = make("forest_levels");
  const auto levels = subtree_levels(n);
  std::uint64_t expect_phi = t.phi_initial;
  std::uint64_t expect_index = n / 2;
  std::uint64_t sum_actual = 0;
  std::int64_t sum_amortized = 0;

  for (const auto& e : t.events) {
    const HeapLevel l = std::max(e.left_level, e.right_level);
    const bool same = e.left_level == e.right_level;
    if (e.case_tag == MergeCase::DifferentLevels ? e.amortized > 1 : e.amortized > 0) {
      fail(cases, describe(e));
    }
    const auto spread = same ? 0 : l - std::min(e.left_level, e.right_level);
    const std::uint64_t consumed = 1 + e.left_level + e.right_level;
    const bool ok = (same == (e.case_tag == MergeCase::SameLevel)) && spread <= 1 &&
                    e.phi_before == expect_phi && e.phi_before >= consumed &&
                    e.phi_after == e.phi_before - consumed + (l + 1) &&
                    e.amortized == static_cast<std::int64_t>(e.actual_cost) +
                                       static_cast<std::int64_t>(e.phi_after) -
                                       static_cast<std::int64_t>(e.phi_before) &&
                    e.actual_cost <= l && e.step == (n / 2 - expect_index) + 1;
    if (!ok) fail(arith, describe(e));
    if (e.root_index != expect_index || e.root_index > n || levels[e.root_index] != l + 1) {
      fail(forest, describe(e) + ": merged level " + std::to_string(l + 1));
    }
    expect_phi = e.phi_after;
    if (expect_index > 0) --expect_index;
    sum_actual += e.actual_cost;
    sum_amortized += e.amortized;
  }
  if (!t.events.empty() && t.phi_final != expect_phi) {
    fail(arith, "phi_final " + std::to_string(t.phi_final) + " != last phi_after " +
                    std::to_string(expect_phi));
  }
  if (sum_actual != t.total_actual || sum_amortized != t.total_amortized) {
    fail(arith, "trace totals disagree with event sums");
  }

  Check telescoping = make("telescoping");
  if (static_cast<std::int64_t>(t.total_actual) !=
      t.total_amortized + static_cast<std::int64_t>(t.phi_initial) -
          static_cast<std::int64_t>(t.phi_final)) {
    fail(telescoping, std::to_string(t.total_actual) + " != " + std::to_string(t.total_amortized) +
                          " + " + std::to_string(t.phi_initial) + " - " +
                          std::to_string(t.phi_final));
  }

  Check bound = make("total_le_1.5n");
  Check phi0 = make("phi_initial_eq_n");
  Check phim = make("phi_final_eq_floor_log2n_plus_1");
  Check count = make("event_count_eq_floor_half_n");
  if (n == 0) {
    for (Check* c : {&bound, &phi0, &phim, &count}) c->detail = "skipped (n=0)";
  } else {
    if (2 * t.total_actual > 3 * n) {
      fail(bound, std::to_string(t.total_actual) + " > 1.5*" + std::to_string(n));
    }
    if (t.phi_initial != n) fail(phi0, std::to_string(t.phi_initial));
    const std::uint64_t want = static_cast<std::uint64_t>(std::bit_width(n));
    if (t.phi_final != want) {
      fail(phim, std::to_string(t.phi_final) + " != " + std::to_string(want));
    }
    if (t.events.size() != n / 2 || 2 * t.events.size() > n) {
      fail(count, std::to_string(t.events.size()));
    }
  }

  r.checks = {cases, arith, forest, telescoping, bound, phi0, phim, count};
  return r;
}

std::vector<ScanInput> standard_inputs(std::uint64_t seeds) {
  std::vector<ScanInput> v{{inputs::InputKind::Ascending, 0}, {inputs::InputKind::Descending, 0}};
  for (std::uint64_t s = 0; s < seeds; ++s) v.push_back({inputs::InputKind::Random, s});
  return v;
}

namespace {

struct Cell {
  std::uint64_t total_actual = 0;
  std::string failure;  // empty when every check passed
};

Cell run_cell(const ScanInput& in, std::uint64_t n) {
  heap::HeapBuffer buf(inputs::generate(in.kind, n, in.seed));
  const auto trace = ledger_run(buf);
  Cell c{trace.total_actual, {}};
  const auto report = verify_trace(trace);
  if (const Check* f = report.first_failure()) {
    c.failure = "n=" + std::to_string(n) + ": " + f->name + ": " + f->detail;
  } else if (auto h = heap::validate_heap(buf); !h) {
    c.failure = "n=" + std::to_string(n) + ": heap: " + h.first_violation;
  }
  return c;
}

std::vector<ScanRow> reduce(std::uint64_t n_max, const std::vector<ScanInput>& kinds,
                            const std::vector<Cell>& cells) {
  std::vector<ScanRow> rows;
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    ScanRow row;
    row.input = kinds[k];
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const Cell& c = cells[k * n_max + (n - 1)];
      ++row.runs;
      // total/n > max_actual/n_at_max, compared exactly.
      if (row.n_at_max == 0 || c.total_actual * row.n_at_max > row.max_actual * n) {
        row.max_actual = c.total_actual;
        row.n_at_max = n;
      }
      if (!c.failure.empty() && row.failures++ == 0) row.first_failure = c.failure;
    }
    if (row.n_at_max) {
      row.max_ratio = static_cast<double>(row.max_actual) / static_cast<double>(row.n_at_max);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<ScanRow> worst_case_scan_serial(std::uint64_t n_max,
                                            const std::vector<ScanInput>& kinds) {
  if (n_max == 0) throw std::invalid_argument("worst_case_scan: n_max must be >= 1");
  std::vector<Cell> cells(kinds.size() * n_max);
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    for (std::uint64_t n = 1; n <= n_max; ++n) cells[k * n_max + (n - 1)] = run_cell(kinds[k], n);
  }
  return reduce(n_max, kinds, cells);
}

std::vector<ScanRow> worst_case_scan(std::uint64_t n_max, const std::vector<ScanInput>& kinds) {
  if (n_max == 0) throw std::invalid_argument("worst_case_scan: n_max must be >= 1");
  const auto total = static_cast<std::int64_t>(kinds.size() * n_max);
  std::vector<Cell> cells(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t c = 0; c < total; ++c) {
    const auto k = static_cast<std::size_t>(c) / n_max;
    const auto n = static_cast<std::uint64_t>(c) % n_max + 1;
    cells[static_cast<std::size_t>(c)] = run_cell(kinds[k], n);
  }
  return reduce(n_max, kinds, cells);
}

}  // namespace treelab::ledger
