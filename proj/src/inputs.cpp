#include "treelab/inputs.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

namespace treelab::inputs {

std::string_view to_string(InputKind kind) {
  switch (kind) {
    case InputKind::Ascending: return "ascending";
    case InputKind::Descending: return "descending";
    case InputKind::Random: return "random";
    case InputKind::File: return "file";
  }
  return "?";
}

InputKind parse_kind(std::string_view name) {
  for (auto k : {InputKind::Ascending, InputKind::Descending, InputKind::Random, InputKind::File}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown input kind '" + std::string(name) + "'");
}

std::vector<std::int64_t> generate(InputKind kind, std::size_t n, std::uint64_t seed) {
  std::vector<std::int64_t> v(n);
  switch (kind) {
    case InputKind::Ascending:
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(i + 1);
      break;
    case InputKind::Descending:
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(n - i);
      break;
    case InputKind::Random: {
      std::mt19937_64 rng(seed);
      for (auto& x : v) x = static_cast<std::int64_t>(rng() >> 33);
      break;
    }
    case InputKind::File:
      throw std::invalid_argument("generate: file input has no generator");
  }
  return v;
}

std::vector<std::int64_t> shuffled_range(std::size_t n, std::uint64_t seed) {
  auto v = generate(InputKind::Ascending, n, 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
  return v;
}

std::vector<std::int64_t> read_integers(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::int64_t> out;
  std::string line;
  std::size_t lineno = 0;
  bool blank_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      blank_seen = true;
      continue;
    }
    if (blank_seen) throw std::runtime_error(path.string() + ": blank line before line " +
                                             std::to_string(lineno));
    std::int64_t value = 0;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(line.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": not an integer: '" + line + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace treelab::inputs
