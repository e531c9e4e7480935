#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace treelab::inputs {

enum class InputKind { Ascending, Descending, Random, File };

std::string_view to_string(InputKind kind);
/// Throws std::invalid_argument for an unknown name.
InputKind parse_kind(std::string_view name);

/// Values 1..n ascending, n..1 descending, or n seeded draws in [0, 2^31).
/// Random draws are the top 31 bits of std::mt19937_64, whose output
/// sequence is fixed by the C++ standard. File is rejected here.
std::vector<std::int64_t> generate(InputKind kind, std::size_t n, std::uint64_t seed);

/// A permutation of 1..n (Fisher-Yates with draw % (i + 1) on mt19937_64).
std::vector<std::int64_t> shuffled_range(std::size_t n, std::uint64_t seed);

/// One integer per line; blank trailing lines allowed. Throws
/// std::runtime_error on unreadable files or malformed lines.
std::vector<std::int64_t> read_integers(const std::filesystem::path& path);

}  // namespace treelab::inputs
