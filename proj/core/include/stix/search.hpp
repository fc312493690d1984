#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stix/bit_matrix.hpp"

namespace stix {

// Row-major bit encoding: entry (0,0) is the most significant of the n^2
// bits, so numeric order on codes is lexicographic order on the row strings.
// Orders up to 8.
std::uint64_t row_major_code(const BoolMatrix& a);
BoolMatrix from_row_major_code(std::uint64_t code, std::size_t n);

inline constexpr std::size_t kMaxCanonicalOrder = 8;

// Representative of the permutation-similarity class with the smallest
// row-major code. Throws OrderTooLarge above order 8.
BoolMatrix canonical_form(const BoolMatrix& a);

// Contiguous slice of the code space [0, 2^(n^2)). For power-of-two shard
// counts the slices are exactly the classes of the top log2(count) bits.
struct ShardSpec {
  std::uint64_t index = 0;
  std::uint64_t count = 1;
};

struct CodeRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;  // exclusive
};

CodeRange shard_range(int n, ShardSpec shard);

struct SearchReport {
  int n = 0;
  std::int64_t s_value = 0;                    // 0 when no finite index was seen
  std::vector<BoolMatrix> extremal_matrices;   // canonical forms, ascending by code
  std::map<std::int64_t, std::uint64_t> theta_histogram;
  std::uint64_t infinite_count = 0;
  std::uint64_t matrices_scanned = 0;
  // Run metadata, not part of the deterministic payload.
  std::uint64_t shard_count = 1;
  std::vector<std::uint64_t> shards;
  double elapsed_seconds = 0.0;
};

struct SearchOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  bool allow_n6 = false;
  std::uint64_t chunk_size = std::uint64_t{1} << 16;
};

class SearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Power horizon used while scanning order n; matrices still 0-1 past it are
// resolved exactly by cycle detection.
int search_cap(int n);

// Scans every matrix whose code lies in the shard. 2 <= n <= 6; n = 6 needs
// options.allow_n6.
SearchReport enumerate_s(int n, ShardSpec shard, const SearchOptions& options = {});

// Throws SearchError when parts disagree on n or shard_count, or overlap.
SearchReport merge_reports(std::span<const SearchReport> parts);

// Deterministic payload only unless include_run_metadata is set.
std::string to_json(const SearchReport& report, bool include_run_metadata = false);
SearchReport search_report_from_json(const std::string& text);

std::string checkpoint_file_name(ShardSpec shard);

// Runs `only_shard` (or every shard) of a shard_count-way split. With a
// resume directory, completed shards are loaded from their checkpoint files
// and newly finished shards are written there atomically.
SearchReport run_search(int n, std::uint64_t shard_count, const SearchOptions& options,
                        const std::optional<std::filesystem::path>& resume_dir = std::nullopt,
                        std::optional<std::uint64_t> only_shard = std::nullopt);

// Stable index from explicit walk enumeration: nullopt when no two walks of
// equal length up to max_length share endpoints.
std::optional<int> walk_enumeration_theta(const BoolMatrix& a, int max_length);

// Capped-power engine against walk enumeration over all of M_n{0,1}, n <= 4.
bool cross_check_small(int n);

}  // namespace stix
