#include "stix/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "stix/digraph.hpp"
#include "stix/extremal.hpp"
#include "stix/parallel.hpp"
#include "stix/stable_index.hpp"

namespace stix {

namespace {

using packed::Matrix8;
using json = nlohmann::json;

std::uint8_t reverse_bits(std::uint8_t b, int n) {
  std::uint8_t r = 0;
  for (int j = 0; j < n; ++j)
    if ((b >> j) & 1u) r |= static_cast<std::uint8_t>(1u << (n - 1 - j));
  return r;
}

// Packed rows use bit j for column j; codes put column 0 first (MSB).
Matrix8 packed_from_code(std::uint64_t code, int n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  Matrix8 m = 0;
  for (int i = 0; i < n; ++i) {
    const auto chunk = static_cast<std::uint8_t>((code >> (n * (n - 1 - i))) & mask);
    m |= Matrix8{reverse_bits(chunk, n)} << (8 * i);
  }
  return m;
}

// Minimal code over all simultaneous row/column permutations. Rows are
// emitted most-significant first so a permutation is abandoned as soon as
// its prefix exceeds the best code found so far.
std::uint64_t canonical_code_generic(Matrix8 m, int n) {
  std::array<int, packed::kMaxOrder> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    bool worse = false;
    for (int i = 0; i < n && !worse; ++i) {
      const std::uint8_t src = packed::row(m, perm[i]);
      std::uint64_t bits = 0;
      for (int j = 0; j < n; ++j) bits = (bits << 1) | ((src >> perm[j]) & 1u);
      const int shift = n * (n - 1 - i);
      code |= bits << shift;
      if ((code >> shift) > (best >> shift)) worse = true;
    }
    if (!worse && code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

// Table-driven canonical code for the search orders (n <= 6): for each
// permutation, row_map[b] is the code-ordered image of packed row b.
class CanonicalTables {
 public:
  explicit CanonicalTables(int n) : n_(n) {
    std::array<int, packed::kMaxOrder> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    do {
      Entry e{};
      std::copy(perm.begin(), perm.begin() + n, e.source_row.begin());
      for (int b = 0; b < (1 << n); ++b) {
        std::uint8_t bits = 0;
        for (int j = 0; j < n; ++j) bits = static_cast<std::uint8_t>((bits << 1) | ((b >> perm[j]) & 1));
        e.row_map[static_cast<std::size_t>(b)] = bits;
      }
      entries_.push_back(e);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
  }

  std::uint64_t canonical_code(Matrix8 m) const {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& e : entries_) {
      std::uint64_t code = 0;
      int i = 0;
      for (; i < n_; ++i) {
        const int shift = n_ * (n_ - 1 - i);
        code |= std::uint64_t{e.row_map[packed::row(m, e.source_row[static_cast<std::size_t>(i)])]} << shift;
        if ((code >> shift) > (best >> shift)) break;
      }
      if (i == n_ && code < best) best = code;
    }
    return best;
  }

 private:
  struct Entry {
    std::array<int, packed::kMaxOrder> source_row;
    std::array<std::uint8_t, 64> row_map;
  };
  int n_;
  std::vector<Entry> entries_;
};

void check_search_order(int n, const SearchOptions& options) {
  if (n < 2 || n > 6)
    throw SearchError("search: order must be between 2 and 6, got " + std::to_string(n));
  if (n == 6 && !options.allow_n6)
    throw SearchError("search: n = 6 scans 2^36 matrices and needs the explicit long-run flag");
}

struct ChunkResult {
  std::int64_t max_theta = 0;
  std::vector<std::uint64_t> codes;  // canonical codes attaining max_theta
  std::vector<std::uint64_t> histogram;  // index = theta
  std::uint64_t infinite = 0;
  std::uint64_t scanned = 0;
};

void scan_chunk(int n, int cap, const CanonicalTables& tables, std::uint64_t begin,
                std::uint64_t end, ChunkResult& out) {
  out.histogram.assign(static_cast<std::size_t>(cap) + 2, 0);
  for (std::uint64_t code = begin; code < end; ++code) {
    const Matrix8 a = packed_from_code(code, n);
    std::optional<int> theta = packed::stable_index_capped(a, n, cap);
    if (!theta) theta = packed::stable_index_exact(a, n);
    ++out.scanned;
    if (!theta) {
      ++out.infinite;
      continue;
    }
    const auto t = static_cast<std::size_t>(*theta);
    if (t >= out.histogram.size()) out.histogram.resize(t + 1, 0);
    ++out.histogram[t];
    if (*theta < out.max_theta) continue;
    if (*theta > out.max_theta) {
      out.max_theta = *theta;
      out.codes.clear();
    }
    out.codes.push_back(tables.canonical_code(a));
  }
  std::sort(out.codes.begin(), out.codes.end());
  out.codes.erase(std::unique(out.codes.begin(), out.codes.end()), out.codes.end());
}

std::vector<BoolMatrix> matrices_from_codes(const std::vector<std::uint64_t>& codes, int n) {
  std::vector<BoolMatrix> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(from_row_major_code(c, static_cast<std::size_t>(n)));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t row_major_code(const BoolMatrix& a) {
  const std::size_t n = a.order();
  if (n > kMaxCanonicalOrder) throw OrderTooLarge("row_major_code: order exceeds 8");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) code = (code << 1) | (a.get(i, j) ? 1u : 0u);
  return code;
}

BoolMatrix from_row_major_code(std::uint64_t code, std::size_t n) {
  if (n > kMaxCanonicalOrder) throw OrderTooLarge("from_row_major_code: order exceeds 8");
  BoolMatrix a(n);
  const std::size_t bits = n * n;
  for (std::size_t b = 0; b < bits; ++b)
    if ((code >> (bits - 1 - b)) & 1u) a.set(b / n, b % n);
  return a;
}

BoolMatrix canonical_form(const BoolMatrix& a) {
  const std::size_t n = a.order();
  if (n > kMaxCanonicalOrder) throw OrderTooLarge("canonical_form: order exceeds 8");
  const int order = static_cast<int>(n);
  return from_row_major_code(canonical_code_generic(packed::from_bool_matrix(a), order), n);
}

CodeRange shard_range(int n, ShardSpec shard) {
  if (n < 1 || n > 6) throw SearchError("shard_range: order must be between 1 and 6");
  if (shard.count == 0 || shard.index >= shard.count)
    throw SearchError("shard_range: need 0 <= index < count");
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  if (shard.count > total) throw SearchError("shard_range: more shards than matrices");
  // total * index / count without overflow: total is a power of two <= 2^36.
  auto boundary = [&](std::uint64_t idx) {
    const unsigned __int128 v = static_cast<unsigned __int128>(total) * idx / shard.count;
    return static_cast<std::uint64_t>(v);
  };
  return {boundary(shard.index), boundary(shard.index + 1)};
}

int search_cap(int n) {
  return static_cast<int>(std::max<std::int64_t>(g_of(n) + n, n));
}

SearchReport enumerate_s(int n, ShardSpec shard, const SearchOptions& options) {
  check_search_order(n, options);
  const auto started = std::chrono::steady_clock::now();
  const CodeRange range = shard_range(n, shard);
  const int cap = search_cap(n);
  const CanonicalTables tables(n);

  const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk_size, 1);
  const std::uint64_t span = range.end - range.begin;
  const std::size_t chunks = static_cast<std::size_t>((span + chunk - 1) / chunk);
  std::vector<ChunkResult> results(chunks);
  parallel_for(chunks, options.threads, [&](std::size_t c) {
    const std::uint64_t begin = range.begin + c * chunk;
    const std::uint64_t end = std::min(range.end, begin + chunk);
    scan_chunk(n, cap, tables, begin, end, results[c]);
  });

  SearchReport report;
  report.n = n;
  report.shard_count = shard.count;
  report.shards = {shard.index};
  std::vector<std::uint64_t> codes;
  for (const auto& r : results) report.s_value = std::max(report.s_value, r.max_theta);
  for (const auto& r : results) {
    report.infinite_count += r.infinite;
    report.matrices_scanned += r.scanned;
    for (std::size_t t = 0; t < r.histogram.size(); ++t)
      if (r.histogram[t] != 0) report.theta_histogram[static_cast<std::int64_t>(t)] += r.histogram[t];
    if (r.max_theta == report.s_value && report.s_value > 0)
      codes.insert(codes.end(), r.codes.begin(), r.codes.end());
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  report.extremal_matrices = matrices_from_codes(codes, n);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

SearchReport merge_reports(std::span<const SearchReport> parts) {
  if (parts.empty()) throw SearchError("merge_reports: nothing to merge");
  SearchReport merged;
  merged.n = parts.front().n;
  merged.shard_count = parts.front().shard_count;
  std::set<std::uint64_t> shards;
  for (const auto& part : parts) {
    if (part.n != merged.n || part.shard_count != merged.shard_count)
      throw SearchError("merge_reports: parts disagree on order or shard count");
    for (auto s : part.shards)
      if (!shards.insert(s).second)
        throw SearchError("merge_reports: shard " + std::to_string(s) + " appears twice");
    merged.s_value = std::max(merged.s_value, part.s_value);
  }
  std::vector<std::uint64_t> codes;
  for (const auto& part : parts) {
    merged.infinite_count += part.infinite_count;
    merged.matrices_scanned += part.matrices_scanned;
    merged.elapsed_seconds += part.elapsed_seconds;
    for (const auto& [t, c] : part.theta_histogram) merged.theta_histogram[t] += c;
    if (part.s_value == merged.s_value)
      for (const auto& m : part.extremal_matrices) codes.push_back(row_major_code(m));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  merged.extremal_matrices = matrices_from_codes(codes, merged.n);
  merged.shards.assign(shards.begin(), shards.end());
  return merged;
}

std::string to_json(const SearchReport& report, bool include_run_metadata) {
  json j;
  j["n"] = report.n;
  j["s_value"] = report.s_value;
  json mats = json::array();
  for (const auto& m : report.extremal_matrices) mats.push_back(m.to_strings());
  j["extremal_matrices"] = std::move(mats);
  json hist = json::array();
  for (const auto& [t, c] : report.theta_histogram) hist.push_back({t, c});
  j["theta_histogram"] = std::move(hist);
  j["infinite_count"] = report.infinite_count;
  j["matrices_scanned"] = report.matrices_scanned;
  if (include_run_metadata) {
    j["shard_count"] = report.shard_count;
    j["shards"] = report.shards;
    j["elapsed_seconds"] = report.elapsed_seconds;
  }
  return j.dump(2);
}

SearchReport search_report_from_json(const std::string& text) {
  SearchReport r;
  try {
    const json j = json::parse(text);
    r.n = j.at("n").get<int>();
    r.s_value = j.at("s_value").get<std::int64_t>();
    for (const auto& rows : j.at("extremal_matrices")) {
      const auto strings = rows.get<std::vector<std::string>>();
      r.extremal_matrices.push_back(BoolMatrix::from_rows(std::span<const std::string>(strings)));
    }
    for (const auto& entry : j.at("theta_histogram"))
      r.theta_histogram[entry.at(0).get<std::int64_t>()] = entry.at(1).get<std::uint64_t>();
    r.infinite_count = j.at("infinite_count").get<std::uint64_t>();
    r.matrices_scanned = j.at("matrices_scanned").get<std::uint64_t>();
    if (j.contains("shard_count")) r.shard_count = j.at("shard_count").get<std::uint64_t>();
    if (j.contains("shards")) r.shards = j.at("shards").get<std::vector<std::uint64_t>>();
    if (j.contains("elapsed_seconds")) r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  } catch (const json::exception& e) {
    throw SearchError(std::string("search report: malformed JSON: ") + e.what());
  }
  return r;
}

std::string checkpoint_file_name(ShardSpec shard) {
  return "shard-" + std::to_string(shard.index) + "-of-" + std::to_string(shard.count) + ".json";
}

namespace {

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content << '\n';
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

SearchReport run_search(int n, std::uint64_t shard_count, const SearchOptions& options,
                        const std::optional<std::filesystem::path>& resume_dir,
                        std::optional<std::uint64_t> only_shard) {
  check_search_order(n, options);
  if (shard_count == 0) throw SearchError("run_search: shard count must be positive");
  if (only_shard && *only_shard >= shard_count)
    throw SearchError("run_search: shard index out of range");
  const auto started = std::chrono::steady_clock::now();
  if (resume_dir) std::filesystem::create_directories(*resume_dir);

  std::vector<SearchReport> parts;
  const std::uint64_t first = only_shard.value_or(0);
  const std::uint64_t last = only_shard ? *only_shard + 1 : shard_count;
  for (std::uint64_t idx = first; idx < last; ++idx) {
    const ShardSpec shard{idx, shard_count};
    if (resume_dir) {
      const auto path = *resume_dir / checkpoint_file_name(shard);
      if (std::filesystem::exists(path)) {
        SearchReport loaded = search_report_from_json(read_file(path));
        if (loaded.n != n || loaded.shard_count != shard_count ||
            loaded.shards != std::vector<std::uint64_t>{idx})
          throw SearchError("checkpoint " + path.string() + " does not match this run");
        parts.push_back(std::move(loaded));
        continue;
      }
      parts.push_back(enumerate_s(n, shard, options));
      write_atomically(path, to_json(parts.back(), true));
    } else {
      parts.push_back(enumerate_s(n, shard, options));
    }
  }
  SearchReport merged = merge_reports(parts);
  merged.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return merged;
}

// ---------------------------------------------------------------------------
// Walk enumeration oracle

std::optional<int> walk_enumeration_theta(const BoolMatrix& a, int max_length) {
  const std::size_t n = a.order();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (a.get(u, v)) succ[u].push_back(v);

  std::vector<int> ends(n);
  // Depth-first over all walks of exactly `length` arcs from `start`.
  auto count_from = [&](std::size_t start, int length) {
    std::fill(ends.begin(), ends.end(), 0);
    struct Frame {
      std::size_t vertex;
      std::size_t next;
      int depth;
    };
    std::vector<Frame> stack{{start, 0, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.depth == length) {
        ++ends[f.vertex];
        stack.pop_back();
        continue;
      }
      if (f.next == succ[f.vertex].size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t w = succ[f.vertex][f.next++];
      stack.push_back({w, 0, f.depth + 1});
    }
    return std::any_of(ends.begin(), ends.end(), [](int c) { return c >= 2; });
  };

  for (int length = 1; length <= max_length; ++length)
    for (std::size_t i = 0; i < n; ++i)
      if (count_from(i, length)) return length - 1;
  return std::nullopt;
}

bool cross_check_small(int n) {
  if (n < 1 || n > 4) throw SearchError("cross_check_small: order must be between 1 and 4");
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const std::uint64_t chunk = 4096;
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::atomic<bool> agree{true};
  const int horizon = n * n + n;
  parallel_for(chunks, 0, [&](std::size_t c) {
    const std::uint64_t begin = c * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    for (std::uint64_t code = begin; code < end && agree.load(std::memory_order_relaxed); ++code) {
      const BoolMatrix a = from_row_major_code(code, static_cast<std::size_t>(n));
      const auto engine = theta_of(stable_index(a, HorizonPolicy::theorem_bound()));
      const auto oracle = walk_enumeration_theta(a, horizon);
      const auto oracle64 = oracle ? std::optional<std::int64_t>(*oracle) : std::nullopt;
      if (engine != oracle64) agree = false;
    }
  });
  return agree;
}

}  // namespace stix
