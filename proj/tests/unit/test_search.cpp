#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stix/digraph.hpp"
#include "stix/random.hpp"
#include "stix/search.hpp"
#include "stix/stable_index.hpp"

using namespace stix;
namespace fs = std::filesystem;

namespace {

// Smallest row-major code over all relabelings, by brute force.
std::uint64_t min_code(const BoolMatrix& a) {
  const std::size_t n = a.order();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code = (code << 1) | (a.get(p[i], p[j]) ? 1u : 0u);
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("stix-test-" + tag + "-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST(Codes, RoundTripAndOrder) {
  const auto a = BoolMatrix::from_rows({"10", "01"});
  EXPECT_EQ(row_major_code(a), 0b1001u);
  EXPECT_EQ(from_row_major_code(0b1001, 2), a);
  EXPECT_LT(row_major_code(BoolMatrix::from_rows({"01", "11"})), row_major_code(BoolMatrix::from_rows({"10", "00"})));
  EXPECT_THROW(row_major_code(BoolMatrix(9)), OrderTooLarge);
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  EXPECT_EQ(canonical_form(BoolMatrix::identity(5)), BoolMatrix::identity(5));
  std::mt19937_64 rng(12);
  const auto g = to_matrix(build_glasses(2, 2, 3).digraph);
  const auto canon = canonical_form(g);
  for (int t = 0; t < 20; ++t) EXPECT_EQ(canonical_form(permute(g, random_permutation(5, rng))), canon);
  const auto c3 = canonical_form(circulant(3));
  EXPECT_EQ(canonical_form(transpose(circulant(3))), c3);
}

TEST(CanonicalForm, IsMinimalCode) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_matrix(1 + t % 7, 0.4, rng);
    const auto c = canonical_form(a);
    ASSERT_EQ(row_major_code(c), min_code(a));
    ASSERT_TRUE(oracle::isomorphic(a, c));
  }
}

TEST(Shards, PartitionCodeSpace) {
  for (std::uint64_t count : {1u, 3u, 4u, 7u, 16u}) {
    std::uint64_t expect_begin = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto r = shard_range(4, {i, count});
      EXPECT_EQ(r.begin, expect_begin);
      EXPECT_LE(r.begin, r.end);
      expect_begin = r.end;
    }
    EXPECT_EQ(expect_begin, 65536u);
  }
  // Power-of-two counts split on the top bits.
  const auto r = shard_range(4, {3, 4});
  EXPECT_EQ(r.begin, 3u << 14);
  EXPECT_EQ(r.end, 4u << 14);
  EXPECT_THROW(shard_range(4, {4, 4}), SearchError);
  EXPECT_THROW(shard_range(4, {0, 0}), SearchError);
}

TEST(Enumerate, OrderTwoMatchesBruteForce) {
  const auto report = enumerate_s(2, {0, 1});
  EXPECT_EQ(report.s_value, 1);
  EXPECT_EQ(report.matrices_scanned, 16u);
  // Brute force: theta of every matrix, then the classes reaching the maximum.
  std::int64_t best = 0;
  std::set<std::uint64_t> classes;
  std::map<std::int64_t, std::uint64_t> hist;
  std::uint64_t inf = 0;
  for (std::uint64_t code = 0; code < 16; ++code) {
    const auto a = from_row_major_code(code, 2);
    const auto t = oracle::theta(a);
    if (!t) {
      ++inf;
      continue;
    }
    ++hist[*t];
    if (*t > best) classes.clear(), best = *t;
    if (*t == best) classes.insert(min_code(a));
  }
  EXPECT_EQ(report.s_value, best);
  EXPECT_EQ(report.theta_histogram, hist);
  EXPECT_EQ(report.infinite_count, inf);
  std::set<std::uint64_t> got;
  for (const auto& m : report.extremal_matrices) got.insert(row_major_code(m));
  EXPECT_EQ(got, classes);
  EXPECT_TRUE(got.count(row_major_code(BoolMatrix::all_ones(2))));
}

TEST(Enumerate, OrderThreeMatchesBruteForce) {
  const auto report = enumerate_s(3, {0, 1});
  EXPECT_EQ(report.s_value, 3);
  std::map<std::int64_t, std::uint64_t> hist;
  std::uint64_t inf = 0;
  for (std::uint64_t code = 0; code < 512; ++code) {
    const auto t = oracle::theta(from_row_major_code(code, 3));
    t ? ++hist[*t] : ++inf;
  }
  EXPECT_EQ(report.theta_histogram, hist);
  EXPECT_EQ(report.infinite_count, inf);
  for (const auto& m : report.extremal_matrices) EXPECT_EQ(theta_of(stable_index(m)), 3);
}

TEST(Enumerate, RejectsUnsupportedOrders) {
  EXPECT_THROW(enumerate_s(1, {0, 1}), SearchError);
  EXPECT_THROW(enumerate_s(7, {0, 1}), SearchError);
  EXPECT_THROW(enumerate_s(6, {0, 1}), SearchError);  // needs allow_n6
}

TEST(Merge, ShardsMatchUnsharded) {
  const auto whole = enumerate_s(3, {0, 1});
  const std::vector<SearchReport> parts{enumerate_s(3, {0, 2}), enumerate_s(3, {1, 2})};
  EXPECT_EQ(to_json(merge_reports(parts)), to_json(whole));
  const std::vector<SearchReport> single{whole};
  EXPECT_EQ(to_json(merge_reports(single)), to_json(whole));

  std::vector<SearchReport> eight;
  for (std::uint64_t i = 0; i < 8; ++i) eight.push_back(enumerate_s(4, {i, 8}));
  EXPECT_EQ(merge_reports(eight).s_value, 4);
}

TEST(Merge, RejectsInconsistentParts) {
  const std::vector<SearchReport> dup{enumerate_s(3, {0, 2}), enumerate_s(3, {0, 2})};
  EXPECT_THROW(merge_reports(dup), SearchError);
  const std::vector<SearchReport> mixed{enumerate_s(3, {0, 2}), enumerate_s(2, {1, 2})};
  EXPECT_THROW(merge_reports(mixed), SearchError);
  const std::vector<SearchReport> counts{enumerate_s(3, {0, 2}), enumerate_s(3, {1, 4})};
  EXPECT_THROW(merge_reports(counts), SearchError);
}

TEST(Merge, ChunkSizeAndThreadsDoNotChangeResult) {
  SearchOptions a;
  a.chunk_size = 1000;
  a.threads = 3;
  SearchOptions b;
  b.chunk_size = 1 << 20;
  b.threads = 1;
  EXPECT_EQ(to_json(enumerate_s(4, {0, 1}, a)), to_json(enumerate_s(4, {0, 1}, b)));
}

TEST(Json, RoundTrip) {
  const auto r = enumerate_s(3, {1, 4});
  const auto back = search_report_from_json(to_json(r, true));
  EXPECT_EQ(to_json(back, true), to_json(r, true));
  EXPECT_EQ(back.shards, std::vector<std::uint64_t>{1});
  EXPECT_EQ(back.shard_count, 4u);
  EXPECT_THROW(search_report_from_json("{not json"), SearchError);
  EXPECT_EQ(to_json(r).find("elapsed"), std::string::npos);
}

TEST(Checkpoints, ResumeGivesIdenticalReport) {
  TempDir dir("resume");
  EXPECT_EQ(checkpoint_file_name({2, 4}), "shard-2-of-4.json");
  // Finish two of four shards, then resume the whole run.
  run_search(4, 4, {}, dir.path, 0);
  run_search(4, 4, {}, dir.path, 2);
  EXPECT_TRUE(fs::exists(dir.path / "shard-0-of-4.json"));
  EXPECT_FALSE(fs::exists(dir.path / "shard-1-of-4.json"));
  const auto resumed = run_search(4, 4, {}, dir.path);
  EXPECT_TRUE(fs::exists(dir.path / "shard-3-of-4.json"));
  EXPECT_EQ(to_json(resumed), to_json(run_search(4, 1, {})));
  for (const auto& e : fs::directory_iterator(dir.path)) EXPECT_EQ(e.path().extension(), ".json");
}

TEST(Checkpoints, MismatchedCheckpointRejected) {
  TempDir dir("mismatch");
  run_search(3, 2, {}, dir.path, 0);
  fs::rename(dir.path / "shard-0-of-2.json", dir.path / "shard-1-of-2.json");
  EXPECT_THROW(run_search(3, 2, {}, dir.path), SearchError);
  std::ofstream(dir.path / "shard-1-of-2.json") << "garbage";
  EXPECT_THROW(run_search(3, 2, {}, dir.path), SearchError);
}

TEST(WalkOracle, CrossCheck) {
  EXPECT_TRUE(cross_check_small(2));
  EXPECT_TRUE(cross_check_small(3));
  EXPECT_EQ(walk_enumeration_theta(BoolMatrix::all_ones(2), 3), 1);
  EXPECT_EQ(walk_enumeration_theta(circulant(3), 12), std::nullopt);
  const auto g = to_matrix(build_glasses(2, 2, 3).digraph);
  EXPECT_EQ(walk_enumeration_theta(g, 8), oracle::theta_by_walks(g, 8));
}
