#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "stix/digraph.hpp"
#include "stix/io.hpp"
#include "stix/random.hpp"

using namespace stix;

namespace {

std::size_t parse_error_line(const std::string& text, bool edges = false) {
  std::istringstream in(text);
  try {
    if (edges)
      parse_edge_list(in);
    else
      parse_matrix(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(MatrixFile, ParsesWithCommentsAndCrlf) {
  std::istringstream in("3\r\n010\r\n001\r\n100\r\n# a comment\n\n# more\n");
  EXPECT_EQ(parse_matrix(in), circulant(3));
}

TEST(MatrixFile, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const auto a = random_matrix(1 + t % 20, 0.4, rng);
    std::stringstream s;
    write_matrix(s, a, {"generated"});
    EXPECT_EQ(parse_matrix(s), a);
  }
}

TEST(MatrixFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 1u);
  EXPECT_EQ(parse_error_line("x\n"), 1u);
  EXPECT_EQ(parse_error_line("0\n"), 1u);
  EXPECT_EQ(parse_error_line("3\n010\n01\n100\n"), 3u);
  EXPECT_EQ(parse_error_line("3\n010\n0a1\n100\n"), 3u);
  EXPECT_EQ(parse_error_line("2\n01\n"), 3u);
  EXPECT_EQ(parse_error_line("2\n01\n10\n11\n"), 4u);
  EXPECT_EQ(parse_error_line("2\n01\n10\n# ok\nstray\n"), 5u);
  EXPECT_EQ(parse_error_line("3\n0 1 0\n001\n100\n"), 2u);
}

TEST(EdgeList, ParseAndRoundTrip) {
  std::istringstream in("3 3\n1 2\n2 3\n3 1\n");
  const auto d = parse_edge_list(in);
  EXPECT_EQ(to_matrix(d), circulant(3));
  std::stringstream s;
  write_edge_list(s, build_glasses(4, 3, 5).digraph);
  EXPECT_EQ(parse_edge_list(s), build_glasses(4, 3, 5).digraph);
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(parse_error_line("3\n", true), 1u);
  EXPECT_EQ(parse_error_line("3 2\n1 2\n1 2\n", true), 3u);
  EXPECT_EQ(parse_error_line("3 1\n0 2\n", true), 2u);
  EXPECT_EQ(parse_error_line("3 1\n1 4\n", true), 2u);
  EXPECT_EQ(parse_error_line("3 2\n1 2\n", true), 3u);
  EXPECT_EQ(parse_error_line("3 1\n1 2 3\n", true), 2u);
}

TEST(Files, MissingFileIsParseError) {
  EXPECT_THROW(read_matrix_file("/nonexistent/matrix.txt"), ParseError);
}
