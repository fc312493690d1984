#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "stix/bit_matrix.hpp"
#include "stix/digraph.hpp"

namespace stix {

// Malformed input; line is 1-based (0 when no line applies).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Matrix file:
//   n
//   n lines of exactly n characters from {0,1}
//   optional trailing lines beginning with '#'
BoolMatrix parse_matrix(std::istream& in);
BoolMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const BoolMatrix& a, const std::vector<std::string>& comments = {});

// Edge list file:
//   n m
//   m lines "u v", 1-based, no duplicates
Digraph parse_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Digraph& d);

}  // namespace stix
