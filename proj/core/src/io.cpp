#include "stix/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

namespace stix {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

// Anything after the body may only be '#' comments or blank lines.
void check_trailer(LineReader& reader) {
  std::string line;
  while (reader.next(line)) {
    if (line.empty() || line.front() == '#') continue;
    throw ParseError(reader.number(), "unexpected content after the last row");
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return in;
}

}  // namespace

BoolMatrix parse_matrix(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "missing order line");
  const std::size_t n = parse_count(line, reader.number(), "matrix order");
  if (n == 0) throw ParseError(reader.number(), "matrix order must be positive");

  BoolMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!reader.next(line))
      throw ParseError(reader.number() + 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(i));
    if (line.size() != n)
      throw ParseError(reader.number(), "row has " + std::to_string(line.size()) + " characters, expected " +
                                            std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (line[j] == '1') {
        a.set(i, j);
      } else if (line[j] != '0') {
        throw ParseError(reader.number(), std::string("invalid character '") + line[j] + "'");
      }
    }
  }
  check_trailer(reader);
  return a;
}

BoolMatrix read_matrix_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const BoolMatrix& a, const std::vector<std::string>& comments) {
  out << a.order() << '\n';
  for (const auto& row : a.to_strings()) out << row << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
}

Digraph parse_edge_list(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "missing header line");
  const auto header = split_spaces(line);
  if (header.size() != 2) throw ParseError(reader.number(), "header must be 'n m'");
  const std::size_t n = parse_count(header[0], reader.number(), "vertex count");
  const std::size_t m = parse_count(header[1], reader.number(), "arc count");
  if (n == 0) throw ParseError(reader.number(), "vertex count must be positive");

  Digraph d(n);
  for (std::size_t e = 0; e < m; ++e) {
    if (!reader.next(line))
      throw ParseError(reader.number() + 1, "expected " + std::to_string(m) + " arcs, found " + std::to_string(e));
    const auto tokens = split_spaces(line);
    if (tokens.size() != 2) throw ParseError(reader.number(), "arc line must be 'u v'");
    const std::size_t u = parse_count(tokens[0], reader.number(), "vertex id");
    const std::size_t v = parse_count(tokens[1], reader.number(), "vertex id");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(reader.number(), "vertex id out of range 1.." + std::to_string(n));
    if (!d.add_arc(u - 1, v - 1)) throw ParseError(reader.number(), "duplicate arc");
  }
  check_trailer(reader);
  return d;
}

Digraph read_edge_list_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const auto& [u, v] : d.arcs()) out << (u + 1) << ' ' << (v + 1) << '\n';
}

}  // namespace stix
