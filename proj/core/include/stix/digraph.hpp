#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stix/bit_matrix.hpp"

namespace stix {

using Arc = std::pair<std::size_t, std::size_t>;

// Digraph on vertices {0..n-1}. Loops allowed, parallel arcs not.
// Arcs are kept sorted so two digraphs with the same arc set compare equal.
class Digraph {
 public:
  explicit Digraph(std::size_t n) : n_(n) {}
  // Throws std::invalid_argument on out-of-range endpoints or duplicate arcs.
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  bool has_arc(std::size_t u, std::size_t v) const;
  // Returns false if the arc was already present.
  bool add_arc(std::size_t u, std::size_t v);

  std::vector<std::size_t> out_degrees() const;
  std::vector<std::size_t> in_degrees() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_;
  std::vector<Arc> arcs_;
};

Digraph from_matrix(const BoolMatrix& a);
BoolMatrix to_matrix(const Digraph& d);

// Adjacency matrix of the directed n-cycle 0 -> 1 -> ... -> n-1 -> 0.
BoolMatrix circulant(std::size_t n);

// Two vertex-disjoint cycles C_p and C_q joined by a (k-1)-arc path from a
// vertex of C_p to a vertex of C_q. k = 2 is the glasses digraph g(p, q).
struct GlassesSpec {
  std::size_t p = 0;
  std::size_t k = 2;
  std::size_t q = 0;
  std::size_t left_attach = 0;               // path start, on C_p
  std::size_t right_attach = 0;              // path end, on C_q
  std::vector<std::size_t> path_vertices;    // the k-2 interior vertices, in order

  std::size_t vertex_count() const noexcept { return p + q + k - 2; }
  std::size_t arc_count() const noexcept { return p + q + k - 1; }
  bool same_shape(const GlassesSpec& other) const noexcept {
    return p == other.p && k == other.k && q == other.q;
  }
  friend bool operator==(const GlassesSpec&, const GlassesSpec&) = default;
};

struct GlassesDigraph {
  Digraph digraph;
  GlassesSpec spec;
};

// Canonical labeling: 0..p-1 is C_p (0 -> 1 -> ... -> p-1 -> 0), then the
// k-2 path vertices, then C_q. The path leaves vertex 0 and enters the first
// C_q vertex. Throws std::invalid_argument unless p, q >= 1 and k >= 2.
GlassesDigraph build_glasses(std::size_t p, std::size_t k, std::size_t q);

class OrderTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxIsomorphismOrder = 12;

// Exact backtracking search; throws OrderTooLarge above kMaxIsomorphismOrder.
bool is_isomorphic(const Digraph& d, const Digraph& h);

// Structural recognition of g(p, k, q) at any order.
std::optional<GlassesSpec> recognize_glasses(const Digraph& d);

}  // namespace stix
