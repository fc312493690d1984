#include "stix/digraph.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace stix {

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  for (const auto& [u, v] : arcs_) {
    if (u >= n_ || v >= n_)
      throw std::invalid_argument("Digraph: arc (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range");
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
    throw std::invalid_argument("Digraph: duplicate arc");
}

bool Digraph::has_arc(std::size_t u, std::size_t v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

bool Digraph::add_arc(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("Digraph::add_arc: vertex out of range");
  const Arc arc{u, v};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), arc);
  if (it != arcs_.end() && *it == arc) return false;
  arcs_.insert(it, arc);
  return true;
}

std::vector<std::size_t> Digraph::out_degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& arc : arcs_) ++deg[arc.first];
  return deg;
}

std::vector<std::size_t> Digraph::in_degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& arc : arcs_) ++deg[arc.second];
  return deg;
}

Digraph from_matrix(const BoolMatrix& a) {
  const std::size_t n = a.order();
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.get(i, j)) arcs.emplace_back(i, j);
  return Digraph(n, std::move(arcs));
}

BoolMatrix to_matrix(const Digraph& d) {
  BoolMatrix a(d.vertex_count());
  for (const auto& [u, v] : d.arcs()) a.set(u, v);
  return a;
}

BoolMatrix circulant(std::size_t n) {
  BoolMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) c.set(i, (i + 1) % n);
  return c;
}

GlassesDigraph build_glasses(std::size_t p, std::size_t k, std::size_t q) {
  if (p < 1 || q < 1 || k < 2)
    throw std::invalid_argument("build_glasses: need p >= 1, q >= 1, k >= 2");
  GlassesSpec spec;
  spec.p = p;
  spec.k = k;
  spec.q = q;
  const std::size_t n = spec.vertex_count();
  const std::size_t right = p + k - 2;

  std::vector<Arc> arcs;
  arcs.reserve(spec.arc_count());
  for (std::size_t i = 0; i < p; ++i) arcs.emplace_back(i, (i + 1) % p);
  for (std::size_t i = 0; i < q; ++i) arcs.emplace_back(right + i, right + (i + 1) % q);

  std::size_t prev = 0;
  for (std::size_t v = p; v < right; ++v) {
    arcs.emplace_back(prev, v);
    spec.path_vertices.push_back(v);
    prev = v;
  }
  arcs.emplace_back(prev, right);
  spec.left_attach = 0;
  spec.right_attach = right;
  return {Digraph(n, std::move(arcs)), std::move(spec)};
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Digraph& d, const Digraph& h)
      : n_(d.vertex_count()), da_(to_matrix(d)), ha_(to_matrix(h)) {
    const auto dout = d.out_degrees(), din = d.in_degrees();
    const auto hout = h.out_degrees(), hin = h.in_degrees();
    for (std::size_t v = 0; v < n_; ++v) {
      dsig_.emplace_back(dout[v], din[v], da_.get(v, v));
      hsig_.emplace_back(hout[v], hin[v], ha_.get(v, v));
    }
    // Visit d's vertices in BFS order (ignoring direction) so each new vertex
    // is adjacent to an already mapped one when possible.
    std::vector<bool> seen(n_, false);
    for (std::size_t root = 0; root < n_; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      order_.push_back(root);
      for (std::size_t head = order_.size() - 1; head < order_.size(); ++head) {
        const std::size_t u = order_[head];
        for (std::size_t w = 0; w < n_; ++w) {
          if (!seen[w] && (da_.get(u, w) || da_.get(w, u))) {
            seen[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
  }

  bool run() {
    auto ds = dsig_, hs = hsig_;
    std::sort(ds.begin(), ds.end());
    std::sort(hs.begin(), hs.end());
    if (ds != hs) return false;
    image_.assign(n_, 0);
    used_.assign(n_, false);
    return extend(0);
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t u = order_[depth];
    for (std::size_t cand = 0; cand < n_; ++cand) {
      if (used_[cand] || hsig_[cand] != dsig_[u]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < depth && ok; ++prev) {
        const std::size_t w = order_[prev];
        ok = da_.get(u, w) == ha_.get(cand, image_[w]) && da_.get(w, u) == ha_.get(image_[w], cand);
      }
      if (!ok) continue;
      image_[u] = cand;
      used_[cand] = true;
      if (extend(depth + 1)) return true;
      used_[cand] = false;
    }
    return false;
  }

  using Signature = std::tuple<std::size_t, std::size_t, bool>;
  std::size_t n_;
  BoolMatrix da_, ha_;
  std::vector<Signature> dsig_, hsig_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

bool is_isomorphic(const Digraph& d, const Digraph& h) {
  const std::size_t n = std::max(d.vertex_count(), h.vertex_count());
  if (n > kMaxIsomorphismOrder)
    throw OrderTooLarge("is_isomorphic: order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxIsomorphismOrder));
  if (d.vertex_count() != h.vertex_count() || d.arc_count() != h.arc_count()) return false;
  if (n == 0) return true;
  return IsomorphismSearch(d, h).run();
}

// ---------------------------------------------------------------------------
// Recognition

std::optional<GlassesSpec> recognize_glasses(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n < 2 || d.arc_count() != n + 1) return std::nullopt;

  const BoolMatrix a = to_matrix(d);
  const auto blocks = condensation(a);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(n, kNone);
  std::vector<std::size_t> cycles;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].is_single_cycle) {
      cycles.push_back(b);
    } else if (blocks[b].vertices.size() != 1) {
      return std::nullopt;
    }
    for (auto v : blocks[b].vertices) block_of[v] = b;
  }
  if (cycles.size() != 2) return std::nullopt;

  auto on_cycle = [&](std::size_t v) {
    return block_of[v] == cycles[0] || block_of[v] == cycles[1];
  };

  // Cross arcs: everything outside the two cycles.
  std::vector<std::size_t> cross_out(blocks.size(), 0), cross_in(blocks.size(), 0);
  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  std::size_t cross_count = 0;
  std::optional<Arc> first_cross;
  for (const auto& [u, v] : d.arcs()) {
    if (block_of[u] == block_of[v] && on_cycle(u)) continue;
    ++cross_count;
    ++cross_out[block_of[u]];
    ++cross_in[block_of[v]];
    ++out_deg[u];
    ++in_deg[v];
    if (on_cycle(u) && !first_cross) first_cross = Arc{u, v};
  }

  std::size_t left = kNone, right = kNone;
  for (auto c : cycles) {
    if (cross_out[c] == 1 && cross_in[c] == 0) left = c;
    if (cross_out[c] == 0 && cross_in[c] == 1) right = c;
  }
  if (left == kNone || right == kNone || left == right || !first_cross) return std::nullopt;

  GlassesSpec spec;
  spec.p = blocks[left].vertices.size();
  spec.q = blocks[right].vertices.size();
  spec.left_attach = first_cross->first;
  if (block_of[spec.left_attach] != left) return std::nullopt;

  std::size_t v = first_cross->second;
  while (block_of[v] != right) {
    if (on_cycle(v) || in_deg[v] != 1 || out_deg[v] != 1) return std::nullopt;
    if (spec.path_vertices.size() >= n) return std::nullopt;
    spec.path_vertices.push_back(v);
    std::size_t next = kNone;
    for (std::size_t w = 0; w < n; ++w)
      if (a.get(v, w)) next = w;
    v = next;
  }
  spec.right_attach = v;
  spec.k = spec.path_vertices.size() + 2;

  if (spec.vertex_count() != n || cross_count != spec.k - 1) return std::nullopt;
  return spec;
}

}  // namespace stix
