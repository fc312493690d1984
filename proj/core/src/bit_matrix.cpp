#include "stix/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace stix {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_same_order(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": order " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

template <typename F>
void for_each_bit(std::span<const std::uint64_t> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const auto b = static_cast<std::size_t>(std::countr_zero(bits));
      f(w * 64 + b);
      bits &= bits - 1;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BoolMatrix

BoolMatrix::BoolMatrix(std::size_t n) : n_(n), stride_(words_for(n)), words_(n * stride_, 0) {
  if (n == 0) throw std::invalid_argument("BoolMatrix: order must be at least 1");
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::all_ones(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j);
  return m;
}

BoolMatrix BoolMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> copy(rows.begin(), rows.end());
  return from_rows(std::span<const std::string>(copy));
}

BoolMatrix BoolMatrix::from_rows(std::span<const std::string> rows) {
  BoolMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("BoolMatrix::from_rows: row " + std::to_string(i) +
                                  " has wrong length");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1')
        throw std::invalid_argument("BoolMatrix::from_rows: invalid character");
      m.set(i, j, c == '1');
    }
  }
  return m;
}

std::size_t BoolMatrix::count_ones() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BoolMatrix::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BoolMatrix::hash() const noexcept {
  // FNV-1a over the words, seeded with the order.
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::vector<std::string> BoolMatrix::to_strings() const {
  std::vector<std::string> out(n_, std::string(n_, '0'));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) out[i][j] = '1';
  return out;
}

// ---------------------------------------------------------------------------
// CappedMatrix

CappedMatrix::CappedMatrix(std::size_t n) : at_least_one_(n), at_least_two_(n) {}

CappedMatrix::CappedMatrix(const BoolMatrix& m) : at_least_one_(m), at_least_two_(m.order()) {}

void CappedMatrix::set(std::size_t i, std::size_t j, int value) {
  if (value < 0 || value > 2) throw std::invalid_argument("CappedMatrix: entry must be 0, 1 or 2");
  at_least_one_.set(i, j, value >= 1);
  at_least_two_.set(i, j, value >= 2);
}

std::optional<std::pair<std::size_t, std::size_t>> CappedMatrix::first_overflow() const {
  const std::size_t n = order();
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = at_least_two_.row(i);
    for (std::size_t w = 0; w < r.size(); ++w) {
      if (r[w] != 0)
        return std::pair{i, w * 64 + static_cast<std::size_t>(std::countr_zero(r[w]))};
    }
  }
  return std::nullopt;
}

BoolMatrix CappedMatrix::to_bool() const {
  if (has_overflow()) throw std::logic_error("CappedMatrix::to_bool: matrix has entries >= 2");
  return at_least_one_;
}

CappedMatrix capped_product(const CappedMatrix& a, const CappedMatrix& b) {
  check_same_order(a.order(), b.order(), "capped_product");
  const std::size_t n = a.order();
  const std::size_t stride = a.at_least_one_.words_per_row();
  CappedMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto one = c.at_least_one_.row(i);
    auto two = c.at_least_two_.row(i);
    const auto a_two = a.at_least_two_.row(i);
    for_each_bit(a.at_least_one_.row(i), [&](std::size_t k) {
      const auto b_one = b.at_least_one_.row(k);
      const auto b_two = b.at_least_two_.row(k);
      const bool doubled = (a_two[k >> 6] >> (k & 63)) & 1u;
      for (std::size_t w = 0; w < stride; ++w) {
        two[w] |= (doubled ? b_one[w] : (b_two[w] | (one[w] & b_one[w])));
        one[w] |= b_one[w];
      }
    });
  }
  return c;
}

CappedMatrix capped_product(const BoolMatrix& a, const BoolMatrix& b) {
  check_same_order(a.order(), b.order(), "capped_product");
  const std::size_t n = a.order();
  const std::size_t stride = a.words_per_row();
  CappedMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto one = c.at_least_one_.row(i);
    auto two = c.at_least_two_.row(i);
    for_each_bit(a.row(i), [&](std::size_t k) {
      const auto br = b.row(k);
      for (std::size_t w = 0; w < stride; ++w) {
        two[w] |= one[w] & br[w];
        one[w] |= br[w];
      }
    });
  }
  return c;
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  check_same_order(a.order(), b.order(), "bool_product");
  const std::size_t n = a.order();
  const std::size_t stride = a.words_per_row();
  BoolMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto out = c.row(i);
    for_each_bit(a.row(i), [&](std::size_t k) {
      const auto br = b.row(k);
      for (std::size_t w = 0; w < stride; ++w) out[w] |= br[w];
    });
  }
  return c;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (auto v : map_) {
    if (v >= map_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::cyclic_shift(std::size_t n, std::size_t shift) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = (i + shift) % n;
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

BoolMatrix permute(const BoolMatrix& a, const Permutation& p) {
  check_same_order(a.order(), p.order(), "permute");
  const std::size_t n = a.order();
  BoolMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.get(p(i), p(j))) out.set(i, j);
  return out;
}

BoolMatrix transpose(const BoolMatrix& a) {
  const std::size_t n = a.order();
  BoolMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for_each_bit(a.row(i), [&](std::size_t j) { out.set(j, i); });
  return out;
}

// ---------------------------------------------------------------------------
// Exact counts

CountMatrix::CountMatrix(const BoolMatrix& m) : CountMatrix(m.order()) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (m.get(i, j)) (*this)(i, j) = 1;
}

bool CountMatrix::is_zero_one() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& v) { return v <= 1; });
}

CountMatrix operator*(const CountMatrix& a, const CountMatrix& b) {
  check_same_order(a.order(), b.order(), "CountMatrix product");
  const std::size_t n = a.order();
  CountMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

CountMatrix exact_power(const BoolMatrix& a, std::size_t k) {
  const std::size_t n = a.order();
  CountMatrix result(n);
  for (std::size_t i = 0; i < n; ++i) result(i, i) = 1;
  const CountMatrix base(a);
  for (std::size_t step = 0; step < k; ++step) result = result * base;
  return result;
}

BigInt exact_walk_count(const BoolMatrix& a, std::size_t k, std::size_t i, std::size_t j) {
  const std::size_t n = a.order();
  if (i >= n || j >= n) throw std::out_of_range("exact_walk_count: vertex out of range");
  // counts[v] = number of walks of the current length from i to v
  std::vector<BigInt> counts(n);
  counts[i] = 1;
  std::vector<BigInt> next(n);
  for (std::size_t step = 0; step < k; ++step) {
    std::fill(next.begin(), next.end(), BigInt{0});
    for (std::size_t v = 0; v < n; ++v) {
      if (counts[v] == 0) continue;
      for_each_bit(a.row(v), [&](std::size_t w) { next[w] += counts[v]; });
    }
    counts.swap(next);
  }
  return counts[j];
}

// ---------------------------------------------------------------------------
// Condensation (iterative Tarjan)

std::vector<CondensationBlock> condensation(const BoolMatrix& a) {
  const std::size_t n = a.order();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;  // reverse topological order
  std::size_t counter = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t next_col;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      const std::size_t v = f.vertex;
      bool descended = false;
      while (f.next_col < n) {
        const std::size_t w = f.next_col++;
        if (!a.get(v, w)) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;

      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  std::reverse(components.begin(), components.end());
  std::vector<CondensationBlock> blocks;
  blocks.reserve(components.size());
  for (auto& comp : components) {
    CondensationBlock block;
    std::size_t arcs = 0;
    bool degrees_ok = true;
    for (auto u : comp) {
      std::size_t out_deg = 0, in_deg = 0;
      for (auto w : comp) {
        out_deg += a.get(u, w);
        in_deg += a.get(w, u);
      }
      arcs += out_deg;
      if (out_deg != 1 || in_deg != 1) degrees_ok = false;
    }
    block.is_single_cycle = degrees_ok && arcs == comp.size();
    block.vertices = std::move(comp);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_irreducible(const BoolMatrix& a) {
  if (a.order() == 1) return a.get(0, 0);
  return condensation(a).size() == 1;
}

}  // namespace stix
