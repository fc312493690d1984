#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stix {

using BigInt = boost::multiprecision::cpp_int;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Square 0-1 matrix of order n >= 1, rows packed into 64-bit words.
// Bit (j % 64) of word (j / 64) in row i holds entry (i, j). Padding bits
// beyond column n-1 are always zero.
class BoolMatrix {
 public:
  explicit BoolMatrix(std::size_t n);

  static BoolMatrix identity(std::size_t n);
  static BoolMatrix all_ones(std::size_t n);
  // Each string is one row of '0'/'1' characters.
  static BoolMatrix from_rows(std::initializer_list<std::string_view> rows);
  static BoolMatrix from_rows(std::span<const std::string> rows);

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool get(std::size_t i, std::size_t j) const {
    return (words_[i * stride_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    auto& w = words_[i * stride_ + (j >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    w = value ? (w | bit) : (w & ~bit);
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {words_.data() + i * stride_, stride_};
  }
  std::span<std::uint64_t> row(std::size_t i) {
    return {words_.data() + i * stride_, stride_};
  }

  std::size_t count_ones() const;
  bool is_zero() const;
  std::size_t hash() const noexcept;

  // Rows rendered as '0'/'1' strings.
  std::vector<std::string> to_strings() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

struct BoolMatrixHash {
  std::size_t operator()(const BoolMatrix& m) const noexcept { return m.hash(); }
};

// Square matrix over {0, 1, 2}; 2 stands for "at least 2" and is absorbing
// under capped_product. Stored as two bit planes: entries >= 1 and >= 2.
class CappedMatrix {
 public:
  explicit CappedMatrix(std::size_t n);
  explicit CappedMatrix(const BoolMatrix& m);

  std::size_t order() const noexcept { return at_least_one_.order(); }

  int get(std::size_t i, std::size_t j) const {
    return at_least_two_.get(i, j) ? 2 : (at_least_one_.get(i, j) ? 1 : 0);
  }
  void set(std::size_t i, std::size_t j, int value);

  bool has_overflow() const { return !at_least_two_.is_zero(); }
  // Smallest (i, j) in row-major order with entry 2.
  std::optional<std::pair<std::size_t, std::size_t>> first_overflow() const;
  // Lossless when has_overflow() is false; throws otherwise.
  BoolMatrix to_bool() const;

  const BoolMatrix& support() const noexcept { return at_least_one_; }
  const BoolMatrix& overflow() const noexcept { return at_least_two_; }

  friend bool operator==(const CappedMatrix&, const CappedMatrix&) = default;

 private:
  friend CappedMatrix capped_product(const CappedMatrix&, const CappedMatrix&);
  friend CappedMatrix capped_product(const BoolMatrix&, const BoolMatrix&);
  BoolMatrix at_least_one_;
  BoolMatrix at_least_two_;
};

class Permutation {
 public:
  // Throws std::invalid_argument unless `map` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<std::size_t> map);

  static Permutation identity(std::size_t n);
  // i -> (i + shift) mod n
  static Permutation cyclic_shift(std::size_t n, std::size_t shift);

  std::size_t order() const noexcept { return map_.size(); }
  std::size_t operator()(std::size_t i) const { return map_[i]; }
  Permutation inverse() const;
  std::span<const std::size_t> images() const noexcept { return map_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

// Exact integer matrix, used where walk counts must not saturate.
class CountMatrix {
 public:
  explicit CountMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  explicit CountMatrix(const BoolMatrix& m);

  std::size_t order() const noexcept { return n_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  bool is_zero_one() const;
  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<BigInt> entries_;
};

CountMatrix operator*(const CountMatrix& a, const CountMatrix& b);
// A^k over the integers; k = 0 gives the identity.
CountMatrix exact_power(const BoolMatrix& a, std::size_t k);

// Boolean semiring product.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);
// Saturating product: entry = min(2, sum_k a(i,k) b(k,j)).
CappedMatrix capped_product(const CappedMatrix& a, const CappedMatrix& b);
// Same as capped_product on the 0-1 embeddings, without building planes for the inputs.
CappedMatrix capped_product(const BoolMatrix& a, const BoolMatrix& b);

// Number of walks of length k from i to j, i.e. A^k(i, j).
BigInt exact_walk_count(const BoolMatrix& a, std::size_t k, std::size_t i, std::size_t j);

// result(i, j) = a(p(i), p(j)).
BoolMatrix permute(const BoolMatrix& a, const Permutation& p);
BoolMatrix transpose(const BoolMatrix& a);

struct CondensationBlock {
  std::vector<std::size_t> vertices;  // ascending
  bool is_single_cycle = false;       // induced subgraph is a directed cycle (a loop counts as C_1)
};

// Strongly connected components in an order that makes the block matrix
// upper triangular: every arc between distinct blocks goes forward.
std::vector<CondensationBlock> condensation(const BoolMatrix& a);

// True iff D(a) is strongly connected. [0] is reducible, [1] is irreducible.
bool is_irreducible(const BoolMatrix& a);

}  // namespace stix
