#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "stix/bit_matrix.hpp"

namespace stix {

// A^a == A^b with every power up to A^b a 0-1 matrix; the power sequence is
// then periodic and never leaves M_n{0,1}.
struct PowerCycle {
  std::int64_t first = 0;
  std::int64_t second = 0;
  friend bool operator==(const PowerCycle&, const PowerCycle&) = default;
};

// Every power through A^(horizon + 1) is 0-1.
struct BoundExceeded {
  std::int64_t horizon = 0;
  friend bool operator==(const BoundExceeded&, const BoundExceeded&) = default;
};

struct FiniteIndex {
  std::int64_t theta = 0;
  // Smallest (i, j), row-major, 0-based, with A^(theta+1)(i, j) >= 2.
  std::pair<std::size_t, std::size_t> witness{0, 0};
  friend bool operator==(const FiniteIndex&, const FiniteIndex&) = default;
};

struct InfiniteIndex {
  std::variant<BoundExceeded, PowerCycle> certificate;
  friend bool operator==(const InfiniteIndex&, const InfiniteIndex&) = default;
};

using StableIndexOutcome = std::variant<FiniteIndex, InfiniteIndex>;

inline bool is_finite(const StableIndexOutcome& o) { return std::holds_alternative<FiniteIndex>(o); }
inline std::optional<std::int64_t> theta_of(const StableIndexOutcome& o) {
  if (const auto* f = std::get_if<FiniteIndex>(&o)) return f->theta;
  return std::nullopt;
}

class HorizonPolicy {
 public:
  enum class Mode { TheoremBound, ExplicitCap, CycleDetect };

  static HorizonPolicy theorem_bound() { return HorizonPolicy(Mode::TheoremBound, 0); }
  static HorizonPolicy cycle_detect() { return HorizonPolicy(Mode::CycleDetect, 0); }
  // Throws std::invalid_argument if cap < 1.
  static HorizonPolicy explicit_cap(std::int64_t cap);

  Mode mode() const noexcept { return mode_; }
  std::int64_t cap() const noexcept { return cap_; }

 private:
  HorizonPolicy(Mode m, std::int64_t cap) : mode_(m), cap_(cap) {}
  Mode mode_;
  std::int64_t cap_;
};

// CycleDetect stored more than its memory cap without a verdict.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest finite stable index attainable at order n: the tabulated values
// 1, 3, 4, 6, 7 for n = 2..6, and g(n) from n = 7 on. Throws for n < 2.
std::int64_t max_finite_theta(std::int64_t n);

// Powers stored by CycleDetect before it gives up.
std::size_t cycle_detect_limit(std::size_t n);

StableIndexOutcome stable_index(const BoolMatrix& a,
                                const HorizonPolicy& policy = HorizonPolicy::theorem_bound());

class InsufficientWalks : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct WalkPair {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

// The two lexicographically smallest walks of length `len` from i to j.
// Throws InsufficientWalks when fewer than two exist.
WalkPair witness_walks(const BoolMatrix& a, std::size_t i, std::size_t j, std::size_t len);

struct SpectralReport {
  std::int64_t theta = 0;
  double rho_estimate = 0.0;
  double bound = 0.0;  // n^(1/theta)
  bool satisfied = false;
};

// Spectral radius from power iteration on A + I, one strong component at a
// time. The result is the Collatz-Wielandt upper bound at stopping time, so
// it never undershoots rho(A) (up to rounding); it is within `tolerance` of
// rho(A) once the iteration converges.
double spectral_radius_estimate(const BoolMatrix& a, int max_iterations = 10000,
                                double tolerance = 1e-9);

// Throws std::invalid_argument when the stable index is infinite.
SpectralReport spectral_bound_check(const BoolMatrix& a);

// ---------------------------------------------------------------------------
// Allocation-free kernel for n <= 8: row i of the matrix lives in byte i,
// column j in bit j of that byte.

namespace packed {

using Matrix8 = std::uint64_t;

inline constexpr int kMaxOrder = 8;

inline bool get(Matrix8 m, int i, int j) { return (m >> (8 * i + j)) & 1u; }
inline std::uint8_t row(Matrix8 m, int i) { return static_cast<std::uint8_t>(m >> (8 * i)); }

Matrix8 from_bool_matrix(const BoolMatrix& a);
BoolMatrix to_bool_matrix(Matrix8 m, int n);

// Saturating product of two 0-1 matrices; `overflow` receives the >= 2 plane.
inline Matrix8 capped_product(Matrix8 a, Matrix8 b, int n, Matrix8& overflow) {
  Matrix8 ones = 0;
  Matrix8 twos = 0;
  for (int i = 0; i < n; ++i) {
    std::uint8_t one = 0;
    std::uint8_t two = 0;
    std::uint8_t bits = row(a, i);
    while (bits != 0) {
      const int k = __builtin_ctz(bits);
      bits &= static_cast<std::uint8_t>(bits - 1);
      const std::uint8_t r = row(b, k);
      two |= one & r;
      one |= r;
    }
    ones |= Matrix8{one} << (8 * i);
    twos |= Matrix8{two} << (8 * i);
  }
  overflow = twos;
  return ones;
}

// theta if some power up to A^(cap+1) has an entry >= 2, nullopt otherwise.
std::optional<int> stable_index_capped(Matrix8 a, int n, int cap);

// Exact verdict by hashing boolean powers: theta, or nullopt for infinity.
// Throws InconclusiveError past cycle_detect_limit(n) stored powers.
std::optional<int> stable_index_exact(Matrix8 a, int n);

}  // namespace packed

}  // namespace stix
