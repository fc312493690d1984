#include "stix/stable_index.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "stix/extremal.hpp"

namespace stix {

HorizonPolicy HorizonPolicy::explicit_cap(std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("HorizonPolicy: cap must be at least 1");
  return HorizonPolicy(Mode::ExplicitCap, cap);
}

std::int64_t max_finite_theta(std::int64_t n) {
  static constexpr std::array<std::int64_t, 5> kSmall{1, 3, 4, 6, 7};  // n = 2..6
  if (n < 2) throw std::invalid_argument("max_finite_theta: no finite stable index below order 2");
  if (n <= 6) return kSmall[static_cast<std::size_t>(n - 2)];
  return g_of(n);
}

std::size_t cycle_detect_limit(std::size_t n) { return 4 * n * n * n; }

namespace {

StableIndexOutcome run_to_horizon(const BoolMatrix& a, std::int64_t horizon) {
  BoolMatrix power = a;
  for (std::int64_t m = 1; m <= horizon; ++m) {
    CappedMatrix next = capped_product(power, a);
    if (auto hit = next.first_overflow()) return FiniteIndex{m, *hit};
    power = next.to_bool();
  }
  return InfiniteIndex{BoundExceeded{horizon}};
}

StableIndexOutcome run_cycle_detect(const BoolMatrix& a) {
  const std::size_t limit = cycle_detect_limit(a.order());
  std::unordered_map<BoolMatrix, std::int64_t, BoolMatrixHash> seen;
  BoolMatrix power = a;
  seen.emplace(power, 1);
  for (std::int64_t m = 1;; ++m) {
    CappedMatrix next = capped_product(power, a);
    if (auto hit = next.first_overflow()) return FiniteIndex{m, *hit};
    power = next.to_bool();
    if (auto it = seen.find(power); it != seen.end())
      return InfiniteIndex{PowerCycle{it->second, m + 1}};
    if (seen.size() >= limit)
      throw InconclusiveError("cycle detection stored " + std::to_string(limit) +
                              " powers without a repeat");
    seen.emplace(power, m + 1);
  }
}

}  // namespace

StableIndexOutcome stable_index(const BoolMatrix& a, const HorizonPolicy& policy) {
  // [0] and [1] are idempotent.
  if (a.order() == 1) return InfiniteIndex{PowerCycle{1, 2}};
  switch (policy.mode()) {
    case HorizonPolicy::Mode::TheoremBound:
      return run_to_horizon(a, max_finite_theta(static_cast<std::int64_t>(a.order())));
    case HorizonPolicy::Mode::ExplicitCap:
      return run_to_horizon(a, policy.cap());
    case HorizonPolicy::Mode::CycleDetect:
      return run_cycle_detect(a);
  }
  throw std::logic_error("stable_index: unknown policy");
}

WalkPair witness_walks(const BoolMatrix& a, std::size_t i, std::size_t j, std::size_t len) {
  const std::size_t n = a.order();
  if (i >= n || j >= n) throw std::out_of_range("witness_walks: vertex out of range");

  // to_target[t][v] = number of t-walks from v to j
  std::vector<std::vector<BigInt>> to_target(len + 1, std::vector<BigInt>(n));
  to_target[0][j] = 1;
  for (std::size_t t = 1; t <= len; ++t)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (a.get(v, w)) to_target[t][v] += to_target[t - 1][w];

  if (to_target[len][i] < 2)
    throw InsufficientWalks("witness_walks: fewer than two walks of length " +
                            std::to_string(len) + " from " + std::to_string(i) + " to " +
                            std::to_string(j));

  // Unrank walks in lexicographic order of their vertex sequences.
  auto unrank = [&](BigInt rank) {
    std::vector<std::size_t> walk{i};
    std::size_t v = i;
    for (std::size_t remaining = len; remaining > 0; --remaining) {
      for (std::size_t w = 0; w < n; ++w) {
        if (!a.get(v, w)) continue;
        const BigInt& c = to_target[remaining - 1][w];
        if (rank < c) {
          v = w;
          break;
        }
        rank -= c;
      }
      walk.push_back(v);
    }
    return walk;
  };
  return {unrank(0), unrank(1)};
}

namespace {

// Collatz-Wielandt upper bound for rho(B + I), B the submatrix on `vertices`
// (strongly connected, so B + I is primitive and the ratios squeeze together).
double block_upper_bound(const BoolMatrix& a, const std::vector<std::size_t>& vertices, int max_iterations,
                         double tolerance) {
  const std::size_t m = vertices.size();
  std::vector<double> x(m, 1.0);
  std::vector<double> y(m);
  double hi = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    double lo = std::numeric_limits<double>::infinity();
    hi = 0.0;
    double peak = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      double s = x[r];
      for (std::size_t c = 0; c < m; ++c)
        if (a.get(vertices[r], vertices[c])) s += x[c];
      y[r] = s;
      lo = std::min(lo, s / x[r]);
      hi = std::max(hi, s / x[r]);
      peak = std::max(peak, s);
    }
    if (hi - lo < tolerance) break;
    for (std::size_t r = 0; r < m; ++r) x[r] = y[r] / peak;
  }
  return hi;
}

}  // namespace

double spectral_radius_estimate(const BoolMatrix& a, int max_iterations, double tolerance) {
  // rho(A) is the largest Perron root over the strong components. Working per
  // component avoids the slow 1/k convergence that several components sharing
  // the top eigenvalue would cause on the whole matrix.
  double rho = 0.0;
  for (const auto& block : condensation(a)) {
    if (block.is_single_cycle) {
      rho = std::max(rho, 1.0);
      continue;
    }
    if (block.vertices.size() == 1) continue;  // loopless singleton: rho = 0
    rho = std::max(rho, block_upper_bound(a, block.vertices, max_iterations, tolerance) - 1.0);
  }
  return rho;
}

SpectralReport spectral_bound_check(const BoolMatrix& a) {
  const auto outcome = stable_index(a, HorizonPolicy::theorem_bound());
  const auto theta = theta_of(outcome);
  if (!theta) throw std::invalid_argument("spectral_bound_check: stable index is infinite");
  SpectralReport report;
  report.theta = *theta;
  report.rho_estimate = spectral_radius_estimate(a);
  report.bound = std::pow(static_cast<double>(a.order()), 1.0 / static_cast<double>(*theta));
  report.satisfied = report.rho_estimate <= report.bound * (1.0 + 1e-9);
  return report;
}

// ---------------------------------------------------------------------------

namespace packed {

Matrix8 from_bool_matrix(const BoolMatrix& a) {
  if (a.order() > static_cast<std::size_t>(kMaxOrder))
    throw std::invalid_argument("packed::from_bool_matrix: order exceeds 8");
  Matrix8 m = 0;
  const int n = static_cast<int>(a.order());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.get(i, j)) m |= Matrix8{1} << (8 * i + j);
  return m;
}

BoolMatrix to_bool_matrix(Matrix8 m, int n) {
  BoolMatrix a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (get(m, i, j)) a.set(i, j);
  return a;
}

std::optional<int> stable_index_capped(Matrix8 a, int n, int cap) {
  Matrix8 power = a;
  Matrix8 overflow = 0;
  for (int m = 1; m <= cap; ++m) {
    power = capped_product(power, a, n, overflow);
    if (overflow != 0) return m;
  }
  return std::nullopt;
}

std::optional<int> stable_index_exact(Matrix8 a, int n) {
  if (n == 1) return std::nullopt;
  // Brent's cycle finding over the sequence of powers. The hare visits every
  // power in order, so each one is checked for an entry >= 2 exactly once.
  const std::size_t limit = cycle_detect_limit(static_cast<std::size_t>(n));
  Matrix8 tortoise = a;
  Matrix8 hare = a;
  Matrix8 overflow = 0;
  std::size_t lam = 0;
  std::size_t window = 1;
  for (std::size_t m = 1; m <= limit; ++m) {
    hare = capped_product(hare, a, n, overflow);
    if (overflow != 0) return static_cast<int>(m);
    ++lam;
    if (hare == tortoise) return std::nullopt;
    if (lam == window) {
      tortoise = hare;
      window *= 2;
      lam = 0;
    }
  }
  throw InconclusiveError("packed cycle detection exceeded its step limit");
}

}  // namespace packed

}  // namespace stix
