#include "stix/extremal.hpp"

#include <numeric>

#include "stix/stable_index.hpp"

namespace stix {

std::int64_t g_of(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("g_of: order must be positive");
  const std::int64_t sq = n * n;
  if (n % 2 == 1) return (sq - 1) / 4;
  if (n % 4 == 0) return (sq - 4) / 4;
  return (sq - 16) / 4;
}

std::int64_t phi(std::int64_t t) { return g_of(t) - t; }

std::string residue_case(std::int64_t n) {
  if (n % 2 == 1) return "odd";
  return n % 4 == 0 ? "0 mod 4" : "2 mod 4";
}

std::pair<std::int64_t, std::int64_t> extremal_pair(std::int64_t n) {
  if (n < 7) throw std::invalid_argument("extremal_pair: requires n >= 7");
  std::int64_t half_gap = 1;  // odd: (n+1)/2, (n-1)/2
  if (n % 2 == 0) half_gap = (n % 4 == 0) ? 2 : 4;
  const std::int64_t p = (n + half_gap) / 2;
  const std::int64_t q = (n - half_gap) / 2;
  if (p + q != n || std::gcd(p, q) != 1 || p * q != g_of(n))
    throw std::logic_error("extremal_pair: inconsistent split for n = " + std::to_string(n));
  return {p, q};
}

CoprimeMax g_as_coprime_max(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("g_as_coprime_max: requires n >= 2");
  CoprimeMax best{-1, 0, 0};
  for (std::int64_t p = 1; p <= n / 2; ++p) {
    const std::int64_t q = n - p;
    if (std::gcd(p, q) != 1) continue;
    if (p * q > best.value) best = {p * q, p, q};
  }
  return best;
}

ExtremalCensus extremal_census(std::int64_t n) {
  if (n < 7) throw std::invalid_argument("extremal_census: requires n >= 7");
  ExtremalCensus census;
  census.n = n;
  census.g_value = g_of(n);
  auto add = [&](std::int64_t p, std::int64_t k, std::int64_t q) {
    census.family.push_back(build_glasses(static_cast<std::size_t>(p), static_cast<std::size_t>(k),
                                          static_cast<std::size_t>(q))
                                .spec);
  };
  if (n == 10) {
    add(3, 2, 7);
    add(7, 2, 3);
    add(4, 3, 5);
    add(5, 3, 4);
  } else {
    const auto [p, q] = extremal_pair(n);
    add(p, 2, q);
    add(q, 2, p);
  }
  return census;
}

ExtremalReport classify_extremal(const BoolMatrix& a) {
  const auto n = static_cast<std::int64_t>(a.order());
  if (n < 7) throw std::invalid_argument("classify_extremal: requires order >= 7");

  ExtremalReport report;
  report.g_value = g_of(n);
  const auto outcome = stable_index(a, HorizonPolicy::theorem_bound());
  report.theta = theta_of(outcome);
  if (!report.theta) {
    report.note = "stable index is infinite";
    return report;
  }

  const auto recognized = recognize_glasses(from_matrix(a));
  const auto census = extremal_census(n);
  bool in_census = false;
  if (recognized) {
    for (const auto& spec : census.family) in_census = in_census || spec.same_shape(*recognized);
  }

  if (*report.theta > report.g_value)
    throw ExtremalInconsistency("theta " + std::to_string(*report.theta) + " exceeds g(" +
                                std::to_string(n) + ")");
  if (*report.theta == report.g_value) {
    if (!in_census)
      throw ExtremalInconsistency("theta equals g(" + std::to_string(n) +
                                  ") but the digraph is not in the extremal census");
    report.is_extremal = true;
    report.matched_spec = recognized;
    report.note = "attains g(n)";
    return report;
  }
  if (in_census)
    throw ExtremalInconsistency("census digraph has theta " + std::to_string(*report.theta) +
                                " below g(" + std::to_string(n) + ")");
  report.note = "theta below g(n)";
  return report;
}

}  // namespace stix
