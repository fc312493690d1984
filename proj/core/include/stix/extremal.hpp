#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stix/bit_matrix.hpp"
#include "stix/digraph.hpp"

namespace stix {

// g(n) = (n^2-1)/4 for odd n, (n^2-4)/4 for n = 0 mod 4, (n^2-16)/4 for
// n = 2 mod 4. Negative for n = 2 (g(2) = -3). Throws for n < 1.
std::int64_t g_of(std::int64_t n);

// g(t) - t.
std::int64_t phi(std::int64_t t);

// The coprime split p + q = n with p * q = g(n), larger part first. n >= 7.
std::pair<std::int64_t, std::int64_t> extremal_pair(std::int64_t n);

struct CoprimeMax {
  std::int64_t value = 0;
  std::int64_t p = 0;  // p <= q
  std::int64_t q = 0;
};

// max{p q : p + q = n, gcd(p, q) = 1} by enumeration. n >= 2.
CoprimeMax g_as_coprime_max(std::int64_t n);

// Which branch of the piecewise formula applies: "odd", "0 mod 4", "2 mod 4".
std::string residue_case(std::int64_t n);

struct ExtremalCensus {
  std::int64_t n = 0;
  std::int64_t g_value = 0;
  std::vector<GlassesSpec> family;
};

// Every digraph with stable index g(n), up to isomorphism. n >= 7.
ExtremalCensus extremal_census(std::int64_t n);

// Raised when the engine and the extremal characterization disagree.
class ExtremalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ExtremalReport {
  std::optional<std::int64_t> theta;  // nullopt: infinite
  std::int64_t g_value = 0;
  bool is_extremal = false;
  std::optional<GlassesSpec> matched_spec;
  std::string note;
};

// Requires order >= 7.
ExtremalReport classify_extremal(const BoolMatrix& a);

}  // namespace stix
