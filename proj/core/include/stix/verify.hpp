#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stix {

struct LemmaReport {
  std::string lemma_id;
  std::string parameter_range;
  std::uint64_t cases_checked = 0;
  std::vector<std::string> failures;  // counterexamples; empty on success
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  std::uint64_t seed = 0x5eed'2024'0001ull;
};

// Sum over k < mn of C_m^k E_ij C_n^(mn-k-1) equals J_{m x n} for every
// (i, j), and the mn summands have pairwise distinct supports.
// Throws std::invalid_argument unless gcd(m, n) = 1.
LemmaReport verify_lemma3(int m, int n);
// Same computation without the coprimality guard; for non-coprime pairs the
// failures list documents where the identity breaks.
LemmaReport probe_lemma3(int m, int n);
// verify_lemma3 over all coprime 1 <= m, n <= max_order.
LemmaReport verify_lemma3_range(int max_order, const VerifyOptions& options = {});

// Irreducible A of order n: theta = infinity iff D(A) is the n-cycle, else
// theta <= n. Exhaustive for n <= 4, `trials` random matrices otherwise
// (random Hamiltonian cycle plus each other arc with probability 1/n).
LemmaReport verify_lemma8(int n, std::uint64_t trials, const VerifyOptions& options = {});

// theta(g(p,k,q)) <= lcm(p,q) + k - 2 over p in [2,p_max], q in [2,q_max], k in [2,k_max].
LemmaReport verify_eq3(int p_max, int q_max, int k_max, const VerifyOptions& options = {});

enum class PositionCoverage { All, Sample };

// B = [[C_p, X], [0, C_q]], p + q >= 7. Single-entry X: theta(B) <= g(p+q)
// with equality exactly for the extremal split (and then B is g(p,q)).
// Two-entry X: theta(B) < pq. Two-entry positions are exhaustive up to 1000
// pairs, otherwise 1000 distinct sampled pairs unless coverage is All.
LemmaReport verify_lemma4(int p, int q, PositionCoverage coverage = PositionCoverage::Sample,
                          const VerifyOptions& options = {});

// phi(r) >= phi(s) for 7 <= r <= r_max, s < r, equality only at (10, 9),
// plus the tabulated phi(1..10).
LemmaReport verify_lemma5(int r_max);

// For each 7 <= n <= n_max (n_max <= 24): census digraphs attain g(n); every
// other g(p,k,q) on n vertices with p, q >= 2 falls short; the n = 10 family.
LemmaReport verify_theorem1(int n_max, const VerifyOptions& options = {});

// theta(B) >= theta(A) for B <= A or B a principal submatrix, on random
// pairs with 2 <= order <= n_max (n_max <= 8).
LemmaReport verify_lemma1(std::uint64_t trials, int n_max, const VerifyOptions& options = {});

// rho(A) <= n^(1/theta) + tolerance on random finite-index matrices of order 2..n_max.
LemmaReport verify_spectral_bound(std::uint64_t trials, int n_max, double tolerance = 1e-6,
                                  const VerifyOptions& options = {});

// Glasses digraphs on 7..n_max vertices with one extra arc: theta < g(n).
// Covers only single-arc augmentations, not every superdigraph.
LemmaReport verify_lemma9_augmentations(int n_max, const VerifyOptions& options = {});

// Default ranges for every suite above.
std::vector<LemmaReport> verify_all(const VerifyOptions& options = {});

}  // namespace stix
