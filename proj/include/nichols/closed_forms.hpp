#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nichols/multipoly.hpp"

namespace nichols {

// C(n, k) in exact integer arithmetic; 0 outside 0 <= k <= n.
unsigned long long binomial(std::size_t n, long long k);

// Selector for the orbit-size closed form: even means total word length 2n,
// odd means 2n + 1.
enum class WordParity { even, odd };

// |O(2^{2(n-k)}(21)^k)| = C(2n, n-k), and for odd total length
// |O(2^{2(n-k)+1}(12)^k)| = C(2n+1, n-k); the mirrored sign class has the
// same size.  Throws std::out_of_range unless 0 <= k <= n.
unsigned long long cf_orbit_size(std::size_t n, std::size_t k, WordParity parity);

// Closed form for the b^k coefficient of F~(1^n|1^n) at e = 1, as a
// polynomial in a.  Piecewise in n exactly as stated, including the explicit
// small-n lists for k = 4 and k = 5.  Only k <= 5 has a closed form.
MultiPoly cf_tilde_fk(std::uint32_t k, std::size_t n);

// Closed form for E_{k,s}^n: the number of permutations in F(1^n|1^n) with
// t-length k and inversion count s.  Returns 0 for any (k, s) outside the
// stated rows; only k <= 5 has a closed form.  Includes the isolated
// exceptional values, plus E_{5,13}^7 = 10 which the stated rows skip (the
// brute-force table and the explicit F~_5 list at n = 7 both give 10).
long long cf_E(std::uint32_t k, long long s, std::size_t n);

// The four dimension theorems, as tagged cases.
struct DimensionCase {
  enum class Kind { cartan_a1a1, cartan_a2, v1b1, b_minus_one };
  Kind kind = Kind::cartan_a1a1;
  std::size_t param = 0;  // n for v1b1, m for b_minus_one; unused otherwise

  static DimensionCase cartan_a1a1() { return {Kind::cartan_a1a1, 0}; }
  static DimensionCase cartan_a2() { return {Kind::cartan_a2, 0}; }
  static DimensionCase v1b1(std::size_t n) { return {Kind::v1b1, n}; }
  static DimensionCase b_minus_one(std::size_t m) { return {Kind::b_minus_one, m}; }
};

// dim B(V) for each case: 4 | 27 | n^2 | 4m.  Throws std::domain_error when
// the hypotheses fail: v1b1 needs n >= 2, and b_minus_one needs m >= 2
// because m = 1 forces ae = 1 = b^2, which the 4m theorem excludes.
unsigned long long cf_dimension(const DimensionCase& c);

// Proof intermediates of the 4m theorem at b = -1, as polynomials in a and e
// with (-1)^{m-1} substituted for b^{m-1}:
//   odd_power:  F~(1^{2m+1}|1^{2m+1}) = (1-ae)^m (m)!_{ae}
//   even_diag:  F~(2^{2m}|2^{2m})     = (1-ae)^{m-1} (m-1)!_{ae}
//   even_cross: F~(2^{2m}|1^{2m})     = e^m (-1)^{m-1} (1-ae)^{m-1} (m-1)!_{ae}
// Requires m >= 1.
enum class BMinusOneVariant { odd_power, even_diag, even_cross };
MultiPoly cf_bminus1_tilde(std::size_t m, BMinusOneVariant variant);

// One checked statement in verify_all's output.
struct ClosedFormReport {
  std::string name;       // which closed form or theorem
  std::string range;      // parameter range covered by the check
  bool pass = false;
  bool advisory = false;  // report-only observations never gate the exit code
  std::string detail;     // counterexample on fail, short note otherwise
};

// Test hook: perturbs the expected value of one E-table entry inside
// verify_all, so the comparison against brute force must catch it.
struct FaultInjection {
  std::uint32_t k = 0;
  long long s = 0;
  std::size_t n = 0;
  long long delta = 1;
};

// Runs every closed form against the brute-force engines: orbit sizes,
// the Pascal orbit partition, E-tables, F~_k coefficients, the E/F~ bridge,
// q-factorial identities, the b = -1 intermediates, the longest-element
// leading term, and the dimension theorems reachable under degree_cap.
// Deterministic report order; failures carry full counterexamples.
std::vector<ClosedFormReport> verify_all(std::size_t n_max = 9,
                                         std::size_t degree_cap = 14,
                                         unsigned jobs = 1,
                                         const FaultInjection* fault = nullptr);

// True when no non-advisory report failed.
bool all_passed(const std::vector<ClosedFormReport>& reports);

}  // namespace nichols
