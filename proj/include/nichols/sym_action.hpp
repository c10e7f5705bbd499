#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nichols/perm.hpp"
#include "nichols/word.hpp"

namespace nichols {

// Caps on exhaustive searches: full n! scans vs subgroup-only BFS.
struct SearchCaps {
  std::size_t full_scan = 10;
  std::size_t subgroup = 13;
};

// Generator s_i on a word (1-based i): flips 11 <-> 22 at positions (i, i+1),
// fixes 12 and 21.
Word s_act(std::size_t i, const Word& w);

// The induced action of p via its canonical reduced word (rightmost factor
// first); independent of the chosen reduced expression.
Word act(const Perm& p, const Word& w);

// BFS closure of w under s_1..s_{n-1}, in lexicographic order.
std::vector<Word> orbit(const Word& w);

// All permutations carrying x to y.  Routed through the t-generated subgroup
// when x = y is a constant word, full S_n scan otherwise (see caps).
// Different orbits give an empty member list (not an error).
struct FSet {
  Word source, target;
  std::vector<Perm> members;  // sorted by one-line notation
};
FSet fset(const Word& x, const Word& y, const SearchCaps& caps = {});

// The subgroup of S_n generated by t_1, ..., t_{n-2}, via BFS; equals the
// member set of fset(1^n, 1^n).  Sorted by one-line notation.
std::vector<Perm> subgroup_tgen(std::size_t n, const SearchCaps& caps = {});

// Minimal word length of p in the generators t_i (Cayley-graph distance),
// BFS distances memoized per n.  Throws std::domain_error when p is not in
// the subgroup.
unsigned long tl(const Perm& p, std::size_t n, const SearchCaps& caps = {});

// Counts of subgroup elements by (tl, sl).
struct EkTable {
  std::size_t n = 0;
  // (k, s) -> count; truncated to k <= k_max when k_max >= 0.
  std::map<std::pair<unsigned long, unsigned long>, unsigned long long> counts;
};
EkTable ek_table(std::size_t n, long k_max = -1, const SearchCaps& caps = {});

// One orbit of the partition of {1,2}^n: lexicographically smallest word as
// representative, plus the theorem-named form when the orbit carries one.
struct OrbitInfo {
  Word rep;
  std::size_t size = 0;
  std::string label;  // e.g. "2^4(21)^1"; empty when unnamed
};
// Complete partition of all 2^n words into orbits, ordered by representative.
std::vector<OrbitInfo> orbit_partition(std::size_t n);

}  // namespace nichols
