#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "toda/sets.hpp"

namespace toda {

// Witness that n meets the hypotheses of the t(n) >= 4 conjecture: n is an
// odd squarefree multiple of 3, exactly one p of {5,7,13} divides n, and
// some q in T(3p) - {5,7,13} does not divide n.
struct CriteriaWitness {
    Natural n;
    Natural p;
    Natural q;  // smallest qualifying q
};

std::optional<CriteriaWitness> satisfies_criteria(const Natural &n);

// A candidate in the recursive search: n = 3 * p * (further primes), every
// further prime drawn from the Toda set of the running product.
struct SearchNode {
    std::vector<Natural> primeset;  // sorted, distinct, includes 3
    Natural n;
    TodaSet toda;
};

inline constexpr unsigned kDefaultOmegaCap = 9;

// Emits each distinct prime multiset exactly once. Throws ResourceError when
// omega >= cap unless allow_large is set (run time grows superexponentially).
void enumerate_candidates(unsigned omega, const std::function<void(const SearchNode &)> &emit,
                          unsigned cap = kDefaultOmegaCap, bool allow_large = false);

struct UpsilonResult {
    std::size_t min_t;
    std::vector<SearchNode> argmin;
};

// Min of t(n) over enumerate_candidates(omega) filtered by the criteria
// predicate, with every attaining node. Pruning discards branches that
// provably cannot reach below the incumbent (each extra prime factor lowers
// t by at most 1), so min_t and argmin are unchanged by it.
UpsilonResult upsilon(unsigned omega, bool prune,
                      unsigned cap = kDefaultOmegaCap, bool allow_large = false);

struct CrossCheckReport {
    unsigned omega = 0;
    uint64_t limit = 0;
    std::size_t scan_min_t = 0;        // min t over all qualifying n <= limit
    std::vector<uint64_t> scan_argmin;
    std::size_t enumerated_min_t = 0;  // the same minimum via the restricted enumeration
    bool agree = false;
};

// Exhaustive check that the enumeration (which only multiplies in primes
// drawn from Toda sets of running products) misses no minimum at small
// omega: scans every n <= limit meeting the criteria with the given omega
// and compares the minimum of t against the enumerated one. omega must be
// 2 or 3.
CrossCheckReport cross_check_upsilon(unsigned omega, uint64_t limit = 1000000);

struct ScanReport {
    uint64_t lo = 0, hi = 0;
    std::size_t min_t = 0;
    std::vector<uint64_t> argmin;
    std::vector<uint64_t> counterexamples;  // n with t(n) < threshold
};

ScanReport scan_min_toda(uint64_t lo, uint64_t hi, std::size_t threshold,
                         unsigned threads = 1);

// Per-n values of t over a range, for CSV emission.
std::vector<std::pair<uint64_t, std::size_t>> scan_values(uint64_t lo, uint64_t hi,
                                                          unsigned threads = 1);

struct LowerBoundReport {
    Natural n;
    std::size_t t;
    bool at_least_one_holds;        // t >= 1, unconditional clause
    bool five_clause_applies;       // 5 does not divide n
    bool five_clause_holds;         // then t >= 2
    bool three_clause_applies;      // 3 divides n
    bool three_clause_holds;        // then t >= 3
};

LowerBoundReport check_lower_bounds(const Natural &n);

}  // namespace toda
