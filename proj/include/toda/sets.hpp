#pragma once

#include <vector>

#include "toda/arith.hpp"

namespace toda {

// T(n): the odd primes p with (p-1) | 4n and gcd(p, 4n/(p-1)) = 1, together
// with each member's cofactor 4n/(p-1).
struct TodaSet {
    Natural n;
    std::vector<std::pair<Natural, Natural>> primes;  // (p, cofactor), p ascending

    std::size_t count() const { return primes.size(); }

    bool contains(const Natural &p) const {
        for (const auto &[q, k] : primes)
            if (q == p) return true;
        return false;
    }

    std::vector<Natural> members() const {
        std::vector<Natural> out;
        out.reserve(primes.size());
        for (const auto &[p, k] : primes) out.push_back(p);
        return out;
    }
};

// Divisor-enumeration route: test q = 2d+1 for each d | 2n. The coprimality
// condition gcd(q, 4n/(q-1)) = 1 reduces to q not dividing n.
TodaSet toda_primes(const Natural &n);

// Same, reusing a known factorization of n (the search path multiplies
// explicitly chosen primes, so n never needs refactoring).
TodaSet toda_primes(const Factorization &n);

std::size_t toda_count(const Natural &n);

// {2d+1 : d | 2n}, ascending.
std::vector<Natural> candidate_set(const Natural &n);

inline constexpr uint64_t kDefaultOracleBound = 100'000;

// Independent route: scan all odd primes p <= 4n+1 and apply the definition
// verbatim, gcd form included. Refuses n above the bound.
TodaSet toda_primes_oracle(const Natural &n, uint64_t bound = kDefaultOracleBound);

}  // namespace toda
