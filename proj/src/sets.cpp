#include "toda/sets.hpp"

#include <algorithm>

namespace toda {

namespace {

TodaSet toda_from_divisors(const Natural &n, const std::vector<Natural> &divs_2n) {
    TodaSet out;
    out.n = n;
    for (const Natural &d : divs_2n) {
        Natural q = 2 * d + 1;
        if (!is_prime(q)) continue;
        if (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) continue;
        out.primes.emplace_back(q, 2 * n / d);  // cofactor 4n/(q-1) = 2n/d
    }
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

}  // namespace

TodaSet toda_primes(const Natural &n) {
    if (n == 0) throw std::domain_error("toda_primes: n must be >= 1");
    return toda_from_divisors(n, divisors(2 * n));
}

TodaSet toda_primes(const Factorization &n) {
    if (n.n == 0) throw std::domain_error("toda_primes: n must be >= 1");
    Factorization two_n = n;
    two_n.n = 2 * n.n;
    if (!two_n.factors.empty() && two_n.factors.front().first == 2)
        ++two_n.factors.front().second;
    else
        two_n.factors.insert(two_n.factors.begin(), {Natural(2), 1u});
    return toda_from_divisors(n.n, divisors(two_n));
}

std::size_t toda_count(const Natural &n) { return toda_primes(n).count(); }

std::vector<Natural> candidate_set(const Natural &n) {
    if (n == 0) throw std::domain_error("candidate_set: n must be >= 1");
    std::vector<Natural> out;
    for (const Natural &d : divisors(2 * n)) out.push_back(2 * d + 1);
    std::sort(out.begin(), out.end());
    return out;
}

TodaSet toda_primes_oracle(const Natural &n, uint64_t bound) {
    if (n == 0) throw std::domain_error("toda_primes_oracle: n must be >= 1");
    if (n > bound)
        throw ResourceError("toda_primes_oracle: n exceeds oracle bound " + std::to_string(bound));
    Natural four_n = 4 * n;
    TodaSet out;
    out.n = n;
    for (uint64_t p : sieve_primes(to_u64(four_n) + 1)) {
        if (p == 2) continue;
        Natural pm1 = p - 1;
        if (!mpz_divisible_p(four_n.get_mpz_t(), pm1.get_mpz_t())) continue;
        Natural k = four_n / pm1;
        if (gcd(Natural(std::to_string(p)), k) != 1) continue;
        out.primes.emplace_back(Natural(std::to_string(p)), k);
    }
    return out;
}

}  // namespace toda
