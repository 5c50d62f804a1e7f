#include "toda/arith.hpp"

#include <algorithm>
#include <numeric>
#include <mutex>

namespace toda {

Natural Factorization::reassemble() const {
    Natural prod = 1;
    Natural pe;
    for (const auto &[p, e] : factors) {
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        prod *= pe;
    }
    return prod;
}

std::vector<uint64_t> sieve_primes(uint64_t limit) {
    if (limit > kSieveMemoryCap)
        throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds memory cap");
    std::vector<uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Strong pseudoprime test; the fixed witness set is deterministic for all
// n < 3.3 * 10^24, which covers the whole 64-bit range.
bool miller_rabin_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

constexpr int kProbabilisticReps = 64;  // error <= 4^-64 = 2^-128

}  // namespace

PrimalityResult classify_prime_u64(uint64_t n) {
    return {miller_rabin_u64(n) ? Verdict::prime : Verdict::composite, true, 0};
}

PrimalityResult classify_prime(const Natural &n) {
    if (mpz_sgn(n.get_mpz_t()) < 0) return {Verdict::composite, true, 0};
    if (fits_u64(n)) return classify_prime_u64(to_u64(n));
    int r = mpz_probab_prime_p(n.get_mpz_t(), kProbabilisticReps);
    if (r == 2) return {Verdict::prime, true, 0};
    if (r == 0) return {Verdict::composite, true, 0};
    return {Verdict::prime, false, 2 * kProbabilisticReps};
}

namespace {

constexpr uint64_t kTrialDivisionBound = 10'000'000;

const std::vector<uint64_t> &trial_primes() {
    static const std::vector<uint64_t> primes = sieve_primes(kTrialDivisionBound);
    return primes;
}

uint64_t pollard_brent_u64(uint64_t n, uint64_t c, uint64_t max_iters) {
    uint64_t x = 2, y = 2, d = 1, q = 1, xs = x;
    uint64_t iters = 0;
    const uint64_t m = 128;
    uint64_t r = 1;
    while (d == 1 && iters < max_iters) {
        x = y;
        for (uint64_t i = 0; i < r; ++i) {
            y = uint64_t(((__uint128_t)mulmod_u64(y, y, n) + c) % n);
        }
        for (uint64_t k = 0; k < r && d == 1; k += m) {
            xs = y;
            uint64_t lim = std::min(m, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                y = uint64_t(((__uint128_t)mulmod_u64(y, y, n) + c) % n);
                uint64_t diff = x > y ? x - y : y - x;
                if (diff) q = mulmod_u64(q, diff, n);
            }
            d = std::gcd(q, n);
            iters += lim;
        }
        r *= 2;
    }
    if (d == n) {
        // backtrack one step at a time
        d = 1;
        y = xs;
        while (d == 1) {
            y = uint64_t(((__uint128_t)mulmod_u64(y, y, n) + c) % n);
            uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
            if (y == x) break;
        }
    }
    return (d > 1 && d < n) ? d : 0;
}

void factor_u64_rec(uint64_t n, std::vector<uint64_t> &out) {
    if (n == 1) return;
    if (miller_rabin_u64(n)) { out.push_back(n); return; }
    uint64_t d = 0;
    for (uint64_t c = 1; c < 64 && d == 0; ++c)
        d = pollard_brent_u64(n, c, uint64_t(1) << 26);
    if (d == 0) throw UnfactoredError("rho effort cap exhausted on " + std::to_string(n));
    factor_u64_rec(d, out);
    factor_u64_rec(n / d, out);
}

// Pollard rho with Brent cycle detection on mpz, for cofactors above 64 bits.
bool pollard_brent_mpz(const Natural &n, unsigned long c, unsigned long max_iters, Natural &factor) {
    Natural x = 2, y = 2, q = 1, d = 1, diff, xs;
    unsigned long r = 1, iters = 0;
    const unsigned long m = 128;
    while (d == 1 && iters < max_iters) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) { y = (y * y + c) % n; }
        for (unsigned long k = 0; k < r && d == 1; k += m) {
            xs = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                diff = x > y ? x - y : y - x;
                if (diff != 0) q = q * diff % n;
            }
            d = gcd(q, n);
            iters += lim;
        }
        r *= 2;
    }
    if (d == n) {
        d = 1;
        y = xs;
        while (d == 1) {
            y = (y * y + c) % n;
            diff = x > y ? x - y : y - x;
            d = gcd(diff, n);
            if (y == x) break;
        }
    }
    if (d > 1 && d < n) { factor = d; return true; }
    return false;
}

void factor_mpz_rec(const Natural &n, std::vector<Natural> &out) {
    if (n == 1) return;
    if (fits_u64(n)) {
        std::vector<uint64_t> small;
        factor_u64_rec(to_u64(n), small);
        for (uint64_t p : small) out.emplace_back(Natural(std::to_string(p)));
        return;
    }
    if (is_prime(n)) { out.push_back(n); return; }
    Natural d;
    bool found = false;
    for (unsigned long c = 1; c < 32 && !found; ++c)
        found = pollard_brent_mpz(n, c, 1ul << 22, d);
    if (!found) throw UnfactoredError("rho effort cap exhausted on " + n.get_str());
    factor_mpz_rec(d, out);
    factor_mpz_rec(n / d, out);
}

}  // namespace

Factorization factorize(const Natural &n) {
    if (n == 0) throw std::domain_error("factorize: n must be >= 1");
    Factorization f;
    f.n = n;
    if (n == 1) return f;

    Natural rem = n;
    std::vector<Natural> primes;
    for (uint64_t p : trial_primes()) {
        if (fits_u64(rem)) {
            uint64_t r = to_u64(rem);
            if ((__uint128_t)p * p > r) break;
        }
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            primes.emplace_back(Natural(std::to_string(p)));
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        }
        if (rem == 1) break;
    }
    if (rem > 1) {
        if (fits_u64(rem) && to_u64(rem) < kTrialDivisionBound * kTrialDivisionBound && is_prime(rem)) {
            primes.push_back(rem);
        } else {
            factor_mpz_rec(rem, primes);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (const auto &p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1);
    }
    return f;
}

std::vector<Natural> divisors(const Factorization &f) {
    std::vector<Natural> divs{Natural(1)};
    for (const auto &[p, e] : f.factors) {
        std::size_t base = divs.size();
        Natural pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<Natural> divisors(const Natural &n) {
    if (n == 0) throw std::domain_error("divisors: n must be >= 1");
    return divisors(factorize(n));
}

}  // namespace toda
