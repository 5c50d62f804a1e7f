#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace toda {

// Arbitrary-precision non-negative integer. All arithmetic is exact.
using Natural = mpz_class;

inline Natural nat(const std::string &s) { return Natural(s); }

struct UnfactoredError : std::runtime_error {
    explicit UnfactoredError(const std::string &msg) : std::runtime_error(msg) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string &msg) : std::runtime_error(msg) {}
};

enum class Verdict { prime, composite };

struct PrimalityResult {
    Verdict verdict;
    bool deterministic;
    // Error-bound exponent e: P(wrong verdict) <= 2^-e. Meaningful only when
    // deterministic is false.
    int error_exponent = 0;

    bool is_prime() const { return verdict == Verdict::prime; }
};

struct Factorization {
    Natural n;
    std::vector<std::pair<Natural, unsigned>> factors;  // primes ascending, exponents >= 1

    std::size_t omega() const { return factors.size(); }

    bool squarefree() const {
        for (const auto &[p, e] : factors)
            if (e != 1) return false;
        return true;
    }

    Natural reassemble() const;
};

// Primes <= limit, ascending. Throws ResourceError above sieve_memory_cap.
std::vector<uint64_t> sieve_primes(uint64_t limit);

inline constexpr uint64_t kSieveMemoryCap = uint64_t(1) << 32;

PrimalityResult classify_prime(const Natural &n);
PrimalityResult classify_prime_u64(uint64_t n);

inline bool is_prime(const Natural &n) { return classify_prime(n).is_prime(); }
inline bool is_prime_u64(uint64_t n) { return classify_prime_u64(n).is_prime(); }

// Factors n >= 1 by sieve-backed trial division, then Pollard rho (Brent).
// Throws std::domain_error for n = 0 and UnfactoredError if the rho effort
// cap is exhausted before the cofactor splits.
Factorization factorize(const Natural &n);

// All positive divisors of n, ascending; enumerated from the factorization.
std::vector<Natural> divisors(const Natural &n);
std::vector<Natural> divisors(const Factorization &f);

inline Natural gcd(const Natural &a, const Natural &b) {
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool fits_u64(const Natural &n) {
    return mpz_sgn(n.get_mpz_t()) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline uint64_t to_u64(const Natural &n) {
    uint64_t lo = mpz_get_ui(n.get_mpz_t());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        throw std::overflow_error("value does not fit in 64 bits");
#if GMP_NUMB_BITS >= 64
    return lo;
#else
    Natural hi = n >> 32;
    return (uint64_t(mpz_get_ui(hi.get_mpz_t())) << 32) | (lo & 0xffffffffu);
#endif
}

}  // namespace toda
