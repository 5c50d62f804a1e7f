#include <doctest.h>

#include <map>

#include "toda/arith.hpp"
#include "toda/sets.hpp"

using namespace toda;

namespace {

std::vector<Natural> nats(std::initializer_list<unsigned long> xs) {
    std::vector<Natural> out;
    for (unsigned long x : xs) out.emplace_back(x);
    return out;
}

// Reference values transcribed from the published table of T(n) for n <= 30.
const std::map<unsigned long, std::vector<unsigned long>> kGoldenSets = {
    {1, {3, 5}},        {2, {3, 5}},          {3, {5, 7, 13}},
    {4, {3, 5, 17}},    {5, {3, 11}},         {6, {5, 7, 13}},
    {7, {3, 5, 29}},    {8, {3, 5, 17}},      {9, {5, 7, 13, 19, 37}},
    {10, {3, 11, 41}},  {11, {3, 5, 23}},     {12, {5, 7, 13, 17}},
    {13, {3, 5, 53}},   {14, {3, 5, 29}},     {15, {7, 11, 13, 31, 61}},
    {16, {3, 5, 17}},   {17, {3, 5}},         {18, {5, 7, 13, 19, 37, 73}},
    {19, {3, 5}},       {20, {3, 11, 17, 41}}, {21, {5, 13, 29, 43}},
    {22, {3, 5, 23, 89}}, {23, {3, 5, 47}},   {24, {5, 7, 13, 17, 97}},
    {25, {3, 11, 101}}, {26, {3, 5, 53}},     {27, {5, 7, 13, 19, 37, 109}},
    {28, {3, 5, 17, 29, 113}}, {29, {3, 5, 59}}, {30, {7, 11, 13, 31, 41, 61}},
};

}  // namespace

TEST_CASE("toda_primes matches the published table for n <= 30") {
    for (const auto &[n, expected] : kGoldenSets) {
        TodaSet set = toda_primes(Natural(n));
        std::vector<Natural> want;
        for (unsigned long p : expected) want.emplace_back(p);
        CAPTURE(n);
        CHECK(set.members() == want);
        CHECK(set.count() == want.size());
    }
}

TEST_CASE("toda_primes named values") {
    CHECK(toda_primes(Natural(55)).members() == nats({3, 23}));
    CHECK(toda_count(Natural(17)) == 2);
    CHECK(toda_count(Natural(105)) == 9);
    CHECK(toda_count(Natural(1365)) == 16);
    CHECK_THROWS_AS(toda_primes(Natural(0)), std::domain_error);
}

TEST_CASE("cofactor bookkeeping") {
    TodaSet set = toda_primes(Natural(9));
    for (const auto &[p, k] : set.primes) {
        CHECK((p - 1) * k == 36);  // 4n
        CHECK(gcd(p, k) == 1);
        CHECK(Natural(9) % p != 0);
    }
}

TEST_CASE("factorization-carrying route agrees with the plain route") {
    for (unsigned long n = 1; n <= 500; ++n) {
        Factorization f = factorize(Natural(n));
        CHECK(toda_primes(f).members() == toda_primes(Natural(n)).members());
    }
}

TEST_CASE("candidate_set examples") {
    CHECK(candidate_set(Natural(1)) == nats({3, 5}));
    CHECK(candidate_set(Natural(3)) == nats({3, 5, 7, 13}));
    CHECK(candidate_set(Natural(15)).size() == 8);  // 2^(omega+1) for odd squarefree
    CHECK_THROWS_AS(candidate_set(Natural(0)), std::domain_error);
}

TEST_CASE("oracle route: examples and refusal") {
    CHECK(toda_primes_oracle(Natural(1)).members() == nats({3, 5}));
    CHECK(toda_primes_oracle(Natural(21)).members() == nats({5, 13, 29, 43}));
    CHECK_THROWS_AS(toda_primes_oracle(Natural(200001), 200000), ResourceError);
    CHECK_THROWS_AS(toda_primes_oracle(Natural(0)), std::domain_error);
}

TEST_CASE("oracle equivalence for n <= 500 (full range in acceptance)") {
    for (unsigned long n = 1; n <= 500; ++n) {
        CAPTURE(n);
        TodaSet a = toda_primes(Natural(n));
        TodaSet b = toda_primes_oracle(Natural(n));
        REQUIRE(a.members() == b.members());
        REQUIRE(a.primes == b.primes);  // cofactors too
    }
}

TEST_CASE("T(n) is disjoint from the prime factors of n") {
    for (unsigned long n = 1; n <= 1000; ++n) {
        Factorization f = factorize(Natural(n));
        TodaSet set = toda_primes(f);
        for (const auto &[p, e] : f.factors) CHECK_FALSE(set.contains(p));
    }
}

TEST_CASE("T(n) = prime non-divisor members of the candidate set") {
    for (unsigned long n = 1; n <= 1000; ++n) {
        std::vector<Natural> via_candidates;
        for (const Natural &q : candidate_set(Natural(n)))
            if (is_prime(q) && Natural(n) % q != 0) via_candidates.push_back(q);
        CAPTURE(n);
        CHECK(toda_primes(Natural(n)).members() == via_candidates);
    }
}
