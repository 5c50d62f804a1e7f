#include <doctest.h>

#include "toda/bernoulli.hpp"

using namespace toda;

namespace {

std::vector<Natural> nats(std::initializer_list<unsigned long> xs) {
    std::vector<Natural> out;
    for (unsigned long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("denominator goldens") {
    DenominatorRecord d2 = denominator(Natural(2));
    CHECK(d2.support == nats({2, 3}));
    CHECK(d2.denominator == 6);

    CHECK(denominator(Natural(4)).denominator == 30);
    CHECK(denominator(Natural(12)).denominator == 2730);
    CHECK(denominator(Natural(20)).denominator == 330);
    CHECK(denominator(Natural(60)).denominator == 56786730);
    CHECK(denominator(Natural(220)).denominator == 7590);

    CHECK_THROWS_AS(denominator(Natural(0)), std::domain_error);
    CHECK_THROWS_AS(denominator(Natural(7)), std::domain_error);
}

TEST_CASE("support invariants up to 1e4") {
    for (unsigned long two_m = 2; two_m <= 10000; two_m += 2) {
        DenominatorRecord rec = denominator(Natural(two_m));
        CAPTURE(two_m);
        REQUIRE(rec.support.size() >= 2);
        CHECK(rec.support[0] == 2);
        CHECK(rec.support[1] == 3);
        CHECK(rec.denominator % 6 == 0);
        CHECK(factorize(rec.denominator).squarefree());
        Natural prod = 1;
        for (const Natural &p : rec.support) {
            prod *= p;
            CHECK(two_m % (p - 1) == 0);
        }
        CHECK(prod == rec.denominator);
    }
}

TEST_CASE("min_index examples") {
    CHECK(min_index(Natural(6), Natural(100)) == Natural(2));
    CHECK(min_index(Natural(30), Natural(100)) == Natural(4));
    CHECK(min_index(Natural(2730), Natural(100)) == Natural(12));
    CHECK_FALSE(min_index(Natural(7), Natural(100)).has_value());
}

TEST_CASE("t(p)=2 iff D_4p=30, small sweep plus named instances") {
    CHECK(check_t2_iff_d30(30).empty());

    CHECK(toda_count(Natural(17)) == 2);
    CHECK(denominator(Natural(68)).denominator == 30);
    CHECK(denominator(Natural(68)).support == nats({2, 3, 5}));

    CHECK(toda_count(Natural(7)) == 3);
    CHECK(denominator(Natural(28)).denominator == 870);
    CHECK(denominator(Natural(28)).support == nats({2, 3, 5, 29}));
}

TEST_CASE("fixed-denominator family sweeps are empty at small bounds") {
    CHECK(check_family(Natural(3), Natural(2730), nats({5, 7, 13}), Natural(100)).empty());
    CHECK(check_family(Natural(5), Natural(330), nats({3, 11}), Natural(100)).empty());
    CHECK(check_family(Natural(15), Natural(56786730), nats({7, 11, 13, 31, 61}), Natural(50))
              .empty());
}

TEST_CASE("general conjecture report for a=5 shows the tight case at m=11") {
    ConjectureReport report = check_general_conjecture(Natural(5), Natural(50));
    CHECK(report.clause_i_tested);  // F(330) = 20
    CHECK(report.clause_i_violations.empty());
    CHECK(report.clause_ii_violations.empty());
    // T(55) = {3,23}, t(55) = t(5) = 2 while D_220 = 7590 != 330
    REQUIRE(!report.clause_ii_tight.empty());
    CHECK(std::find(report.clause_ii_tight.begin(), report.clause_ii_tight.end(), Natural(11)) !=
          report.clause_ii_tight.end());
}

TEST_CASE("general conjecture for a=1 tests clause (i) with F(30)=4") {
    CHECK(min_index(Natural(30), Natural(4)) == Natural(4));
    ConjectureReport report = check_general_conjecture(Natural(1), Natural(200));
    CHECK(report.clause_i_tested);
    CHECK(report.clause_i_violations.empty());
    CHECK(report.clause_ii_violations.empty());
}

TEST_CASE("general conjecture for a=3 over a moderate sweep") {
    ConjectureReport report = check_general_conjecture(Natural(3), Natural(1000));
    CHECK(report.clause_i_tested);  // F(2730) = 12 = 4*3
    CHECK(report.clause_i_violations.empty());
    CHECK(report.clause_ii_violations.empty());
}

TEST_CASE("shift-lemma hypothesis reports") {
    // a=3: T(3) = {5,7,13}
    auto reports = check_shift_lemma(Natural(3));
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].p == 5);
    CHECK(std::find(reports[0].primes_found.begin(), reports[0].primes_found.end(), Natural(11)) !=
          reports[0].primes_found.end());
    CHECK(reports[1].p == 7);
    // {2*7*i+1 : i | 6} = {15,29,43,85}
    CHECK(reports[1].primes_found == nats({29, 43}));

    // a=1: T(1) = {3,5}; for p=3, {2*3*i+1 : i | 2} = {7,13}
    auto r1 = check_shift_lemma(Natural(1));
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].p == 3);
    CHECK(r1[0].primes_found == nats({7, 13}));
}

TEST_CASE("T(n) equals the odd non-divisor part of P(4n)") {
    for (unsigned long n = 1; n <= 1000; ++n) {
        std::vector<Natural> via_support;
        for (const Natural &p : denominator(Natural(4 * n)).support)
            if (p != 2 && Natural(n) % p != 0) via_support.push_back(p);
        CAPTURE(n);
        CHECK(toda_primes(Natural(n)).members() == via_support);
    }
}
