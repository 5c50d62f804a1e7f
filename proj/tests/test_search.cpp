#include <doctest.h>

#include <algorithm>
#include <set>

#include "toda/search.hpp"

using namespace toda;

TEST_CASE("satisfies_criteria examples") {
    auto w15 = satisfies_criteria(Natural(15));
    REQUIRE(w15.has_value());
    CHECK(w15->p == 5);
    CHECK(w15->q == 11);

    CHECK_FALSE(satisfies_criteria(Natural(45)));        // not squarefree
    CHECK_FALSE(satisfies_criteria(Natural(6)));         // even
    CHECK_FALSE(satisfies_criteria(Natural(3 * 5 * 7))); // two of {5,7,13} divide n
    CHECK_FALSE(satisfies_criteria(Natural(3)));         // none of {5,7,13} divides n
    CHECK_FALSE(satisfies_criteria(Natural(35)));        // 3 does not divide n
    CHECK_THROWS_AS(satisfies_criteria(Natural(0)), std::domain_error);
}

TEST_CASE("witness q is the smallest qualifying one") {
    // T(21) = {5,13,29,43}; for n = 21, q must avoid {5,7,13} and not divide n.
    auto w = satisfies_criteria(Natural(21));
    REQUIRE(w.has_value());
    CHECK(w->p == 7);
    CHECK(w->q == 29);
}

TEST_CASE("enumerate_candidates at omega 2 and 3") {
    std::vector<Natural> omega2;
    enumerate_candidates(2, [&](const SearchNode &node) { omega2.push_back(node.n); });
    std::sort(omega2.begin(), omega2.end());
    CHECK(omega2 == std::vector<Natural>{15, 21, 39});

    std::set<Natural> omega3;
    enumerate_candidates(3, [&](const SearchNode &node) {
        CHECK(node.primeset.size() == 3);
        CHECK(mpz_odd_p(node.n.get_mpz_t()));
        CHECK(node.n % 3 == 0);
        Factorization f = factorize(node.n);
        CHECK(f.omega() == 3);
        CHECK(f.squarefree());
        CHECK_FALSE(omega3.count(node.n));  // no duplicate emissions
        omega3.insert(node.n);
    });
    CHECK(omega3.count(Natural(165)));  // 3 * 5 * 11, 11 in T(15)
}

TEST_CASE("enumeration refuses omega at the cap without the override") {
    CHECK_THROWS_AS(enumerate_candidates(9, [](const SearchNode &) {}), ResourceError);
    CHECK_THROWS_AS(enumerate_candidates(1, [](const SearchNode &) {}), std::domain_error);
    CHECK_THROWS_AS(upsilon(9, true), ResourceError);
}

TEST_CASE("upsilon reproduces the published minima at small omega") {
    CHECK(upsilon(2, false).min_t == 4);
    CHECK(upsilon(3, false).min_t == 4);
    CHECK(upsilon(4, true).min_t == 5);
}

TEST_CASE("exhaustive scan agrees with the restricted enumeration at small omega") {
    CrossCheckReport r2 = cross_check_upsilon(2, 100000);
    CHECK(r2.agree);
    CHECK(r2.scan_min_t == 4);
    CHECK(r2.scan_argmin == std::vector<uint64_t>{21});

    CrossCheckReport r3 = cross_check_upsilon(3, 1000000);
    CHECK(r3.agree);
    CHECK(r3.scan_min_t == 4);
    // includes the enumeration's own argmin 3*13*157
    CHECK(std::find(r3.scan_argmin.begin(), r3.scan_argmin.end(), 6123) != r3.scan_argmin.end());

    CHECK_THROWS_AS(cross_check_upsilon(4), std::domain_error);
}

TEST_CASE("pruning changes neither the minimum nor the attaining nodes") {
    for (unsigned omega = 2; omega <= 5; ++omega) {
        UpsilonResult off = upsilon(omega, false);
        UpsilonResult on = upsilon(omega, true);
        CAPTURE(omega);
        REQUIRE(off.min_t == on.min_t);
        REQUIRE(off.argmin.size() == on.argmin.size());
        for (std::size_t i = 0; i < off.argmin.size(); ++i)
            CHECK(off.argmin[i].n == on.argmin[i].n);
    }
}

TEST_CASE("every enumerated node satisfying the criteria has t >= 4 at omega <= 4") {
    for (unsigned omega = 2; omega <= 4; ++omega) {
        enumerate_candidates(omega, [&](const SearchNode &node) {
            if (satisfies_criteria(node.n)) {
                CAPTURE(node.n.get_str());
                CHECK(node.toda.count() >= 4);
            }
        });
    }
}

TEST_CASE("scan_min_toda over the table range") {
    ScanReport r = scan_min_toda(1, 30, 2);
    CHECK(r.min_t == 2);
    CHECK(r.counterexamples.empty());
    CHECK(r.argmin == std::vector<uint64_t>{1, 2, 5, 17, 19});

    ScanReport single = scan_min_toda(1, 1, 2);
    CHECK(single.min_t == 2);
    CHECK(single.argmin == std::vector<uint64_t>{1});

    CHECK_THROWS_AS(scan_min_toda(0, 10, 2), std::domain_error);
    CHECK_THROWS_AS(scan_min_toda(10, 5, 2), std::domain_error);
}

TEST_CASE("scan results do not depend on thread count") {
    ScanReport a = scan_min_toda(1, 5000, 2, 1);
    ScanReport b = scan_min_toda(1, 5000, 2, 4);
    CHECK(a.min_t == b.min_t);
    CHECK(a.argmin == b.argmin);
    CHECK(a.counterexamples == b.counterexamples);
    CHECK(scan_values(1, 2000, 1) == scan_values(1, 2000, 3));
}

TEST_CASE("lower-bound clause reports") {
    LowerBoundReport r7 = check_lower_bounds(Natural(7));
    CHECK(r7.t == 3);
    CHECK(r7.five_clause_applies);
    CHECK(r7.five_clause_holds);
    CHECK_FALSE(r7.three_clause_applies);

    LowerBoundReport r12 = check_lower_bounds(Natural(12));
    CHECK(r12.t == 4);
    CHECK(r12.three_clause_applies);
    CHECK(r12.three_clause_holds);

    LowerBoundReport r5 = check_lower_bounds(Natural(5));
    CHECK(r5.t == 2);
    CHECK_FALSE(r5.five_clause_applies);
    CHECK_FALSE(r5.three_clause_applies);
    CHECK(r5.at_least_one_holds);
}
