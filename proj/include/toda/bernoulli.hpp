#pragma once

#include <optional>
#include <vector>

#include "toda/arith.hpp"
#include "toda/sets.hpp"

namespace toda {

// Von Staudt-Clausen: the denominator of the 2m-th Bernoulli number is the
// product of all primes p with (p-1) | 2m.
struct DenominatorRecord {
    Natural index;                 // the even 2m
    std::vector<Natural> support;  // P(2m), ascending; always contains 2 and 3
    Natural denominator;           // product of the support, squarefree
};

DenominatorRecord denominator(const Natural &two_m);

// F(d) truncated at an explicit bound: least 2m <= bound with D_{2m} = d.
std::optional<Natural> min_index(const Natural &d, const Natural &bound);

struct T2Violation {
    Natural p;
    std::size_t t;
    Natural d4p;
};

// Biconditional t(p) = 2 <=> D_{4p} = 30, over primes p <= p_max, p != 5.
std::vector<T2Violation> check_t2_iff_d30(uint64_t p_max);

struct FamilyViolation {
    Natural m;
    Natural d;                      // D_{4am}, equal to the target
    std::vector<Natural> toda_set;  // T(am), differing from the expected set
};

// All m <= m_max with D_{4am} = target_d but T(am) != expected_T.
std::vector<FamilyViolation> check_family(const Natural &a, const Natural &target_d,
                                          const std::vector<Natural> &expected_T,
                                          const Natural &m_max);

struct ConjectureReport {
    bool clause_i_tested;  // requires F(D_{4a}) = 4a
    std::vector<Natural> clause_i_violations;   // m with D_{4am} = D_{4a} but T(am) != T(a)
    std::vector<Natural> clause_ii_violations;  // m with D_{4am} != D_{4a} but t(am) < t(a)
    std::vector<Natural> clause_ii_tight;       // m with D_{4am} != D_{4a} and t(am) = t(a)
};

ConjectureReport check_general_conjecture(const Natural &a, const Natural &m_max);

struct ShiftReport {
    Natural p;                        // member of T(a)
    std::vector<Natural> primes_found;  // primes among {2pi+1 : i | 2a}
};

// Tests the hypothesis that {2pi+1 : i | 2a} contains a prime for each
// p in T(a); empty primes_found means the hypothesis fails for that p.
std::vector<ShiftReport> check_shift_lemma(const Natural &a);

}  // namespace toda
