#include "toda/bernoulli.hpp"

#include <algorithm>

namespace toda {

DenominatorRecord denominator(const Natural &two_m) {
    if (two_m == 0 || mpz_odd_p(two_m.get_mpz_t()))
        throw std::domain_error("denominator: index must be even and >= 2");
    DenominatorRecord rec;
    rec.index = two_m;
    for (const Natural &e : divisors(two_m)) {
        Natural p = e + 1;
        if (is_prime(p)) rec.support.push_back(p);
    }
    std::sort(rec.support.begin(), rec.support.end());
    rec.denominator = 1;
    for (const Natural &p : rec.support) rec.denominator *= p;
    return rec;
}

std::optional<Natural> min_index(const Natural &d, const Natural &bound) {
    for (Natural two_m = 2; two_m <= bound; two_m += 2)
        if (denominator(two_m).denominator == d) return two_m;
    return std::nullopt;
}

std::vector<T2Violation> check_t2_iff_d30(uint64_t p_max) {
    std::vector<T2Violation> violations;
    for (uint64_t p : sieve_primes(p_max)) {
        if (p == 5) continue;
        Natural pn((unsigned long)p);
        std::size_t t = toda_count(pn);
        Natural d4p = denominator(4 * pn).denominator;
        if ((t == 2) != (d4p == 30)) violations.push_back({pn, t, d4p});
    }
    return violations;
}

std::vector<FamilyViolation> check_family(const Natural &a, const Natural &target_d,
                                          const std::vector<Natural> &expected_T,
                                          const Natural &m_max) {
    std::vector<FamilyViolation> violations;
    std::vector<Natural> expected = expected_T;
    std::sort(expected.begin(), expected.end());
    for (Natural m = 1; m <= m_max; ++m) {
        Natural d = denominator(4 * a * m).denominator;
        if (d != target_d) continue;
        std::vector<Natural> t_am = toda_primes(a * m).members();
        if (t_am != expected) violations.push_back({m, d, t_am});
    }
    return violations;
}

ConjectureReport check_general_conjecture(const Natural &a, const Natural &m_max) {
    if (a == 0) throw std::domain_error("check_general_conjecture: a must be >= 1");
    ConjectureReport report;
    Natural four_a = 4 * a;
    Natural d4a = denominator(four_a).denominator;
    // Clause (i) only applies when 4a is the first index attaining its
    // denominator.
    report.clause_i_tested = (min_index(d4a, four_a) == four_a);

    std::vector<Natural> t_a = toda_primes(a).members();
    std::size_t t_a_count = t_a.size();

    for (Natural m = 1; m <= m_max; ++m) {
        Natural d4am = denominator(four_a * m).denominator;
        if (d4am == d4a) {
            if (report.clause_i_tested && toda_primes(a * m).members() != t_a)
                report.clause_i_violations.push_back(m);
        } else {
            std::size_t t_am = toda_count(a * m);
            if (t_am < t_a_count)
                report.clause_ii_violations.push_back(m);
            else if (t_am == t_a_count)
                report.clause_ii_tight.push_back(m);
        }
    }
    return report;
}

std::vector<ShiftReport> check_shift_lemma(const Natural &a) {
    if (a == 0) throw std::domain_error("check_shift_lemma: a must be >= 1");
    std::vector<ShiftReport> reports;
    std::vector<Natural> divs = divisors(2 * a);
    for (const auto &[p, k] : toda_primes(a).primes) {
        ShiftReport rep;
        rep.p = p;
        for (const Natural &i : divs) {
            Natural q = 2 * p * i + 1;
            if (is_prime(q)) rep.primes_found.push_back(q);
        }
        std::sort(rep.primes_found.begin(), rep.primes_found.end());
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace toda
