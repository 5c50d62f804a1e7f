#include "toda/germane.hpp"

#include <algorithm>
#include <cmath>

namespace toda {

std::vector<uint64_t> first_primes(uint64_t count, bool odd_only) {
    // p_n < n(ln n + ln ln n) for n >= 6
    uint64_t want = count + (odd_only ? 1 : 0);
    uint64_t limit = 64;
    while (true) {
        double x = double(want < 6 ? 6 : want);
        limit = uint64_t(x * (std::log(x) + std::log(std::log(x)))) + 16;
        std::vector<uint64_t> primes = sieve_primes(limit);
        if (primes.size() >= want) {
            if (odd_only) primes.erase(primes.begin());
            primes.resize(count);
            return primes;
        }
        want += want / 2;  // estimate fell short; widen
    }
}

std::vector<GermaneDecomposition> decompositions(const Natural &r) {
    if (r < 2) throw std::domain_error("decompositions: r must be >= 2");
    std::vector<GermaneDecomposition> out;
    if (!is_prime(r)) return out;
    Natural rm1 = r - 1;
    if (rm1 == 1) return out;
    for (const auto &[p, e] : factorize(rm1).factors) {
        Natural q = rm1 / p + 1;
        if (is_prime(q)) out.push_back({r, p, q});
    }
    std::sort(out.begin(), out.end(),
              [](const GermaneDecomposition &a, const GermaneDecomposition &b) {
                  return a.width < b.width;
              });
    return out;
}

uint64_t germane_width_count(const Natural &r) {
    return (uint64_t)decompositions(r).size();
}

RatioRecord width_ratio(const Natural &p, uint64_t n, bool include_two) {
    if (!is_prime(p)) throw std::domain_error("width_ratio: p must be prime");
    if (n == 0) throw std::domain_error("width_ratio: n must be >= 1");
    RatioRecord rec{p, n, 0};
    for (uint64_t q : first_primes(n, !include_two)) {
        Natural candidate = p * Natural((unsigned long)(q - 1)) + 1;
        if (is_prime(candidate)) ++rec.hits;
    }
    return rec;
}

std::vector<GridCell> germane_grid(uint64_t num_widths, uint64_t num_lengths) {
    if (num_widths == 0 || num_lengths == 0)
        throw std::domain_error("germane_grid: dimensions must be >= 1");
    std::vector<uint64_t> widths = first_primes(num_widths);
    std::vector<uint64_t> lengths = first_primes(num_lengths);
    std::vector<GridCell> cells;
    for (uint64_t i = 0; i < widths.size(); ++i) {
        for (uint64_t j = 0; j < lengths.size(); ++j) {
            Natural candidate =
                Natural((unsigned long)widths[i]) * (unsigned long)(lengths[j] - 1) + 1;
            if (is_prime(candidate))
                cells.push_back({i + 1, j + 1, widths[i], lengths[j]});
        }
    }
    return cells;
}

LevelSetReport level_sets(uint64_t sample_size, uint64_t width_bound) {
    if (sample_size == 0) throw std::domain_error("level_sets: sample_size must be >= 1");
    if (width_bound == 0) throw std::domain_error("level_sets: width_bound must be >= 1");
    std::vector<uint64_t> counts;
    for (uint64_t r : first_primes(sample_size)) {
        uint64_t w = germane_width_count(Natural((unsigned long)r));
        if (w > width_bound) w = width_bound;  // bucket cap; w itself is exact
        if (w >= counts.size()) counts.resize(w + 1, 0);
        ++counts[w];
    }
    LevelSetReport report;
    report.sample_size = sample_size;
    for (uint64_t w = 0; w < counts.size(); ++w)
        if (counts[w] > 0) report.records.push_back({w, counts[w]});
    return report;
}

}  // namespace toda
