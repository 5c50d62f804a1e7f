#pragma once

#include <vector>

#include "toda/arith.hpp"

namespace toda {

// A germane prime r = p(q-1)+1 with p (the width) and q (the length) prime.
struct GermaneDecomposition {
    Natural value;
    Natural width;
    Natural length;
};

// All decompositions of r, sorted by width; empty when r is not a germane
// prime (including when r is not prime at all).
std::vector<GermaneDecomposition> decompositions(const Natural &r);

struct RatioRecord {
    Natural p;
    uint64_t total;  // lengths sampled
    uint64_t hits;   // q with p(q-1)+1 prime
    // ratio is the exact rational hits/total
};

// Hit count of p(q-1)+1 over the first n odd primes q (or the first n primes
// including 2, when include_two is set).
RatioRecord width_ratio(const Natural &p, uint64_t n, bool include_two = false);

struct GridCell {
    uint64_t width_index;   // 1-based into the ascending primes
    uint64_t length_index;
    uint64_t width;
    uint64_t length;
};

// Cells (i,j) with p_i(q_j - 1) + 1 prime, p and q over the first primes.
std::vector<GridCell> germane_grid(uint64_t num_widths, uint64_t num_lengths);

struct LevelSetRecord {
    uint64_t w;
    uint64_t count;
};

struct LevelSetReport {
    uint64_t sample_size;
    std::vector<LevelSetRecord> records;  // ascending w; counts sum to sample_size
};

// w(r) for each of the first sample_size primes r, computed exactly via the
// prime divisors of r-1; width_bound only merges the report's top buckets.
LevelSetReport level_sets(uint64_t sample_size, uint64_t width_bound = 64);

// Exact w(r): number of prime widths p with p | r-1 and (r-1)/p + 1 prime.
uint64_t germane_width_count(const Natural &r);

// The first count primes, ascending.
std::vector<uint64_t> first_primes(uint64_t count, bool odd_only = false);

}  // namespace toda
