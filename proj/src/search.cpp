#include "toda/search.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace toda {

std::optional<CriteriaWitness> satisfies_criteria(const Natural &n) {
    if (n == 0) throw std::domain_error("satisfies_criteria: n must be >= 1");
    if (mpz_even_p(n.get_mpz_t())) return std::nullopt;
    if (!mpz_divisible_ui_p(n.get_mpz_t(), 3)) return std::nullopt;
    Factorization f = factorize(n);
    if (!f.squarefree()) return std::nullopt;

    std::optional<Natural> p;
    for (unsigned long cand : {5ul, 7ul, 13ul}) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), cand)) {
            if (p) return std::nullopt;  // two of {5,7,13} divide n
            p = Natural(cand);
        }
    }
    if (!p) return std::nullopt;

    // Smallest q in T(3p) - {5,7,13} with q not dividing n.
    TodaSet t3p = toda_primes(Natural(3) * *p);
    for (const auto &[q, k] : t3p.primes) {
        if (q == 5 || q == 7 || q == 13) continue;
        if (!mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t()))
            return CriteriaWitness{n, *p, q};
    }
    return std::nullopt;
}

namespace {

SearchNode make_node(std::vector<Natural> primes) {
    std::sort(primes.begin(), primes.end());
    Factorization f;
    f.n = 1;
    for (const Natural &p : primes) {
        f.n *= p;
        f.factors.emplace_back(p, 1u);
    }
    SearchNode node;
    node.primeset = std::move(primes);
    node.n = f.n;
    node.toda = toda_primes(f);
    return node;
}

// Recursive selection over T(current_n): take k primes from the current Toda
// set, multiply them in, recurse on the rest. The same prime multiset can be
// reached along many selection orders; a set of visited multisets collapses
// those (remaining depth is a function of the multiset, so the subtrees are
// identical and only the first visit needs expanding).
struct Selector {
    std::function<void(const SearchNode &)> on_leaf;
    // Returns a lower bound budget: prune the node when t(n) - remaining is
    // strictly above it. SIZE_MAX disables pruning.
    std::function<std::size_t()> budget = [] { return SIZE_MAX; };
    std::set<std::vector<Natural>> seen;

    void expand(const SearchNode &node, unsigned remaining) {
        if (!seen.insert(node.primeset).second) return;
        if (remaining == 0) {
            on_leaf(node);
            return;
        }
        std::size_t b = budget();
        if (b != SIZE_MAX && node.toda.count() > b + remaining) return;
        std::vector<Natural> pool = node.toda.members();
        unsigned max_k = std::min<unsigned>(remaining, (unsigned)pool.size());
        for (unsigned k = 1; k <= max_k; ++k) {
            std::vector<unsigned> idx(k);
            for (unsigned i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                std::vector<Natural> primes = node.primeset;
                for (unsigned i : idx) primes.push_back(pool[i]);
                expand(make_node(std::move(primes)), remaining - k);
                int i = int(k) - 1;
                while (i >= 0 && idx[i] == int(pool.size()) - int(k) + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }

    void run(unsigned omega) {
        for (unsigned long p : {5ul, 7ul, 13ul})
            expand(make_node({Natural(3), Natural(p)}), omega - 2);
    }
};

void check_omega(unsigned omega, unsigned cap, bool allow_large, const char *what) {
    if (omega < 2) throw std::domain_error(std::string(what) + ": omega must be >= 2");
    if (omega >= cap && !allow_large)
        throw ResourceError(
            std::string(what) + ": omega " + std::to_string(omega) + " is at or above the cap (" +
            std::to_string(cap) +
            "); run time grows superexponentially -- pass the large-omega override to proceed");
}

}  // namespace

void enumerate_candidates(unsigned omega, const std::function<void(const SearchNode &)> &emit,
                          unsigned cap, bool allow_large) {
    check_omega(omega, cap, allow_large, "enumerate_candidates");
    Selector sel;
    sel.on_leaf = emit;
    sel.run(omega);
}

UpsilonResult upsilon(unsigned omega, bool prune, unsigned cap, bool allow_large) {
    check_omega(omega, cap, allow_large, "upsilon");
    UpsilonResult best;
    best.min_t = SIZE_MAX;

    Selector sel;
    sel.on_leaf = [&](const SearchNode &node) {
        if (!satisfies_criteria(node.n)) return;
        std::size_t t = node.toda.count();
        if (t < best.min_t) {
            best.min_t = t;
            best.argmin.clear();
        }
        if (t == best.min_t) best.argmin.push_back(node);
    };
    if (prune) sel.budget = [&] { return best.min_t; };
    sel.run(omega);

    if (best.min_t == SIZE_MAX)
        throw std::logic_error("upsilon: empty candidate set");
    std::sort(best.argmin.begin(), best.argmin.end(),
              [](const SearchNode &a, const SearchNode &b) { return a.n < b.n; });
    return best;
}

CrossCheckReport cross_check_upsilon(unsigned omega, uint64_t limit) {
    if (omega < 2 || omega > 3)
        throw std::domain_error("cross_check_upsilon: omega must be 2 or 3");
    CrossCheckReport report;
    report.omega = omega;
    report.limit = limit;
    report.scan_min_t = SIZE_MAX;

    // Qualifying n are odd multiples of 3 with exactly one of {5,7,13}
    // dividing; filter cheaply before factorizing.
    for (uint64_t n = 3; n <= limit; n += 6) {
        unsigned hits = (n % 5 == 0) + (n % 7 == 0) + (n % 13 == 0);
        if (hits != 1) continue;
        Factorization f = factorize(Natural((unsigned long)n));
        if (f.omega() != omega || !f.squarefree()) continue;
        if (!satisfies_criteria(f.n)) continue;
        std::size_t t = toda_primes(f).count();
        if (t < report.scan_min_t) {
            report.scan_min_t = t;
            report.scan_argmin.clear();
        }
        if (t == report.scan_min_t) report.scan_argmin.push_back(n);
    }
    if (report.scan_min_t == SIZE_MAX)
        throw std::logic_error("cross_check_upsilon: no qualifying n below the limit");

    report.enumerated_min_t = upsilon(omega, false).min_t;
    report.agree = report.scan_min_t == report.enumerated_min_t;
    return report;
}

namespace {

constexpr uint64_t kScanChunk = 4096;

// Per-n slots in a preallocated vector; the chunk grid is fixed so results
// do not depend on thread count or scheduling.
std::vector<std::size_t> scan_all(uint64_t lo, uint64_t hi, unsigned threads) {
    std::vector<std::size_t> t_values(hi - lo + 1);
    std::vector<std::pair<uint64_t, uint64_t>> chunks;
    for (uint64_t c = lo; c <= hi; c += kScanChunk)
        chunks.emplace_back(c, std::min(hi, c + kScanChunk - 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= chunks.size()) break;
            auto [clo, chi] = chunks[idx];
            for (uint64_t n = clo; n <= chi; ++n)
                t_values[n - lo] = toda_primes(Natural((unsigned long)n)).count();
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }
    return t_values;
}

}  // namespace

ScanReport scan_min_toda(uint64_t lo, uint64_t hi, std::size_t threshold, unsigned threads) {
    if (lo == 0) throw std::domain_error("scan_min_toda: lo must be >= 1");
    if (lo > hi) throw std::domain_error("scan_min_toda: empty range");
    std::vector<std::size_t> t_values = scan_all(lo, hi, threads);
    ScanReport report;
    report.lo = lo;
    report.hi = hi;
    report.min_t = SIZE_MAX;
    for (uint64_t n = lo; n <= hi; ++n) {
        std::size_t t = t_values[n - lo];
        if (t < report.min_t) {
            report.min_t = t;
            report.argmin.clear();
        }
        if (t == report.min_t) report.argmin.push_back(n);
        if (t < threshold) report.counterexamples.push_back(n);
    }
    return report;
}

std::vector<std::pair<uint64_t, std::size_t>> scan_values(uint64_t lo, uint64_t hi,
                                                          unsigned threads) {
    if (lo == 0) throw std::domain_error("scan_values: lo must be >= 1");
    if (lo > hi) throw std::domain_error("scan_values: empty range");
    std::vector<std::size_t> t_values = scan_all(lo, hi, threads);
    std::vector<std::pair<uint64_t, std::size_t>> out;
    out.reserve(t_values.size());
    for (uint64_t n = lo; n <= hi; ++n) out.emplace_back(n, t_values[n - lo]);
    return out;
}

LowerBoundReport check_lower_bounds(const Natural &n) {
    if (n == 0) throw std::domain_error("check_lower_bounds: n must be >= 1");
    LowerBoundReport r;
    r.n = n;
    r.t = toda_count(n);
    r.at_least_one_holds = r.t >= 1;
    r.five_clause_applies = !mpz_divisible_ui_p(n.get_mpz_t(), 5);
    r.five_clause_holds = !r.five_clause_applies || r.t >= 2;
    r.three_clause_applies = mpz_divisible_ui_p(n.get_mpz_t(), 3);
    r.three_clause_holds = !r.three_clause_applies || r.t >= 3;
    return r;
}

}  // namespace toda
