#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "toda/arith.hpp"
#include "toda/bernoulli.hpp"
#include "toda/bfile.hpp"
#include "toda/cache.hpp"
#include "toda/germane.hpp"
#include "toda/search.hpp"
#include "toda/sets.hpp"

namespace {

using namespace toda;

struct RunConfig {
    unsigned threads = std::thread::hardware_concurrency() ? std::thread::hardware_concurrency() : 1;
    uint64_t sieve_limit = 10'000'000;
    uint64_t oracle_bound = kDefaultOracleBound;
    unsigned omega_cap = kDefaultOmegaCap;
    bool allow_large_omega = false;
    std::string output = "human";
    std::string cache_path;
};

std::string join_primes(const std::vector<Natural> &primes, const char *sep) {
    std::string out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) out += sep;
        out += primes[i].get_str();
    }
    return out;
}

std::string set_notation(const std::vector<Natural> &primes) {
    return "{" + join_primes(primes, ", ") + "}";
}

TodaSet toda_set_for(const Natural &n, const RunConfig &cfg) {
    if (!cfg.cache_path.empty()) {
        static std::unique_ptr<TodaCache> cache;
        if (!cache) cache = std::make_unique<TodaCache>(cfg.cache_path);
        return cache->get(n);
    }
    return toda_primes(n);
}

int cmd_toda(const Natural &n, const RunConfig &cfg) {
    TodaSet set = toda_set_for(n, cfg);
    std::cout << "T(" << n << ") = " << set_notation(set.members()) << "; t(" << n
              << ") = " << set.count() << "\n";
    if (cfg.output == "human") {
        for (const auto &[p, k] : set.primes)
            std::cout << "  p = " << p << ", cofactor 4n/(p-1) = " << k << "\n";
    }
    return 0;
}

int cmd_table(uint64_t max, const RunConfig &cfg) {
    std::cout << "n,t,primes\n";
    for (uint64_t n = 1; n <= max; ++n) {
        TodaSet set = toda_set_for(Natural((unsigned long)n), cfg);
        std::cout << n << "," << set.count() << "," << join_primes(set.members(), ";") << "\n";
    }
    return 0;
}

int cmd_scan(uint64_t lo, uint64_t hi, std::size_t threshold, const RunConfig &cfg) {
    if (cfg.output == "csv") {
        std::cout << "n,t\n";
        for (const auto &[n, t] : scan_values(lo, hi, cfg.threads))
            std::cout << n << "," << t << "\n";
    }
    ScanReport report = scan_min_toda(lo, hi, threshold, cfg.threads);
    std::ostream &info = cfg.output == "csv" ? std::cerr : std::cout;
    info << "range [" << report.lo << ", " << report.hi << "]: min t = " << report.min_t
         << ", attained at " << report.argmin.size() << " value(s)";
    if (!report.argmin.empty()) {
        info << " (first: " << report.argmin.front() << ")";
    }
    info << "\n";
    if (!report.counterexamples.empty()) {
        info << "counterexamples (t < " << threshold << "):";
        for (uint64_t n : report.counterexamples) info << " " << n;
        info << "\n";
        return 1;
    }
    info << "no n with t(n) < " << threshold << "\n";
    return 0;
}

int cmd_upsilon_crosscheck(unsigned omega, uint64_t limit) {
    CrossCheckReport r = cross_check_upsilon(omega, limit);
    std::cout << "omega " << r.omega << ": exhaustive min t over n <= " << r.limit << " is "
              << r.scan_min_t << " (attained at " << r.scan_argmin.size()
              << " value(s), first: " << r.scan_argmin.front() << "); enumerated minimum is "
              << r.enumerated_min_t << "\n";
    if (!r.agree) {
        std::cout << "MISMATCH: the restricted enumeration misses the exhaustive minimum\n";
        return 1;
    }
    std::cout << "minima agree\n";
    return 0;
}

int cmd_upsilon(unsigned omega, bool prune, const RunConfig &cfg) {
    UpsilonResult result = upsilon(omega, prune, cfg.omega_cap, cfg.allow_large_omega);
    std::cout << "upsilon(" << omega << ") = " << result.min_t << "\n";
    for (const SearchNode &node : result.argmin)
        std::cout << "  n = " << node.n << " = " << join_primes(node.primeset, " * ") << "\n";
    return 0;
}

int cmd_criteria(const Natural &n) {
    auto witness = satisfies_criteria(n);
    if (!witness) {
        std::cout << n << " does not satisfy the criteria\n";
        return 0;
    }
    std::cout << n << " satisfies the criteria: p = " << witness->p << ", q = " << witness->q
              << "; t(" << n << ") = " << toda_count(n) << "\n";
    return 0;
}

int cmd_bounds(const Natural &n) {
    LowerBoundReport r = check_lower_bounds(n);
    std::cout << "t(" << n << ") = " << r.t << "\n";
    std::cout << "  t >= 1: " << (r.at_least_one_holds ? "holds" : "VIOLATED") << "\n";
    if (r.five_clause_applies)
        std::cout << "  5 does not divide n, t >= 2: "
                  << (r.five_clause_holds ? "holds" : "VIOLATED") << "\n";
    if (r.three_clause_applies)
        std::cout << "  3 divides n, t >= 3: " << (r.three_clause_holds ? "holds" : "VIOLATED")
                  << "\n";
    bool ok = r.at_least_one_holds && r.five_clause_holds && r.three_clause_holds;
    return ok ? 0 : 1;
}

int run_oeis_check(const std::string &kind, const std::string &sequence_id,
                   const std::string &path, uint64_t count) {
    BFile bf = BFile::parse_file(path, sequence_id);
    std::vector<Natural> generated;
    std::size_t want = std::min<std::size_t>(bf.entries.size(), count);

    if (kind == "t2-primes" || kind == "t3-primes") {
        std::size_t target_t = kind == "t2-primes" ? 2 : 3;
        uint64_t limit = 1'000'000;
        for (uint64_t p : sieve_primes(limit)) {
            if (p <= 5) continue;
            if (toda_count(Natural((unsigned long)p)) == target_t)
                generated.push_back(Natural((unsigned long)p));
            if (generated.size() >= want) break;
        }
    } else if (kind == "upsilon-shift") {
        // Generated term for n is upsilon(n); reference term is a(n+4)-1.
        BFile shifted;
        shifted.sequence_id = bf.sequence_id;
        for (uint64_t n = 2; n < 2 + want; ++n) {
            bool found = false;
            for (const auto &[idx, val] : bf.entries) {
                if (idx == long(n + 4)) {
                    shifted.entries.emplace_back(long(n), val - 1);
                    found = true;
                    break;
                }
            }
            if (!found) break;
            generated.push_back(Natural((unsigned long)upsilon(unsigned(n), true).min_t));
        }
        bf = shifted;
    } else {
        std::cerr << "unknown check kind: " << kind << "\n";
        return 2;
    }

    PrefixCompareResult r = compare_prefix(generated, bf);
    if (r.mismatch) {
        std::cout << sequence_id << ": MISMATCH at position " << r.mismatch_pos << " (reference "
                  << r.expected << ", computed " << r.actual << ")\n";
        return 1;
    }
    std::cout << sequence_id << ": matching prefix of length " << r.matched << "\n";
    return 0;
}

int dispatch(int argc, char **argv) {
    RunConfig cfg;
    if (const char *env = std::getenv("TODA_THREADS")) cfg.threads = unsigned(std::atoi(env));
    if (const char *env = std::getenv("TODA_CACHE")) cfg.cache_path = env;

    CLI::App app{"Toda prime sets, conjecture scans, Bernoulli denominators, germane primes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", cfg.threads, "worker threads for range scans");
    app.add_option("--output", cfg.output, "output style")
        ->check(CLI::IsMember({"human", "csv"}));
    app.add_option("--cache", cfg.cache_path, "Toda set cache file");
    app.add_flag("--allow-large-omega", cfg.allow_large_omega,
                 "permit searches at or above the omega cap");
    app.add_option("--omega-cap", cfg.omega_cap, "refusal cap for the candidate search");
    app.add_option("--oracle-bound", cfg.oracle_bound, "largest n accepted by the scan oracle");

    std::string n_str, a_str, d_str;
    uint64_t max = 30, lo = 1, hi = 100000, bound = 1000, m_max = 500, count = 10000;
    std::size_t threshold = 2;
    unsigned omega = 2;
    bool prune = false, include_two = false, use_oracle = false;
    uint64_t widths = 1000, lengths = 10000, sample = 100000, width_bound = 64;
    std::string expected_str, kind, seq_id, bfile_path;

    auto *c_toda = app.add_subcommand("toda", "print T(n), t(n), and cofactors");
    c_toda->add_option("n", n_str, "the integer n")->required();
    c_toda->add_flag("--oracle", use_oracle, "use the prime-scan oracle route");

    auto *c_table = app.add_subcommand("table", "CSV of n,t,primes for n = 1..max");
    c_table->add_option("max", max, "largest n")->required()->check(CLI::PositiveNumber);

    auto *c_scan = app.add_subcommand("scan", "min t over a range, counterexamples below a threshold");
    c_scan->add_option("lo", lo, "range start")->required()->check(CLI::PositiveNumber);
    c_scan->add_option("hi", hi, "range end")->required()->check(CLI::PositiveNumber);
    c_scan->add_option("--threshold", threshold, "report n with t(n) below this");

    auto *c_upsilon = app.add_subcommand("upsilon", "minimal t over the candidate search at a given omega");
    c_upsilon->add_option("omega", omega, "number of prime factors")->required();
    c_upsilon->add_flag("--prune", prune, "branch-and-bound pruning");
    bool cross_check = false;
    uint64_t cross_limit = 1000000;
    c_upsilon->add_flag("--cross-check", cross_check,
                        "compare against an exhaustive scan (omega 2 or 3 only)");
    c_upsilon->add_option("--limit", cross_limit, "exhaustive scan bound for --cross-check")
        ->check(CLI::PositiveNumber);

    auto *c_criteria = app.add_subcommand("criteria", "test the conjecture hypotheses on n");
    c_criteria->add_option("n", n_str, "the integer n")->required();

    auto *c_bounds = app.add_subcommand("bounds", "check the lower-bound clauses on t(n)");
    c_bounds->add_option("n", n_str, "the integer n")->required();

    auto *c_bern = app.add_subcommand("bernoulli", "Bernoulli denominator computations");
    c_bern->require_subcommand(1);
    auto *b_denom = c_bern->add_subcommand("denom", "D_{2m}");
    b_denom->add_option("two_m", n_str, "the even index 2m")->required();
    auto *b_support = c_bern->add_subcommand("support", "P(2m)");
    b_support->add_option("two_m", n_str, "the even index 2m")->required();
    auto *b_findex = c_bern->add_subcommand("findex", "least 2m <= bound with D_{2m} = d");
    b_findex->add_option("d", d_str, "target denominator")->required();
    b_findex->add_option("bound", bound, "search bound")->required();
    auto *b_t2 = c_bern->add_subcommand("check-t2", "t(p)=2 <=> D_{4p}=30 sweep");
    b_t2->add_option("--max", max, "largest prime p")->capture_default_str();
    auto *b_family = c_bern->add_subcommand("check-family", "fixed-denominator family sweep");
    b_family->add_option("a", a_str, "family base a")->required();
    b_family->add_option("d", d_str, "target denominator")->required();
    b_family->add_option("expected", expected_str, "expected T(am), semicolon-joined")->required();
    b_family->add_option("--max", m_max, "largest m")->capture_default_str();
    auto *b_conj = c_bern->add_subcommand("check-conj", "denominator conjecture sweep");
    b_conj->add_option("a", a_str, "base a")->required();
    b_conj->add_option("m_max", m_max, "largest m")->required();
    auto *b_shift = c_bern->add_subcommand("check-shift", "shifted-prime hypothesis per p in T(a)");
    b_shift->add_option("a", a_str, "base a")->required();

    auto *c_germane = app.add_subcommand("germane", "germane prime statistics (CSV)");
    c_germane->require_subcommand(1);
    auto *g_ratios = c_germane->add_subcommand("ratios", "hit ratios per width");
    g_ratios->add_option("--widths", widths, "number of widths")->capture_default_str();
    g_ratios->add_option("--lengths", lengths, "lengths sampled per width")->capture_default_str();
    g_ratios->add_flag("--include-two", include_two, "sample q over all primes, not just odd");
    auto *g_grid = c_germane->add_subcommand("grid", "width x length cells");
    g_grid->add_option("--widths", widths, "number of widths")->capture_default_str();
    g_grid->add_option("--lengths", lengths, "number of lengths")->capture_default_str();
    auto *g_levels = c_germane->add_subcommand("levels", "level-set counts of w(r)");
    g_levels->add_option("--sample", sample, "number of primes r")->capture_default_str();
    g_levels->add_option("--width-bound", width_bound, "top reporting bucket")->capture_default_str();

    auto *c_oeis = app.add_subcommand("oeis-check", "compare a generated sequence against a local b-file");
    c_oeis->add_option("kind", kind, "t2-primes | t3-primes | upsilon-shift")->required();
    c_oeis->add_option("sequence", seq_id, "sequence identifier (for reporting)")->required();
    c_oeis->add_option("bfile", bfile_path, "path to the b-file")->required();
    c_oeis->add_option("--count", count, "maximum terms to compare")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    auto parse_nat = [](const std::string &s) {
        Natural n;
        if (s.empty() || mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0 || n < 0)
            throw std::domain_error("not a non-negative integer: '" + s + "'");
        return n;
    };

    if (*c_toda) {
        Natural n = parse_nat(n_str);
        if (use_oracle) {
            TodaSet set = toda_primes_oracle(n, cfg.oracle_bound);
            std::cout << "T(" << n << ") = " << set_notation(set.members()) << "; t(" << n
                      << ") = " << set.count() << "  [oracle]\n";
            return 0;
        }
        return cmd_toda(n, cfg);
    }
    if (*c_table) return cmd_table(max, cfg);
    if (*c_scan) return cmd_scan(lo, hi, threshold, cfg);
    if (*c_upsilon)
        return cross_check ? cmd_upsilon_crosscheck(omega, cross_limit)
                           : cmd_upsilon(omega, prune, cfg);
    if (*c_criteria) return cmd_criteria(parse_nat(n_str));
    if (*c_bounds) return cmd_bounds(parse_nat(n_str));

    if (*b_denom) {
        std::cout << denominator(parse_nat(n_str)).denominator << "\n";
        return 0;
    }
    if (*b_support) {
        DenominatorRecord rec = denominator(parse_nat(n_str));
        std::cout << join_primes(rec.support, ";") << "\n";
        return 0;
    }
    if (*b_findex) {
        auto idx = min_index(parse_nat(d_str), Natural((unsigned long)bound));
        if (idx) {
            std::cout << *idx << "\n";
            return 0;
        }
        std::cout << "no index up to " << bound << "\n";
        return 1;
    }
    if (*b_t2) {
        auto violations = check_t2_iff_d30(max);
        for (const auto &v : violations)
            std::cout << "violation: p = " << v.p << ", t = " << v.t << ", D_4p = " << v.d4p << "\n";
        std::cout << violations.size() << " violation(s) for primes up to " << max << "\n";
        return violations.empty() ? 0 : 1;
    }
    if (*b_family) {
        std::vector<Natural> expected;
        std::istringstream in(expected_str);
        std::string tok;
        while (std::getline(in, tok, ';')) expected.push_back(parse_nat(tok));
        auto violations = check_family(parse_nat(a_str), parse_nat(d_str), expected,
                                       Natural((unsigned long)m_max));
        for (const auto &v : violations)
            std::cout << "violation: m = " << v.m << ", T = " << set_notation(v.toda_set) << "\n";
        std::cout << violations.size() << " violation(s) for m up to " << m_max << "\n";
        return violations.empty() ? 0 : 1;
    }
    if (*b_conj) {
        ConjectureReport report =
            check_general_conjecture(parse_nat(a_str), Natural((unsigned long)m_max));
        if (!report.clause_i_tested)
            std::cout << "clause (i) skipped: 4a is not the first index of its denominator\n";
        else
            std::cout << "clause (i): " << report.clause_i_violations.size() << " violation(s)\n";
        std::cout << "clause (ii): " << report.clause_ii_violations.size() << " violation(s), "
                  << report.clause_ii_tight.size() << " tight case(s)";
        if (!report.clause_ii_tight.empty())
            std::cout << " (first tight m = " << report.clause_ii_tight.front() << ")";
        std::cout << "\n";
        bool ok = report.clause_i_violations.empty() && report.clause_ii_violations.empty();
        return ok ? 0 : 1;
    }
    if (*b_shift) {
        for (const ShiftReport &rep : check_shift_lemma(parse_nat(a_str))) {
            std::cout << "p = " << rep.p << ": ";
            if (rep.primes_found.empty())
                std::cout << "NO primes in the shifted set\n";
            else
                std::cout << "primes " << set_notation(rep.primes_found) << "\n";
        }
        return 0;
    }

    if (*g_ratios) {
        std::cout << "p,hits,total,ratio\n";
        for (uint64_t p : first_primes(widths)) {
            RatioRecord rec = width_ratio(Natural((unsigned long)p), lengths, include_two);
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", double(rec.hits) / double(rec.total));
            std::cout << p << "," << rec.hits << "," << rec.total << "," << buf << "\n";
        }
        return 0;
    }
    if (*g_grid) {
        std::cout << "p,q\n";
        for (const GridCell &cell : germane_grid(widths, lengths))
            std::cout << cell.width << "," << cell.length << "\n";
        return 0;
    }
    if (*g_levels) {
        LevelSetReport report = level_sets(sample, width_bound);
        std::cout << "w,count,frequency\n";
        for (const LevelSetRecord &rec : report.records) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", double(rec.count) / double(report.sample_size));
            std::cout << rec.w << "," << rec.count << "," << buf << "\n";
        }
        return 0;
    }

    if (*c_oeis) return run_oeis_check(kind, seq_id, bfile_path, count);

    return 2;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return dispatch(argc, argv);
    } catch (const toda::BFileParseError &e) {
        std::cerr << "b-file parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const toda::ResourceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
