#include "toda/cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace toda {

TodaCache::TodaCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // no cache yet
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string n_str, t_str, primes_str;
        if (!std::getline(fields, n_str, '\t') || !std::getline(fields, t_str, '\t')) {
            std::cerr << "warning: skipping corrupt cache line " << lineno << "\n";
            continue;
        }
        std::getline(fields, primes_str, '\t');
        Natural n;
        if (mpz_set_str(n.get_mpz_t(), n_str.c_str(), 10) != 0 || n == 0) {
            std::cerr << "warning: skipping corrupt cache line " << lineno << "\n";
            continue;
        }
        std::vector<Natural> primes;
        bool ok = true;
        std::istringstream plist(primes_str);
        std::string tok;
        while (std::getline(plist, tok, ';')) {
            Natural p;
            if (tok.empty() || mpz_set_str(p.get_mpz_t(), tok.c_str(), 10) != 0) {
                ok = false;
                break;
            }
            primes.push_back(p);
        }
        char *endp = nullptr;
        long t = std::strtol(t_str.c_str(), &endp, 10);
        if (!ok || endp == t_str.c_str() || *endp != '\0' || t < 0 ||
            std::size_t(t) != primes.size()) {
            std::cerr << "warning: skipping corrupt cache line " << lineno << "\n";
            continue;
        }
        entries_[n] = std::move(primes);
    }
}

std::optional<std::vector<Natural>> TodaCache::lookup(const Natural &n) const {
    auto it = entries_.find(n);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void TodaCache::store(const Natural &n, const std::vector<Natural> &primes) {
    entries_[n] = primes;
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        std::cerr << "warning: cannot append to cache file " << path_ << "\n";
        return;
    }
    out << n.get_str() << '\t' << primes.size() << '\t';
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) out << ';';
        out << primes[i].get_str();
    }
    out << '\n';
}

TodaSet TodaCache::get(const Natural &n) {
    auto cached = lookup(n);
    TodaSet set;
    if (cached) {
        set.n = n;
        for (const Natural &p : *cached)
            set.primes.emplace_back(p, 4 * n / (p - 1));
    } else {
        set = toda_primes(n);
        store(n, set.members());
    }
    return set;
}

}  // namespace toda
