#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toda/sets.hpp"

namespace toda {

// Append-only text cache of computed Toda sets, one record per line:
// n<TAB>t<TAB>p1;p2;...  Corrupt lines are skipped with a warning on stderr.
class TodaCache {
public:
    explicit TodaCache(std::string path);

    std::optional<std::vector<Natural>> lookup(const Natural &n) const;
    void store(const Natural &n, const std::vector<Natural> &primes);

    // Cached when available, computed and appended otherwise. Cofactors are
    // rebuilt from the definition either way, so hits and misses agree.
    TodaSet get(const Natural &n);

    std::size_t size() const { return entries_.size(); }

private:
    std::string path_;
    std::map<Natural, std::vector<Natural>> entries_;
};

}  // namespace toda
