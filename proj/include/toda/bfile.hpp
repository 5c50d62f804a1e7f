#pragma once

#include <string>
#include <vector>

#include "toda/arith.hpp"

namespace toda {

struct BFileParseError : std::runtime_error {
    int line;
    BFileParseError(int line_, const std::string &msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// OEIS b-file: whitespace-separated "index value" lines, '#' comments,
// strictly increasing indices.
struct BFile {
    std::string sequence_id;
    std::vector<std::pair<long, Natural>> entries;

    static BFile parse_file(const std::string &path, const std::string &sequence_id = "");
    static BFile parse_text(const std::string &text, const std::string &sequence_id = "");
};

struct PrefixCompareResult {
    std::size_t matched;         // length of the agreeing prefix
    bool mismatch;               // true when a differing pair was found
    std::size_t mismatch_pos;    // position of the first difference
    Natural expected, actual;    // values at the mismatch
};

PrefixCompareResult compare_prefix(const std::vector<Natural> &generated, const BFile &reference);

}  // namespace toda
