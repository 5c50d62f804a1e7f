#include "toda/bfile.hpp"

#include <fstream>
#include <sstream>

namespace toda {

BFile BFile::parse_text(const std::string &text, const std::string &sequence_id) {
    BFile bf;
    bf.sequence_id = sequence_id;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_prev = false;
    long prev_index = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream fields(line.substr(start));
        long index;
        std::string value_str;
        if (!(fields >> index >> value_str))
            throw BFileParseError(lineno, "expected 'index value'");
        std::string trailing;
        if (fields >> trailing && trailing[0] != '#')
            throw BFileParseError(lineno, "unexpected trailing field '" + trailing + "'");
        Natural value;
        if (mpz_set_str(value.get_mpz_t(), value_str.c_str(), 10) != 0)
            throw BFileParseError(lineno, "bad integer '" + value_str + "'");
        if (have_prev && index <= prev_index)
            throw BFileParseError(lineno, "indices not strictly increasing");
        prev_index = index;
        have_prev = true;
        bf.entries.emplace_back(index, value);
    }
    return bf;
}

BFile BFile::parse_file(const std::string &path, const std::string &sequence_id) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), sequence_id);
}

PrefixCompareResult compare_prefix(const std::vector<Natural> &generated, const BFile &reference) {
    PrefixCompareResult r{0, false, 0, 0, 0};
    std::size_t n = std::min(generated.size(), reference.entries.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (generated[i] != reference.entries[i].second) {
            r.mismatch = true;
            r.mismatch_pos = i;
            r.expected = reference.entries[i].second;
            r.actual = generated[i];
            return r;
        }
        ++r.matched;
    }
    return r;
}

}  // namespace toda
