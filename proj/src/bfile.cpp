#include "multipart/bfile.hpp"

#include <cctype>
#include <charconv>
#include <string_view>

namespace multipart {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<BFileRecord> parse_bfile(std::istream& in) {
    std::vector<BFileRecord> out;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;

        const std::size_t gap = line.find_first_of(" \t");
        if (gap == std::string_view::npos)
            throw BFileParseError(lineno, "expected \"index value\"");
        const std::string_view idx = line.substr(0, gap);
        const std::string_view val = trim(line.substr(gap));
        // a value with a leading minus is malformed for this sequence
        if (!all_digits(idx) || !all_digits(val))
            throw BFileParseError(lineno, "expected two nonnegative integers");

        BFileRecord rec;
        const auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), rec.index);
        if (ec != std::errc() || ptr != idx.data() + idx.size())
            throw BFileParseError(lineno, "index out of range");
        rec.value = BigInt(std::string(val));
        if (!out.empty() && rec.index <= out.back().index)
            throw BFileParseError(lineno, "indices must be strictly increasing");
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace multipart
