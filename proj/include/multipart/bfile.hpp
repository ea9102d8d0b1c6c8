#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multipart/arith.hpp"

namespace multipart {

/// One "index value" line of an OEIS b-file.
struct BFileRecord {
    std::uint64_t index = 0;
    BigInt value;
};

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Blank lines and lines starting with '#' are skipped. Indices must be
/// strictly increasing.
std::vector<BFileRecord> parse_bfile(std::istream& in);

}  // namespace multipart
