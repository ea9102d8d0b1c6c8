#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "multipart/arith.hpp"

namespace multipart {

/// Memoized p(n) built by Euler's recurrence n p(n) = sum_{j=1..n} sigma(j) p(n-j).
/// Extension is serialized by an internal lock; value() hands out copies,
/// so readers never observe a table that is being grown.
class PartitionTable {
public:
    PartitionTable();
    PartitionTable(const PartitionTable&) = delete;
    PartitionTable& operator=(const PartitionTable&) = delete;

    /// p(n), extending the table through n if needed.
    BigInt value(std::size_t n);
    /// Number of stored entries, i.e. p(0..size()-1) are known.
    std::size_t size() const;

private:
    void extend_to(std::size_t n);

    mutable std::mutex mu_;
    std::vector<BigInt> values_;
    std::vector<BigInt> sigma_;  // sigma_[j] == sigma(j), sigma_[0] unused
};

/// Throws std::logic_error if the Euler sum is ever not divisible by n.
BigInt partition_p(std::size_t n, PartitionTable& table);

}  // namespace multipart
