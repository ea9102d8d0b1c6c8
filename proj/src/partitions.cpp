#include "multipart/partitions.hpp"

#include <stdexcept>
#include <string>

#include "multipart/errors.hpp"

namespace multipart {

PartitionTable::PartitionTable() : values_{BigInt(1)}, sigma_{BigInt(0)} {}

std::size_t PartitionTable::size() const {
    std::lock_guard lock(mu_);
    return values_.size();
}

BigInt PartitionTable::value(std::size_t n) {
    std::lock_guard lock(mu_);
    if (n >= values_.size())
        extend_to(n);
    return values_[n];
}

void PartitionTable::extend_to(std::size_t n) {
    values_.reserve(n + 1);
    sigma_.reserve(n + 1);
    for (std::size_t m = values_.size(); m <= n; ++m) {
        sigma_.push_back(sigma(m));
        BigInt acc = 0;
        for (std::size_t j = 1; j <= m; ++j)
            acc += sigma_[j] * values_[m - j];
        if (mpz_divisible_ui_p(acc.get_mpz_t(), m) == 0)
            throw IntegralityError("partition_p: Euler sum not divisible by n = " + std::to_string(m));
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), m);
        values_.push_back(std::move(acc));
    }
}

BigInt partition_p(std::size_t n, PartitionTable& table) { return table.value(n); }

}  // namespace multipart
