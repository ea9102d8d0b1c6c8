#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace multipart {

using BigInt = mpz_class;

/// Prime factorization n = primes[0]^exps[0] * ... * primes[k-1]^exps[k-1].
/// Primes are strictly increasing and every exponent is at least one;
/// n = 1 has empty lists.
struct NatFactorization {
    BigInt n{1};
    std::vector<BigInt> primes;
    std::vector<unsigned> exps;

    std::size_t size() const { return primes.size(); }
    /// Recomposes the product of primes[i]^exps[i].
    BigInt recompose() const;
};

/// Read-only smallest-prime-factor table for [0, limit).
class SpfSieve {
public:
    explicit SpfSieve(std::uint32_t limit);

    std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size()); }
    bool covers(std::uint64_t n) const { return n < spf_.size(); }
    /// Smallest prime factor of 2 <= n < limit().
    std::uint32_t smallest_factor(std::uint64_t n) const { return spf_[n]; }

private:
    std::vector<std::uint32_t> spf_;
};

inline constexpr std::uint32_t kDefaultSieveLimit = 1'000'000;

/// Sieve limit from MULTIPART_SIEVE_LIMIT, or kDefaultSieveLimit when
/// the variable is unset or not a positive integer.
std::uint32_t sieve_limit_from_env();

/// Process-wide sieve, built on first use with sieve_limit_from_env().
const SpfSieve& default_sieve();

/// Throws std::invalid_argument for n = 0.
NatFactorization factorize(std::uint64_t n);
NatFactorization factorize(const BigInt& n);

/// All divisors in increasing order; throws std::invalid_argument for n = 0.
std::vector<BigInt> divisors(const BigInt& n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Sum of divisors; throws std::invalid_argument for j = 0.
BigInt sigma(std::uint64_t j);

/// gcd of the entries with gcd(0, a) = a. Throws std::invalid_argument
/// when the list is empty or all entries are zero.
unsigned gcd_all(std::span<const unsigned> values);

}  // namespace multipart
