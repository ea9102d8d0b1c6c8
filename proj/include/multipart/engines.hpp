#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "multipart/arith.hpp"
#include "multipart/errors.hpp"
#include "multipart/lattice.hpp"
#include "multipart/partitions.hpp"

namespace multipart {

/// Memoized p* values keyed on canonical signatures. Seeded with
/// p*(1) = 1. Not synchronized: one writer per cache.
class StarCache {
public:
    StarCache();

    const BigInt* find(const Signature& f) const;
    const BigInt& store(const Signature& f, BigInt value);
    std::size_t size() const { return values_.size(); }
    /// True iff every entry satisfies p*(m) <= m for the smallest m with
    /// that signature.
    bool within_bound() const;

private:
    std::unordered_map<Signature, BigInt> values_;
};

using Factorization = std::vector<std::uint64_t>;
/// Each factorization nondecreasing; the list in lexicographic order.
using FactorizationList = std::vector<Factorization>;

FactorizationList brute_force_list(std::uint64_t n);
BigInt brute_force_count(std::uint64_t n);

/// Corrected Harris-Subbarao recurrence:
///   p*(A) |A| = sum_{0 < B <= A} p*(A - B) lambda(B) |B|,  |A| = sum of A_j.
BigInt hs_count(const Signature& f, StarCache& cache);

/// One outer summand of the reduced recurrence: inner_sum is
/// sum_{d} lambda(p_1^i d) p*(n / (p_1^i d)), weighted = index * inner_sum.
struct ReducedTerm {
    unsigned index = 0;
    Rational inner_sum;
    Rational weighted;
};

struct ReducedTrace {
    std::vector<ReducedTerm> terms;
    Rational total;  // p*(n) * n_1
    BigInt result;
};

/// p*(n) n_1 = sum_{i=1..n_1} i * sum_{d | n / p_1^{n_1}} lambda(p_1^i d) p*(n / (p_1^i d)),
/// with n_1 the smallest exponent. Subproblems go through count().
/// Passing a trace forces the top level to be recomputed and recorded.
BigInt reduced_count(const Signature& f, StarCache& cache, PartitionTable& ptable,
                     ReducedTrace* trace = nullptr);

/// Formal series over exponent vectors, truncated to keys <= bound.
class TruncatedSeries {
public:
    /// The series 1 (zero vector maps to 1).
    explicit TruncatedSeries(ExpVec bound);

    /// Multiplies by 1 + sum_{m >= 1} p(m) e^{m g}, dropping keys above bound.
    void multiply_by_factor(const ExpVec& g, PartitionTable& ptable);
    BigInt coefficient(const ExpVec& key) const;
    const std::map<ExpVec, BigInt>& terms() const { return coeffs_; }
    const ExpVec& bound() const { return bound_; }

private:
    ExpVec bound_;
    std::map<ExpVec, BigInt> coeffs_;
};

/// Product over primitive 0 < g <= f of the partition factors for g.
/// f need not be sorted.
TruncatedSeries gf_series(const ExpVec& f, PartitionTable& ptable);
BigInt gf_count(const Signature& f, PartitionTable& ptable);

/// Closed forms: [n] -> p(n); [1, n] -> sum_{i<=n} p(i);
/// [1, rest...] -> sum of p*(d) over divisors d of the cofactor.
std::optional<BigInt> special_count(const Signature& f, PartitionTable& ptable, StarCache& cache);

/// Dispatcher: cache, then special_count, then reduced_count.
BigInt count(const Signature& f, StarCache& cache, PartitionTable& ptable);
BigInt count(const BigInt& n, StarCache& cache, PartitionTable& ptable);

struct TermCount {
    std::uint64_t hs_terms = 0;
    std::uint64_t reduced_terms = 0;
    /// prod_{j>=2}(n_j + 1), the difference claimed in the literature.
    std::uint64_t claimed_difference = 0;

    std::int64_t measured_difference() const {
        return static_cast<std::int64_t>(hs_terms) - static_cast<std::int64_t>(reduced_terms);
    }
};

/// Counts summands of both recurrences by enumeration. f must be nonempty.
TermCount term_count(const Signature& f);

enum class Engine { Auto, Brute, Hs, Reduced, Gf };

std::string_view engine_name(Engine e);
std::optional<Engine> parse_engine(std::string_view name);

/// Runs one engine on n. Brute force needs n to fit in 64 bits
/// (std::out_of_range otherwise).
BigInt count_with(Engine engine, const BigInt& n, StarCache& cache, PartitionTable& ptable);

/// Owns a cache and partition table for callers that only want p*(n).
class Session {
public:
    BigInt count(const BigInt& n) { return multipart::count(n, cache_, ptable_); }
    BigInt count(const Signature& f) { return multipart::count(f, cache_, ptable_); }
    StarCache& cache() { return cache_; }
    PartitionTable& ptable() { return ptable_; }

private:
    StarCache cache_;
    PartitionTable ptable_;
};

}  // namespace multipart
