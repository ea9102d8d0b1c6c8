#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <gmpxx.h>

#include "multipart/arith.hpp"

namespace multipart {

/// Exact fraction, always in lowest terms with a positive denominator.
using Rational = mpq_class;

class ExpVec;

/// Canonical exponent multiset of n: the coefficients of f(x;n) sorted
/// nondecreasing, so exps()[0] is the smallest exponent. The empty
/// signature stands for n = 1.
class Signature {
public:
    Signature() = default;
    /// Sorts the input; throws std::invalid_argument on a zero entry.
    explicit Signature(std::vector<unsigned> exps);
    Signature(std::initializer_list<unsigned> exps)
        : Signature(std::vector<unsigned>(exps)) {}

    /// Drops zero coordinates and sorts. Used to canonicalize f - g.
    static Signature from_coords(const ExpVec& v);

    const std::vector<unsigned>& exps() const { return exps_; }
    std::size_t size() const { return exps_.size(); }
    bool empty() const { return exps_.empty(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    /// Sum of the exponents (the norm of the exponent vector).
    unsigned total() const;
    /// Number of divisors, prod(n_i + 1).
    std::uint64_t divisor_count() const;
    /// The full vector f itself.
    ExpVec as_expvec() const;
    /// Smallest integer with this signature: largest exponent on 2, and so on.
    BigInt smallest_realization() const;

    auto operator<=>(const Signature&) const = default;
    bool operator==(const Signature&) const = default;

private:
    std::vector<unsigned> exps_;
};

Signature to_signature(const NatFactorization& nf);

/// Coefficient vector of g(x) = coords[0] + coords[1] x + ...; all mixed
/// length operations throw std::invalid_argument.
class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(std::size_t length) : coords_(length, 0) {}
    explicit ExpVec(std::vector<unsigned> coords) : coords_(std::move(coords)) {}
    ExpVec(std::initializer_list<unsigned> coords) : coords_(coords) {}

    const std::vector<unsigned>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    unsigned operator[](std::size_t i) const { return coords_[i]; }
    unsigned& operator[](std::size_t i) { return coords_[i]; }
    bool is_zero() const;
    unsigned total() const;

    ExpVec& operator+=(const ExpVec& o);
    /// Throws std::invalid_argument if some coordinate would go negative.
    ExpVec& operator-=(const ExpVec& o);
    friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
    friend ExpVec operator-(ExpVec a, const ExpVec& b) { return a -= b; }
    /// Scalar multiple m * g.
    friend ExpVec operator*(unsigned m, ExpVec g);

    auto operator<=>(const ExpVec&) const = default;
    bool operator==(const ExpVec&) const = default;

private:
    std::vector<unsigned> coords_;
};

void require_same_length(const ExpVec& a, const ExpVec& b);

/// Coordinatewise order: g <= f in every coordinate.
bool leq(const ExpVec& g, const ExpVec& f);
ExpVec meet(const ExpVec& a, const ExpVec& b);
ExpVec join(const ExpVec& a, const ExpVec& b);

/// psi restricted to the divisors of basis.n, and its inverse.
ExpVec divisor_to_expvec(const BigInt& d, const NatFactorization& basis);
BigInt expvec_to_divisor(const ExpVec& g, const NatFactorization& basis);

/// gcd of the coordinates; throws std::invalid_argument for the zero vector.
unsigned content(const ExpVec& g);
/// Sum of 1/i over the divisors i of c.
Rational lambda_of_content(unsigned c);
/// lambda(g) = lambda_of_content(content(g)); zero vector rejected.
Rational lambda(const ExpVec& g);
bool is_primitive(const ExpVec& g);

/// Forward range over every g with 0 < g <= bound, in lexicographic order.
class SectionRange {
public:
    class iterator {
    public:
        using value_type = ExpVec;
        using difference_type = std::ptrdiff_t;
        using reference = const ExpVec&;
        using pointer = const ExpVec*;
        using iterator_category = std::forward_iterator_tag;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || current_ == o.current_); }

    private:
        friend class SectionRange;
        iterator(const ExpVec* bound, bool done);
        const ExpVec* bound_ = nullptr;
        ExpVec current_;
        bool done_ = true;
    };

    explicit SectionRange(ExpVec bound) : bound_(std::move(bound)) {}
    iterator begin() const;
    iterator end() const { return iterator(&bound_, true); }

private:
    ExpVec bound_;
};

SectionRange enumerate_below(const Signature& f);
SectionRange enumerate_below(const ExpVec& f);

}  // namespace multipart

template <>
struct std::hash<multipart::Signature> {
    std::size_t operator()(const multipart::Signature& s) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (unsigned e : s.exps())
            h = (h ^ e) * 0x100000001b3ULL;
        return h;
    }
};

template <>
struct std::hash<multipart::ExpVec> {
    std::size_t operator()(const multipart::ExpVec& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (unsigned e : v.coords())
            h = (h ^ e) * 0x100000001b3ULL;
        return h;
    }
};
