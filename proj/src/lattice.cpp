#include "multipart/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace multipart {

Signature::Signature(std::vector<unsigned> exps) : exps_(std::move(exps)) {
    if (std::ranges::find(exps_, 0u) != exps_.end())
        throw std::invalid_argument("Signature: exponents must be positive");
    std::ranges::sort(exps_);
}

Signature Signature::from_coords(const ExpVec& v) {
    std::vector<unsigned> exps;
    exps.reserve(v.size());
    for (unsigned c : v.coords())
        if (c != 0)
            exps.push_back(c);
    return Signature(std::move(exps));
}

unsigned Signature::total() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

std::uint64_t Signature::divisor_count() const {
    std::uint64_t out = 1;
    for (unsigned e : exps_)
        out *= e + 1ULL;
    return out;
}

ExpVec Signature::as_expvec() const { return ExpVec(exps_); }

BigInt Signature::smallest_realization() const {
    BigInt out = 1;
    BigInt p = 2;
    for (auto it = exps_.rbegin(); it != exps_.rend(); ++it) {
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), *it);
        out *= pw;
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    return out;
}

Signature to_signature(const NatFactorization& nf) { return Signature(nf.exps); }

bool ExpVec::is_zero() const {
    return std::ranges::all_of(coords_, [](unsigned c) { return c == 0; });
}

unsigned ExpVec::total() const {
    return std::accumulate(coords_.begin(), coords_.end(), 0u);
}

void require_same_length(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("ExpVec length mismatch");
}

ExpVec& ExpVec::operator+=(const ExpVec& o) {
    require_same_length(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

ExpVec& ExpVec::operator-=(const ExpVec& o) {
    require_same_length(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (o.coords_[i] > coords_[i])
            throw std::invalid_argument("ExpVec subtraction below zero");
        coords_[i] -= o.coords_[i];
    }
    return *this;
}

ExpVec operator*(unsigned m, ExpVec g) {
    for (unsigned& c : g.coords_)
        c *= m;
    return g;
}

bool leq(const ExpVec& g, const ExpVec& f) {
    require_same_length(g, f);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > f[i])
            return false;
    return true;
}

ExpVec meet(const ExpVec& a, const ExpVec& b) {
    require_same_length(a, b);
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::min(a[i], b[i]);
    return out;
}

ExpVec join(const ExpVec& a, const ExpVec& b) {
    require_same_length(a, b);
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

ExpVec divisor_to_expvec(const BigInt& d, const NatFactorization& basis) {
    if (d <= 0 || mpz_divisible_p(basis.n.get_mpz_t(), d.get_mpz_t()) == 0)
        throw std::invalid_argument("divisor_to_expvec: d does not divide n");
    ExpVec out(basis.size());
    BigInt rest = d;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const BigInt& p = basis.primes[i];
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
            rest /= p;
            ++out[i];
        }
    }
    return out;
}

BigInt expvec_to_divisor(const ExpVec& g, const NatFactorization& basis) {
    if (g.size() != basis.size())
        throw std::invalid_argument("expvec_to_divisor: length mismatch");
    BigInt out = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > basis.exps[i])
            throw std::invalid_argument("expvec_to_divisor: exceeds basis exponent");
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), basis.primes[i].get_mpz_t(), g[i]);
        out *= pw;
    }
    return out;
}

unsigned content(const ExpVec& g) {
    if (g.size() == 0 || g.is_zero())
        throw std::invalid_argument("content: zero vector");
    return gcd_all(g.coords());
}

Rational lambda_of_content(unsigned c) {
    if (c == 0)
        throw std::invalid_argument("lambda: undefined for the zero vector");
    Rational out = 0;
    for (unsigned i = 1; i <= c / i; ++i) {
        if (c % i != 0)
            continue;
        out += Rational(1, i);
        if (i != c / i)
            out += Rational(1, c / i);
    }
    return out;
}

Rational lambda(const ExpVec& g) { return lambda_of_content(content(g)); }

bool is_primitive(const ExpVec& g) { return content(g) == 1; }

SectionRange::iterator::iterator(const ExpVec* bound, bool done)
    : bound_(bound), current_(bound->size()), done_(done) {}

SectionRange::iterator& SectionRange::iterator::operator++() {
    // odometer, last coordinate fastest
    std::size_t i = current_.size();
    while (i > 0) {
        --i;
        if (current_[i] < (*bound_)[i]) {
            ++current_[i];
            return *this;
        }
        current_[i] = 0;
    }
    done_ = true;
    return *this;
}

SectionRange::iterator SectionRange::begin() const {
    iterator it(&bound_, false);
    ++it;  // skip the zero vector
    return it;
}

SectionRange enumerate_below(const Signature& f) { return SectionRange(f.as_expvec()); }
SectionRange enumerate_below(const ExpVec& f) { return SectionRange(f); }

}  // namespace multipart
