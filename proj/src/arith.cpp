#include "multipart/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace multipart {

BigInt NatFactorization::recompose() const {
    BigInt out = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), primes[i].get_mpz_t(), exps[i]);
        out *= pw;
    }
    return out;
}

SpfSieve::SpfSieve(std::uint32_t limit) : spf_(std::max<std::uint32_t>(limit, 2), 0) {
    const std::uint64_t size = spf_.size();
    for (std::uint64_t i = 2; i < size; ++i) {
        if (spf_[i] != 0)
            continue;
        for (std::uint64_t j = i; j < size; j += i)
            if (spf_[j] == 0)
                spf_[j] = static_cast<std::uint32_t>(i);
    }
}

std::uint32_t sieve_limit_from_env() {
    const char* raw = std::getenv("MULTIPART_SIEVE_LIMIT");
    if (raw == nullptr || *raw == '\0')
        return kDefaultSieveLimit;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0 || v > 0xffffffffULL)
        return kDefaultSieveLimit;
    return static_cast<std::uint32_t>(v);
}

const SpfSieve& default_sieve() {
    static const SpfSieve sieve(sieve_limit_from_env());
    return sieve;
}

namespace {

void push_factor(NatFactorization& nf, const BigInt& p) {
    if (!nf.primes.empty() && nf.primes.back() == p)
        ++nf.exps.back();
    else {
        nf.primes.push_back(p);
        nf.exps.push_back(1);
    }
}

// Trial division for machine-word inputs past the sieve.
void trial_divide(NatFactorization& nf, std::uint64_t m) {
    const SpfSieve& sieve = default_sieve();
    for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
        if (sieve.covers(m)) {
            break;
        }
        while (m % p == 0) {
            push_factor(nf, BigInt(static_cast<unsigned long>(p)));
            m /= p;
        }
    }
    while (m > 1 && sieve.covers(m)) {
        const std::uint32_t p = sieve.smallest_factor(m);
        push_factor(nf, BigInt(static_cast<unsigned long>(p)));
        m /= p;
    }
    if (m > 1)
        push_factor(nf, BigInt(static_cast<unsigned long>(m)));
}

}  // namespace

NatFactorization factorize(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("factorize: n must be positive");
    NatFactorization nf;
    nf.n = BigInt(static_cast<unsigned long>(n));
    trial_divide(nf, n);
    return nf;
}

NatFactorization factorize(const BigInt& n) {
    if (n <= 0)
        throw std::invalid_argument("factorize: n must be positive");
    if (n.fits_ulong_p())
        return factorize(static_cast<std::uint64_t>(n.get_ui()));

    NatFactorization nf;
    nf.n = n;
    BigInt m = n;
    BigInt p = 2;
    while (p * p <= m) {
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
            push_factor(nf, p);
            m /= p;
        }
        if (m.fits_ulong_p()) {
            NatFactorization rest = factorize(static_cast<std::uint64_t>(m.get_ui()));
            for (std::size_t i = 0; i < rest.primes.size(); ++i)
                for (unsigned e = 0; e < rest.exps[i]; ++e)
                    push_factor(nf, rest.primes[i]);
            return nf;
        }
        p += (p == 2 ? 1 : 2);
    }
    if (m > 1)
        push_factor(nf, m);
    return nf;
}

std::vector<BigInt> divisors(const BigInt& n) {
    const NatFactorization nf = factorize(n);
    std::vector<BigInt> out{BigInt(1)};
    for (std::size_t i = 0; i < nf.size(); ++i) {
        const std::size_t base = out.size();
        BigInt pw = 1;
        for (unsigned e = 1; e <= nf.exps[i]; ++e) {
            pw *= nf.primes[i];
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> out;
    for (const BigInt& d : divisors(BigInt(static_cast<unsigned long>(n))))
        out.push_back(d.get_ui());
    return out;
}

BigInt sigma(std::uint64_t j) {
    if (j == 0)
        throw std::invalid_argument("sigma: j must be positive");
    const NatFactorization nf = factorize(j);
    BigInt out = 1;
    for (std::size_t i = 0; i < nf.size(); ++i) {
        // 1 + p + ... + p^e
        BigInt term = 1, pw = 1;
        for (unsigned e = 1; e <= nf.exps[i]; ++e) {
            pw *= nf.primes[i];
            term += pw;
        }
        out *= term;
    }
    return out;
}

unsigned gcd_all(std::span<const unsigned> values) {
    if (values.empty())
        throw std::invalid_argument("gcd_all: empty list");
    unsigned g = 0;
    for (unsigned v : values)
        g = std::gcd(g, v);
    if (g == 0)
        throw std::invalid_argument("gcd_all: all entries are zero");
    return g;
}

}  // namespace multipart
