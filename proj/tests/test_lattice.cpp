#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "multipart/arith.hpp"
#include "multipart/lattice.hpp"

using namespace multipart;

namespace {

std::vector<ExpVec> collect(const SectionRange& r) { return {r.begin(), r.end()}; }

ExpVec random_vec(std::mt19937& rng, std::size_t k, unsigned hi) {
    std::uniform_int_distribution<unsigned> d(0, hi);
    ExpVec v(k);
    for (std::size_t i = 0; i < k; ++i)
        v[i] = d(rng);
    return v;
}

}  // namespace

TEST_CASE("to_signature sorts exponents") {
    CHECK(to_signature(factorize(std::uint64_t{12})).exps() == std::vector<unsigned>{1, 2});
    CHECK(to_signature(factorize(std::uint64_t{1})).empty());
    CHECK(to_signature(factorize(std::uint64_t{72})).exps() == std::vector<unsigned>{2, 3});
    CHECK_THROWS_AS((Signature({1, 0})), std::invalid_argument);
    CHECK(Signature::from_coords(ExpVec{0, 3, 0, 1}) == Signature{1, 3});
    CHECK(Signature{2, 3}.smallest_realization() == 72);
    CHECK(Signature{1, 1, 1}.smallest_realization() == 30);
}

TEST_CASE("order, meet, join") {
    CHECK(leq(ExpVec{1, 0}, ExpVec{2, 1}));
    CHECK_FALSE(leq(ExpVec{0, 2}, ExpVec{2, 1}));
    CHECK(meet(ExpVec{2, 1}, ExpVec{1, 3}) == ExpVec{1, 1});
    CHECK(join(ExpVec{2, 1}, ExpVec{1, 3}) == ExpVec{2, 3});
    CHECK_THROWS_AS((leq(ExpVec{1}, ExpVec{1, 1})), std::invalid_argument);
    CHECK_THROWS_AS((meet(ExpVec{1}, ExpVec{1, 1})), std::invalid_argument);
    CHECK_THROWS_AS((ExpVec{1} + ExpVec{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS((ExpVec{0, 1} - ExpVec{1, 1}), std::invalid_argument);
}

TEST_CASE("partial order and lattice-ordered semigroup laws on random vectors") {
    std::mt19937 rng(20061014);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t k = 1 + trial % 4;
        const ExpVec f = random_vec(rng, k, 3), g = random_vec(rng, k, 3), h = random_vec(rng, k, 3);
        REQUIRE(leq(g, g));
        REQUIRE(meet(g, g) == g);
        REQUIRE(join(g, g) == g);
        if (leq(f, g) && leq(g, f))
            REQUIRE(f == g);
        if (leq(f, g) && leq(g, h))
            REQUIRE(leq(f, h));
        REQUIRE(f + join(g, h) == join(f + g, f + h));
        REQUIRE(f + meet(g, h) == meet(f + g, f + h));
        REQUIRE(leq(meet(g, h), g));
        REQUIRE(leq(g, join(g, h)));
    }
}

TEST_CASE("divisor <-> ExpVec map") {
    const NatFactorization b12 = factorize(std::uint64_t{12});
    CHECK(divisor_to_expvec(6, b12) == ExpVec{1, 1});
    CHECK(divisor_to_expvec(1, b12) == ExpVec{0, 0});
    CHECK(expvec_to_divisor(ExpVec{2, 1}, b12) == 12);
    CHECK_THROWS_AS(divisor_to_expvec(5, b12), std::invalid_argument);
    CHECK_THROWS_AS((expvec_to_divisor(ExpVec{3, 0}, b12)), std::invalid_argument);
    CHECK_THROWS_AS((expvec_to_divisor(ExpVec{1}, b12)), std::invalid_argument);

    const NatFactorization b36 = factorize(std::uint64_t{36});
    for (const BigInt& a : divisors(BigInt(36)))
        for (const BigInt& c : divisors(BigInt(36))) {
            const ExpVec ia = divisor_to_expvec(a, b36), ic = divisor_to_expvec(c, b36);
            REQUIRE(expvec_to_divisor(ia, b36) == a);
            if (mpz_divisible_p(b36.n.get_mpz_t(), BigInt(a * c).get_mpz_t()) != 0)
                REQUIRE(divisor_to_expvec(a * c, b36) == ia + ic);
        }
}

TEST_CASE("content and lambda") {
    CHECK(content(ExpVec{2, 0}) == 2);
    CHECK(content(ExpVec{1, 1}) == 1);
    CHECK(content(ExpVec{4, 2, 6}) == 2);
    CHECK(content(ExpVec{0, 1}) == 1);
    CHECK_THROWS_AS((content(ExpVec{0, 0})), std::invalid_argument);

    CHECK(lambda(ExpVec{2, 0}) == Rational(3, 2));
    CHECK(lambda(ExpVec{1, 1}) == 1);
    CHECK(lambda(ExpVec{6}) == 2);
    CHECK_THROWS_AS((lambda(ExpVec{0})), std::invalid_argument);

    CHECK(is_primitive(ExpVec{1, 1}));
    CHECK_FALSE(is_primitive(ExpVec{2, 0}));
    CHECK(is_primitive(ExpVec{2, 1}));
    CHECK_THROWS_AS((is_primitive(ExpVec{0, 0})), std::invalid_argument);
}

TEST_CASE("lambda depends only on content; prime content q gives 1 + 1/q") {
    for (unsigned q : {2u, 3u, 5u, 7u, 11u, 13u})
        CHECK(lambda_of_content(q) == Rational(q + 1, q));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        ExpVec g = random_vec(rng, 3, 12);
        if (g.is_zero())
            continue;
        const unsigned c = content(g);
        // brute-force reciprocal sum
        Rational expected = 0;
        for (unsigned i = 1; i <= c; ++i)
            if (c % i == 0)
                expected += Rational(1, i);
        REQUIRE(lambda(g) == expected);
        REQUIRE(lambda(ExpVec{c}) == lambda(g));
    }
}

TEST_CASE("primitive elements below 2 + x") {
    std::vector<ExpVec> prim;
    for (const ExpVec& g : enumerate_below(ExpVec{2, 1}))
        if (is_primitive(g))
            prim.push_back(g);
    // 1, x, 1 + x, 2 + x
    const std::set<ExpVec> expected{ExpVec{1, 0}, ExpVec{0, 1}, ExpVec{1, 1}, ExpVec{2, 1}};
    CHECK(std::set<ExpVec>(prim.begin(), prim.end()) == expected);
    CHECK(prim.size() == 4);
}

TEST_CASE("enumerate_below") {
    CHECK(collect(enumerate_below(Signature{1, 2})) ==
          std::vector<ExpVec>{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
    CHECK(collect(enumerate_below(Signature{1})) == std::vector<ExpVec>{{1}});
    CHECK(collect(enumerate_below(Signature{2, 3})).size() == 11);
    CHECK(collect(enumerate_below(Signature{})).empty());

    for (const Signature& f : {Signature{1, 1, 1}, Signature{2, 2, 3}, Signature{4}, Signature{1, 2, 3, 4}}) {
        const auto all = collect(enumerate_below(f));
        REQUIRE(all.size() == f.divisor_count() - 1);
        REQUIRE(std::is_sorted(all.begin(), all.end()));
        REQUIRE(std::set<ExpVec>(all.begin(), all.end()).size() == all.size());
        for (const ExpVec& g : all) {
            REQUIRE_FALSE(g.is_zero());
            REQUIRE(leq(g, f.as_expvec()));
        }
    }
}

TEST_CASE("lattice isomorphism with divisors for n <= 1000") {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        const NatFactorization basis = factorize(n);
        const NatFactorization square = factorize(n * n);  // same primes, room for products
        const auto ds = divisors(BigInt(static_cast<unsigned long>(n)));
        for (const BigInt& a : ds)
            for (const BigInt& b : ds) {
                const ExpVec ia = divisor_to_expvec(a, basis), ib = divisor_to_expvec(b, basis);
                BigInt g, l;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                REQUIRE(divisor_to_expvec(g, basis) == meet(ia, ib));
                REQUIRE(divisor_to_expvec(l, basis) == join(ia, ib));
                REQUIRE((mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0) == leq(ia, ib));
                REQUIRE(divisor_to_expvec(a * b, square) == ia + ib);
            }
    }
}
