#include "multipart/engines.hpp"

#include <stdexcept>
#include <string>

namespace multipart {

StarCache::StarCache() { values_.emplace(Signature{}, BigInt(1)); }

const BigInt* StarCache::find(const Signature& f) const {
    auto it = values_.find(f);
    return it == values_.end() ? nullptr : &it->second;
}

const BigInt& StarCache::store(const Signature& f, BigInt value) {
    return values_.insert_or_assign(f, std::move(value)).first->second;
}

bool StarCache::within_bound() const {
    for (const auto& [sig, value] : values_)
        if (value > sig.smallest_realization())
            return false;
    return true;
}

namespace {

// Factorizations of rem into factors >= lo, nondecreasing.
void list_from(std::uint64_t rem, std::uint64_t lo, Factorization& prefix, FactorizationList& out) {
    for (std::uint64_t d = lo; d <= rem / d; ++d) {
        if (rem % d != 0)
            continue;
        prefix.push_back(d);
        list_from(rem / d, d, prefix, out);
        prefix.pop_back();
    }
    prefix.push_back(rem);
    out.push_back(prefix);
    prefix.pop_back();
}

std::uint64_t count_from(std::uint64_t rem, std::uint64_t lo) {
    std::uint64_t total = 1;  // rem on its own
    for (std::uint64_t d = lo; d <= rem / d; ++d)
        if (rem % d == 0)
            total += count_from(rem / d, d);
    return total;
}

BigInt exact_quotient(const Rational& acc, unsigned divisor, const char* who) {
    Rational q = acc / divisor;
    if (q.get_den() != 1)
        throw IntegralityError(std::string(who) + ": accumulated sum " + acc.get_str() +
                               " not divisible by " + std::to_string(divisor));
    return q.get_num();
}

}  // namespace

FactorizationList brute_force_list(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("brute_force_list: n must be positive");
    FactorizationList out;
    if (n == 1) {
        out.emplace_back();
        return out;
    }
    Factorization prefix;
    list_from(n, 2, prefix, out);
    return out;
}

BigInt brute_force_count(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("brute_force_count: n must be positive");
    if (n == 1)
        return 1;
    return BigInt(static_cast<unsigned long>(count_from(n, 2)));
}

BigInt hs_count(const Signature& f, StarCache& cache) {
    if (const BigInt* hit = cache.find(f))
        return *hit;
    const ExpVec top = f.as_expvec();
    Rational acc = 0;
    for (const ExpVec& b : enumerate_below(f))
        acc += lambda(b) * b.total() * hs_count(Signature::from_coords(top - b), cache);
    return cache.store(f, exact_quotient(acc, f.total(), "hs_count"));
}

BigInt reduced_count(const Signature& f, StarCache& cache, PartitionTable& ptable, ReducedTrace* trace) {
    if (f.empty()) {
        if (trace != nullptr)
            *trace = ReducedTrace{{}, Rational(0), BigInt(1)};
        return 1;
    }
    if (trace == nullptr)
        if (const BigInt* hit = cache.find(f))
            return *hit;

    const ExpVec top = f.as_expvec();
    const unsigned n1 = f[0];
    std::vector<Rational> inner(n1 + 1, Rational(0));
    for (const ExpVec& g : enumerate_below(f)) {
        if (g[0] == 0)
            continue;
        inner[g[0]] += lambda(g) * count(Signature::from_coords(top - g), cache, ptable);
    }

    Rational acc = 0;
    for (unsigned i = 1; i <= n1; ++i)
        acc += i * inner[i];
    BigInt result = exact_quotient(acc, n1, "reduced_count");

    if (trace != nullptr) {
        trace->terms.clear();
        for (unsigned i = 1; i <= n1; ++i)
            trace->terms.push_back({i, inner[i], i * inner[i]});
        trace->total = acc;
        trace->result = result;
    }
    return cache.store(f, std::move(result));
}

TruncatedSeries::TruncatedSeries(ExpVec bound) : bound_(std::move(bound)) {
    coeffs_.emplace(ExpVec(bound_.size()), BigInt(1));
}

void TruncatedSeries::multiply_by_factor(const ExpVec& g, PartitionTable& ptable) {
    require_same_length(g, bound_);
    if (g.is_zero())
        throw std::invalid_argument("multiply_by_factor: zero exponent");
    std::map<ExpVec, BigInt> next = coeffs_;
    for (const auto& [key, c] : coeffs_) {
        ExpVec h = key;
        for (unsigned m = 1;; ++m) {
            h += g;
            if (!leq(h, bound_))
                break;
            next[h] += ptable.value(m) * c;
        }
    }
    coeffs_ = std::move(next);
}

BigInt TruncatedSeries::coefficient(const ExpVec& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

TruncatedSeries gf_series(const ExpVec& f, PartitionTable& ptable) {
    TruncatedSeries series(f);
    for (const ExpVec& g : enumerate_below(f))
        if (is_primitive(g))
            series.multiply_by_factor(g, ptable);
    return series;
}

BigInt gf_count(const Signature& f, PartitionTable& ptable) {
    if (f.empty())
        return 1;
    return gf_series(f.as_expvec(), ptable).coefficient(f.as_expvec());
}

std::optional<BigInt> special_count(const Signature& f, PartitionTable& ptable, StarCache& cache) {
    if (f.empty())
        return BigInt(1);
    if (f.size() == 1)
        return ptable.value(f[0]);
    if (f[0] != 1)
        return std::nullopt;
    if (f.size() == 2) {
        BigInt sum = 0;
        for (unsigned i = 0; i <= f[1]; ++i)
            sum += ptable.value(i);
        return sum;
    }
    // n = p * m with p not dividing m: sum of p*(d) over d | m
    const ExpVec rest(std::vector<unsigned>(f.exps().begin() + 1, f.exps().end()));
    BigInt sum = 1;  // d = 1
    for (const ExpVec& d : enumerate_below(rest))
        sum += count(Signature::from_coords(d), cache, ptable);
    return sum;
}

BigInt count(const Signature& f, StarCache& cache, PartitionTable& ptable) {
    if (const BigInt* hit = cache.find(f))
        return *hit;
    if (auto shortcut = special_count(f, ptable, cache))
        return cache.store(f, std::move(*shortcut));
    return reduced_count(f, cache, ptable);
}

BigInt count(const BigInt& n, StarCache& cache, PartitionTable& ptable) {
    return count(to_signature(factorize(n)), cache, ptable);
}

TermCount term_count(const Signature& f) {
    if (f.empty())
        throw std::invalid_argument("term_count: empty signature");
    TermCount out;
    for (const ExpVec& g : enumerate_below(f)) {
        ++out.hs_terms;
        if (g[0] > 0)
            ++out.reduced_terms;
    }
    out.claimed_difference = 1;
    for (std::size_t j = 1; j < f.size(); ++j)
        out.claimed_difference *= f[j] + 1ULL;
    return out;
}

std::string_view engine_name(Engine e) {
    switch (e) {
    case Engine::Auto: return "auto";
    case Engine::Brute: return "brute";
    case Engine::Hs: return "hs";
    case Engine::Reduced: return "reduced";
    case Engine::Gf: return "gf";
    }
    return "?";
}

std::optional<Engine> parse_engine(std::string_view name) {
    for (Engine e : {Engine::Auto, Engine::Brute, Engine::Hs, Engine::Reduced, Engine::Gf})
        if (engine_name(e) == name)
            return e;
    return std::nullopt;
}

BigInt count_with(Engine engine, const BigInt& n, StarCache& cache, PartitionTable& ptable) {
    if (n <= 0)
        throw std::invalid_argument("count: n must be positive");
    switch (engine) {
    case Engine::Brute:
        if (!n.fits_ulong_p())
            throw std::out_of_range("brute force engine needs n < 2^64");
        return brute_force_count(n.get_ui());
    case Engine::Hs:
        return hs_count(to_signature(factorize(n)), cache);
    case Engine::Reduced:
        return reduced_count(to_signature(factorize(n)), cache, ptable);
    case Engine::Gf:
        return gf_count(to_signature(factorize(n)), ptable);
    case Engine::Auto:
        break;
    }
    return count(n, cache, ptable);
}

}  // namespace multipart
