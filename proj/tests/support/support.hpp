#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "hypeval/linear_form.hpp"
#include "hypeval/numeric.hpp"
#include "hypeval/poly.hpp"
#include "hypeval/ratfunc.hpp"

namespace testing_support {

using namespace hypeval;

// HYPEVAL_SEED when set, otherwise a fixed value so runs are reproducible.
inline std::uint64_t base_seed()
{
    if (const char* s = std::getenv("HYPEVAL_SEED"); s && *s) return std::strtoull(s, nullptr, 10);
    return 20240611;
}

template <class Real>
Real from_decimal(const char* s)
{
    if constexpr (std::is_same_v<Real, double>) return std::strtod(s, nullptr);
    else if constexpr (std::is_same_v<Real, long double>) return std::strtold(s, nullptr);
    else return Real(s);
}

template <class Real>
Real rel_err(const Real& x, const Real& ref)
{
    using std::abs;
    return abs(x - ref) / std::max(Real(1), abs(ref));
}

inline BigRational q(const char* s) { return BigRational::parse(s); }

// Small random objects for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return rng_() & 1U; }

    BigRational rational(long num_bound = 20, long den_bound = 9)
    {
        return BigRational(integer(-num_bound, num_bound), integer(1, den_bound));
    }
    BigRational nonzero_rational(long num_bound = 20, long den_bound = 9)
    {
        for (;;) {
            BigRational r = rational(num_bound, den_bound);
            if (!r.is_zero()) return r;
        }
    }

    LinearForm linear_form()
    {
        return LinearForm(rational(), rational(4, 3), rational(4, 3), coin() ? rational(4, 3) : BigRational(0));
    }

    // Up to `terms` monomials of total degree <= max_deg in a, b (and c).
    MultiPoly poly(int terms = 4, int max_deg = 2)
    {
        MultiPoly p;
        for (int i = 0; i < terms; ++i) {
            MultiPoly m(rational(9, 4));
            for (Symbol s : {Symbol::a, Symbol::b, Symbol::c}) {
                long e = integer(0, max_deg);
                if (s == Symbol::c && coin()) e = 0;
                for (long k = 0; k < e; ++k) m = m * MultiPoly::variable(s);
            }
            p = p + m;
        }
        return p;
    }
    MultiPoly nonzero_poly(int terms = 3, int max_deg = 2)
    {
        for (;;) {
            MultiPoly p = poly(terms, max_deg);
            if (!p.is_zero()) return p;
        }
    }

    // Numerator over a product of one or two linear factors.
    RatFunc ratfunc()
    {
        RatFunc f(poly());
        int k = static_cast<int>(integer(0, 2));
        for (int i = 0; i < k; ++i) {
            LinearForm d = linear_form();
            if (d.is_constant() && d.constant().is_zero()) continue;
            f /= RatFunc(d);
        }
        return f;
    }

    Point point() { return Point(rational(), rational(), rational()); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Runs `body(gen, i)` for `cases` generated cases; failures name the seed
// and case index so they can be replayed with HYPEVAL_SEED.
template <class F>
void for_all(int cases, F&& body, std::uint64_t salt = 0)
{
    std::uint64_t seed = base_seed() ^ (salt * 0x9E3779B97F4A7C15ULL);
    Gen gen(seed);
    for (int i = 0; i < cases; ++i) {
        SCOPED_TRACE("property case " + std::to_string(i) + ", HYPEVAL_SEED=" + std::to_string(base_seed()));
        body(gen, i);
        if (::testing::Test::HasFatalFailure()) return;
    }
}

}  // namespace testing_support
