#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <boost/multiprecision/float128.hpp>
#include <gmpxx.h>

#include "hypeval/rational.hpp"

namespace hypeval {

using Quad = boost::multiprecision::float128;

// Supported mantissa widths.
enum class Precision : int { binary53 = 53, binary64 = 64, binary113 = 113 };

// Smallest supported tier with at least `bits` of mantissa. Throws
// DomainError above 113.
Precision precision_for_bits(int bits);

template <class Real>
struct NumericValue {
    Real value{};
    Real error_estimate{};
};

template <class Real>
inline Real epsilon()
{
    return std::numeric_limits<Real>::epsilon();
}

// Calls f.template operator()<Real>() with the Real type of the tier.
template <class F>
decltype(auto) with_precision(Precision p, F&& f)
{
    switch (p) {
    case Precision::binary64: return f.template operator()<long double>();
    case Precision::binary113: return f.template operator()<Quad>();
    case Precision::binary53: break;
    }
    return f.template operator()<double>();
}

template <class Real>
Real to_real(const mpz_class& z)
{
    using std::ldexp;
    if (z.fits_slong_p()) return Real(z.get_si());
    std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
    constexpr int keep = std::numeric_limits<Real>::digits + 8;
    long shift = std::max(0L, static_cast<long>(bits) - keep);
    mpz_class t;
    mpz_tdiv_q_2exp(t.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    // t has `keep` bits; split into two longs
    mpz_class hi, lo;
    mpz_tdiv_q_2exp(hi.get_mpz_t(), t.get_mpz_t(), 62);
    mpz_tdiv_r_2exp(lo.get_mpz_t(), t.get_mpz_t(), 62);
    Real r = ldexp(Real(hi.get_si()), 62) + Real(lo.get_si());
    return ldexp(r, static_cast<int>(shift));
}

// Correctly scaled conversion; error at most a couple of ulps for any
// magnitude representable in Real.
template <class Real>
Real to_real(const BigRational& q)
{
    using std::ldexp;
    const mpz_class& num = q.get().get_num();
    const mpz_class& den = q.get().get_den();
    if (den == 1) return to_real<Real>(num);
    if (num.fits_slong_p() && den.fits_slong_p()) {
        long n = num.get_si();
        long d = den.get_si();
        constexpr long exact = std::numeric_limits<Real>::digits >= 63 ? std::numeric_limits<long>::max()
                                                                          : (1L << std::numeric_limits<Real>::digits);
        if (n < exact && n > -exact && d < exact) return Real(n) / Real(d);
    }
    long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    long shift = std::numeric_limits<Real>::digits + 8 - (nb - db);
    mpz_class scaled;
    if (shift >= 0)
        mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else
        mpz_tdiv_q_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    return ldexp(to_real<Real>(scaled), static_cast<int>(-shift));
}

template <class Real>
double to_double(const Real& x)
{
    return static_cast<double>(x);
}

// Shortest decimal string that reads back to the same value.
template <class Real>
std::string format_real(const Real& x)
{
    using std::isfinite;
    if (!isfinite(x)) {
        std::ostringstream os;
        os << x;
        return os.str();
    }
    for (int p = 1; p <= std::numeric_limits<Real>::max_digits10; ++p) {
        std::ostringstream os;
        os.precision(p);
        os << x;
        std::string s = os.str();
        if (Real(s.c_str()) == x || p == std::numeric_limits<Real>::max_digits10) return s;
    }
    return {};
}

template <>
std::string format_real<double>(const double& x);
template <>
std::string format_real<long double>(const long double& x);

}  // namespace hypeval
