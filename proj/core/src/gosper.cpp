#include "hypeval/gosper.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "hypeval/errors.hpp"
#include "hypeval/hypergeometric.hpp"

namespace hypeval {

namespace {

// positive d only
long floor_div(long n, long d) { return n >= 0 ? n / d : -((-n + d - 1) / d); }
long ceil_div(long n, long d) { return -floor_div(-n, d); }

LinearForm a_plus(const BigRational& q) { return sym_a + LinearForm(q); }

RatFunc sign_pow(long k) { return RatFunc(BigRational(k % 2 == 0 ? 1 : -1)); }

RatFunc compute(GosperCoeff which, long n)
{
    if (n == 0) return RatFunc(which == GosperCoeff::K ? 1 : 0);
    if (n == 1) return RatFunc(which == GosperCoeff::K ? 0 : 1);
    RatFunc disp = which == GosperCoeff::L && n > 1 ? sum_terminating(gosper_4f3(which, n))
                                                    : gosper_explicit_sum(which, n);
    RatFunc third(BigRational(1, 3));
    if (which == GosperCoeff::L && n < 0) third = -third;
    return disp * third;
}

}  // namespace

char gosper_coeff_name(GosperCoeff c) { return c == GosperCoeff::K ? 'K' : 'L'; }

RatFunc gosper_coeff(GosperCoeff which, long n)
{
    using Key = std::pair<int, long>;
    static std::mutex mutex;
    static std::map<Key, RatFunc> cache;
    Key key{static_cast<int>(which), n};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    RatFunc r = compute(which, n);
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(r)).first->second;
}

RatFunc gosper_explicit_sum(GosperCoeff which, long n)
{
    if (n == 0 || n == 1) throw DomainError("no explicit sum for n = 0, 1");
    RatFunc total;
    if (which == GosperCoeff::K && n > 1) {
        for (long k = ceil_div(n, 3); k <= floor_div(n, 2); ++k) {
            BigRational c = BigRational(27, 4).pow(k) * BigRational(n) * factorial(k - 1) /
                            (factorial(n - 2 * k) * factorial(3 * k - n));
            total += RatFunc(c) * pochhammer(a_plus(BigRational(1, 2)), k) / pochhammer(a_plus(1), k);
        }
        return sign_pow(n) * total;
    }
    if (which == GosperCoeff::K) {
        long m = -n;
        for (long k = 0; k <= m / 3; ++k) {
            BigRational c = BigRational(-4, 27).pow(k) * BigRational(m) * factorial(m - 2 * k - 1) /
                            (factorial(m - 3 * k) * factorial(k));
            total += RatFunc(c) * pochhammer(-sym_a, k) / pochhammer(LinearForm(BigRational(1, 2)) - sym_a, k);
        }
        return total;
    }
    if (n > 1) throw DomainError("L(n) for n > 1 has only the 4F3 form");
    long m = -n;
    for (long k = ceil_div(m + 1, 3); k <= (m + 1) / 2; ++k) {
        BigRational c = BigRational(27, 4).pow(k) * BigRational(m + 1) * factorial(k - 1) /
                        (factorial(m - 2 * k + 1) * factorial(3 * k - m - 1));
        total += RatFunc(c) * pochhammer(LinearForm(BigRational(-1, 2)) - sym_a, k) / pochhammer(-sym_a, k);
    }
    return sign_pow(m) * total;
}

SeriesSpec gosper_4f3(GosperCoeff which, long n)
{
    if (which == GosperCoeff::L && n > 1)
        return SeriesSpec{{LinearForm(BigRational(-(n - 1), 3)), LinearForm(BigRational(-(n - 2), 3)),
                           LinearForm(BigRational(-(n - 3), 3)), a_plus(1)},
                          {LinearForm(BigRational(-(n - 2), 2)), LinearForm(BigRational(-(n - 3), 2)),
                           a_plus(BigRational(3, 2))},
                          BigRational(1)};
    if (which == GosperCoeff::K && n < 0) {
        long m = -n;
        return SeriesSpec{{LinearForm(BigRational(-m, 3)), LinearForm(BigRational(-(m - 1), 3)),
                           LinearForm(BigRational(-(m - 2), 3)), -sym_a},
                          {LinearForm(BigRational(-(m - 1), 2)), LinearForm(BigRational(-(m - 2), 2)),
                           LinearForm(BigRational(1, 2)) - sym_a},
                          BigRational(1)};
    }
    throw DomainError("no 4F3 form for this coefficient and n");
}

GammaProduct gosper_gamma_term(GosperCoeff which, long n)
{
    BigRational half_n(n, 2);
    BigRational third_n(n, 3);
    GammaProduct g;
    g.gamma(a_plus(BigRational(5, 4) + half_n)).gamma(a_plus(BigRational(3, 4) + half_n));
    if (which == GosperCoeff::K) {
        // 2^(n+3/2)/3^(n+1) = 2^(n+1) sqrt(2) / 3^(n+1)
        g.scale(RatFunc(BigRational(2, 3).pow(n + 1)));
        g.power(BigRational(2), LinearForm(BigRational(1, 2)));
        g.gamma(a_plus(BigRational(1, 2)));
        g.gamma(a_plus(BigRational(7, 6) + third_n), -1)
            .gamma(a_plus(BigRational(5, 6) + third_n), -1)
            .gamma(a_plus(BigRational(1, 2) + third_n), -1);
        return g;
    }
    // -(-3)^(n-2) 2^(3/2) = -(-3)^(n-2) 2 sqrt(2)
    g.scale(RatFunc(-BigRational(-3).pow(n - 2) * BigRational(2)));
    g.power(BigRational(2), LinearForm(BigRational(1, 2)));
    g.gamma(a_plus(1));
    g.gamma(a_plus(BigRational(3, 2)), -1)
        .gamma(a_plus(BigRational(1, 2) + half_n), -1)
        .gamma(a_plus(1 + half_n), -1);
    return g;
}

SeriesSpec gosper_lhs(long n)
{
    return SeriesSpec{{-sym_a, LinearForm(BigRational(1, 2))},
                      {sym_a * BigRational(2) + LinearForm(BigRational(3, 2) + BigRational(n))},
                      BigRational(1, 4)};
}

RatFunc gosper_normalized(GosperCoeff which, long n)
{
    LinearForm x = sym_a * BigRational(2) + LinearForm(BigRational(3, 2));
    if (which == GosperCoeff::K)
        return pochhammer_signed(x, n) / pochhammer_signed(sym_a * BigRational(3) + LinearForm(BigRational(3, 2)), n) *
               gosper_coeff(which, n);
    return RatFunc(BigRational(-3).pow(n)) * pochhammer_signed(x, n) /
           pochhammer_signed(sym_a * BigRational(2) + LinearForm(1), n) * gosper_coeff(which, n);
}

template <class Real>
Real gengosper_residual(long n, const Point& p)
{
    using std::abs;
    NumericValue<Real> lhs = eval_series_numeric<Real>(gosper_lhs(n), p);
    Real rhs = 0;
    for (GosperCoeff w : {GosperCoeff::K, GosperCoeff::L}) {
        RatFunc c = gosper_coeff(w, n);
        if (c.is_zero()) continue;
        rhs += to_real<Real>(c.eval(p)) * eval_gamma_product<Real>(gosper_gamma_term(w, n), p).value;
    }
    return abs(lhs.value - rhs) / std::max(Real(1), abs(rhs));
}

template double gengosper_residual<double>(long, const Point&);
template long double gengosper_residual<long double>(long, const Point&);
template Quad gengosper_residual<Quad>(long, const Point&);

}  // namespace hypeval
