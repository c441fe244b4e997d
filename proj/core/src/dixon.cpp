#include "hypeval/dixon.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "hypeval/errors.hpp"
#include "hypeval/hypergeometric.hpp"
#include "hypeval/kummer.hpp"

namespace hypeval {

namespace {

LinearForm lf(const BigRational& q0, const BigRational& qa = 0, const BigRational& qb = 0,
              const BigRational& qc = 0)
{
    return LinearForm(q0, qa, qb, qc);
}

BigRational half(long n) { return BigRational(n, 2); }

const BigRational h(1, 2);

}  // namespace

char dixon_coeff_name(DixonCoeff c) { return c == DixonCoeff::P ? 'P' : 'Q'; }

DixonForm dixon_form(DixonCoeff which, long n)
{
    bool p = which == DixonCoeff::P;
    if (n == -1) return {RatFunc(p ? 2 : 0), std::nullopt};
    if (n >= 0) {
        if (p)
            return {RatFunc(1), SeriesSpec{{lf(half(-n)), lf(half(-(n + 1))), sym_b, sym_c},
                                           {lf(-n), lf(0, h), lf(h, -h, 1, 1)},
                                           BigRational(1)}};
        return {RatFunc(1), SeriesSpec{{lf(half(-(n - 1))), lf(half(-n)), sym_b, sym_c},
                                       {lf(-n), lf(h, h), lf(1, -h, 1, 1)},
                                       BigRational(1)}};
    }
    long N = -n - 1;
    RatFunc den = pochhammer(lf(1, 0, -1), N) * pochhammer(lf(1, 0, 0, -1), N);
    RatFunc four(BigRational(4).pow(N));
    LinearForm bN = sym_b - lf(N);
    LinearForm cN = sym_c - lf(N);
    if (p)
        return {four * pochhammer(lf(1, -h), N) * pochhammer(lf(h, h, -1, -1), N) / den,
                SeriesSpec{{lf(half(-N)), lf(half(-(N - 1))), bN, cN},
                           {lf(1 - N), lf(-N, h), lf(h - BigRational(N), -h, 1, 1)},
                           BigRational(1)}};
    return {-four * pochhammer(lf(h, -h), N) * pochhammer(lf(0, h, -1, -1), N) / den,
            SeriesSpec{{lf(half(-(N - 1))), lf(half(-(N - 2))), bN, cN},
                       {lf(1 - N), lf(h - BigRational(N), h), lf(1 - N, -h, 1, 1)},
                       BigRational(1)}};
}

RatFunc dixon_coeff(DixonCoeff which, long n)
{
    using Key = std::pair<int, long>;
    static std::mutex mutex;
    static std::map<Key, RatFunc> cache;
    Key key{static_cast<int>(which), n};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    DixonForm f = dixon_form(which, n);
    RatFunc r = f.series ? f.prefactor * sum_terminating(*f.series) : f.prefactor;
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(r)).first->second;
}

RatFunc dixon_term(DixonCoeff which, long n, long k)
{
    DixonForm f = dixon_form(which, n);
    if (!f.series) return k == 0 ? f.prefactor : RatFunc();
    return f.prefactor * series_term(*f.series, k);
}

GammaProduct dixon_gamma_term(DixonCoeff which)
{
    LinearForm x = which == DixonCoeff::P ? lf(h, h) : lf(0, h);
    GammaProduct g;
    g.gamma(x).gamma(sym_a - sym_b).gamma(sym_a - sym_c).gamma(x - sym_b - sym_c);
    g.gamma(sym_a, -1).gamma(x - sym_b, -1).gamma(x - sym_c, -1).gamma(sym_a - sym_b - sym_c, -1);
    return g;
}

SeriesSpec dixon_lhs(long n)
{
    return SeriesSpec{{sym_a + lf(n), sym_b, sym_c}, {sym_a - sym_b, sym_a - sym_c}, BigRational(1)};
}

bool dixon_kummer_limit(DixonCoeff which, long n, long k)
{
    if (n < 0) throw DomainError("the Kummer limit is taken for n >= 0");
    Coefficient kc = which == DixonCoeff::P ? Coefficient::P : Coefficient::Q;
    CoeffForm kf = coeff_form(kc, n, CoeffVariant::thm2);
    RatFunc kummer_term = kf.prefactor * series_term(*kf.series, k) * RatFunc(2);
    std::optional<RatFunc> lim = limit_at_infinity(dixon_term(which, n, k), Symbol::c);
    return lim && equal(*lim, kummer_term);
}

template <class Real>
Real gendixon_residual(long n, const Point& p)
{
    using std::abs;
    NumericValue<Real> lhs = eval_series_numeric<Real>(dixon_lhs(n), p);
    Real rhs = 0;
    for (DixonCoeff w : {DixonCoeff::P, DixonCoeff::Q}) {
        RatFunc c = dixon_coeff(w, n);
        if (c.is_zero()) continue;
        rhs += to_real<Real>(c.eval(p)) / 2 * eval_gamma_product<Real>(dixon_gamma_term(w), p).value;
    }
    return abs(lhs.value - rhs) / std::max(Real(1), abs(rhs));
}

template double gendixon_residual<double>(long, const Point&);
template long double gendixon_residual<long double>(long, const Point&);
template Quad gendixon_residual<Quad>(long, const Point&);

}  // namespace hypeval
