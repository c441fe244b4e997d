#include "hypeval/kummer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "hypeval/errors.hpp"
#include "hypeval/hypergeometric.hpp"

namespace hypeval {

namespace {

long floor_half(long n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }
long ceil_half(long n) { return -floor_half(-n); }

BigRational half(long n) { return BigRational(n, 2); }

LinearForm lf(const BigRational& q0, const BigRational& qa = 0, const BigRational& qb = 0)
{
    return LinearForm(q0, qa, qb);
}

// Frequently used affine forms.
const LinearForm a_half = lf(0, BigRational(1, 2));            // a/2
const LinearForm a1_half = lf(BigRational(1, 2), BigRational(1, 2));  // (a+1)/2

SeriesSpec spec3f2(std::vector<LinearForm> up, std::vector<LinearForm> lo)
{
    return SeriesSpec{std::move(up), std::move(lo), BigRational(1)};
}

RatFunc pow2(long e) { return RatFunc(BigRational(2).pow(e)); }

CoeffForm thm1(Coefficient which, long n)
{
    if (which == Coefficient::P)
        return {pow2(-(n + 1)), spec3f2({half(-n), half(-(n + 1)), a_half - sym_b}, {half(1), a_half})};
    if (n == -1) return {RatFunc(0), std::nullopt};
    return {RatFunc(BigRational(n + 1)) * pow2(-(n + 1)),
            spec3f2({half(-(n - 1)), half(-n), a1_half - sym_b}, {half(3), a1_half})};
}

CoeffForm thm2(Coefficient which, long n)
{
    if (which == Coefficient::P)
        return {RatFunc(BigRational(1, 2)), spec3f2({half(-n), half(-(n + 1)), sym_b}, {LinearForm(-n), a_half})};
    return {RatFunc(BigRational(1, 2)), spec3f2({half(-(n - 1)), half(-n), sym_b}, {LinearForm(-n), a1_half})};
}

CoeffForm neg(Coefficient which, long n)
{
    long N = -n - 1;
    if (which == Coefficient::P) {
        RatFunc pre = pow2(N) * pochhammer(lf(1, BigRational(-1, 2)), N) / pochhammer(lf(1, 0, -1), N);
        return {pre, spec3f2({half(-N), half(-(N - 1)), a_half - sym_b}, {half(1), a_half - LinearForm(N)})};
    }
    if (N == 0) return {RatFunc(0), std::nullopt};
    RatFunc pre = RatFunc(BigRational(-N)) * pow2(N) * pochhammer(lf(BigRational(1, 2), BigRational(-1, 2)), N) /
                  pochhammer(lf(1, 0, -1), N);
    return {pre, spec3f2({half(-(N - 1)), half(-(N - 2)), a1_half - sym_b}, {half(3), a1_half - LinearForm(N)})};
}

RatFunc ratio_of_factorials(long num, long den)
{
    return RatFunc(factorial(num) / factorial(den));
}

CoeffForm alt(CoeffVariant v, long n)
{
    long fl = floor_half(n);
    long ce = ceil_half(n);
    switch (v) {
    case CoeffVariant::alt_a: {
        RatFunc pre = ratio_of_factorials(fl, n) * RatFunc(BigRational(1, 2)) *
                      pochhammer(lf(BigRational(1, 2), BigRational(-1, 2), 1), ce);
        return {pre, spec3f2({LinearForm(-ce), a1_half + LinearForm(fl), a_half - sym_b},
                             {a_half, a1_half - LinearForm(ce) - sym_b})};
    }
    case CoeffVariant::alt_b: {
        RatFunc pre = pow2(-(n + 1)) * pochhammer(sym_b, ce) / pochhammer(a_half, ce);
        return {pre, spec3f2({LinearForm(-ce), LinearForm(1 + fl), a_half - sym_b},
                             {half(1), lf(1 - ce, 0, -1)})};
    }
    case CoeffVariant::alt_c: {
        RatFunc pre = ratio_of_factorials(ce, n) * RatFunc(BigRational(1, 2)) *
                      pochhammer(lf(1, BigRational(-1, 2), 1), fl);
        return {pre, spec3f2({LinearForm(-fl), a_half + LinearForm(ce), a1_half - sym_b},
                             {a1_half, a_half - LinearForm(fl) - sym_b})};
    }
    case CoeffVariant::alt_d: {
        RatFunc pre = RatFunc(BigRational(n + 1)) * pow2(-(n + 1)) * pochhammer(sym_b, fl) / pochhammer(a1_half, fl);
        return {pre, spec3f2({LinearForm(-fl), LinearForm(1 + ce), a1_half - sym_b},
                             {half(3), lf(1 - fl, 0, -1)})};
    }
    default: break;
    }
    throw VariantOutOfRange("not an alternative form");
}

void require_range(Coefficient which, long n, CoeffVariant v)
{
    if (!variant_in_range(which, n, v))
        throw VariantOutOfRange(std::string(1, coefficient_name(which)) + "(" + std::to_string(n) + ") has no " +
                                std::string(variant_name(v)) + " form");
}

RatFunc value_of(const CoeffForm& f)
{
    if (!f.series) return f.prefactor;
    return f.prefactor * sum_terminating(*f.series);
}

}  // namespace

std::string_view variant_name(CoeffVariant v)
{
    switch (v) {
    case CoeffVariant::thm1: return "THM1";
    case CoeffVariant::thm2: return "THM2";
    case CoeffVariant::neg: return "NEG";
    case CoeffVariant::alt_a: return "ALT_A";
    case CoeffVariant::alt_b: return "ALT_B";
    case CoeffVariant::alt_c: return "ALT_C";
    case CoeffVariant::alt_d: return "ALT_D";
    case CoeffVariant::reflect: return "REFLECT";
    }
    return "?";
}

CoeffVariant parse_variant(std::string_view name)
{
    std::string upper;
    for (char ch : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    for (CoeffVariant v : all_variants)
        if (variant_name(v) == upper) return v;
    throw ParseError("unknown variant '" + std::string(name) + "'");
}

char coefficient_name(Coefficient c) { return c == Coefficient::P ? 'P' : 'Q'; }

bool variant_in_range(Coefficient which, long n, CoeffVariant v)
{
    switch (v) {
    case CoeffVariant::thm1: return n >= -1;
    case CoeffVariant::thm2: return n >= 0;
    case CoeffVariant::neg:
    case CoeffVariant::reflect: return n <= -1;
    case CoeffVariant::alt_a:
    case CoeffVariant::alt_b: return which == Coefficient::P && n >= 0;
    case CoeffVariant::alt_c:
    case CoeffVariant::alt_d: return which == Coefficient::Q && n >= 0;
    }
    return false;
}

std::vector<CoeffVariant> variants_in_range(Coefficient which, long n)
{
    std::vector<CoeffVariant> r;
    for (CoeffVariant v : all_variants)
        if (variant_in_range(which, n, v)) r.push_back(v);
    return r;
}

CoeffVariant default_variant(long n) { return n >= -1 ? CoeffVariant::thm1 : CoeffVariant::neg; }

CoeffForm coeff_form(Coefficient which, long n, CoeffVariant v)
{
    require_range(which, n, v);
    switch (v) {
    case CoeffVariant::thm1: return thm1(which, n);
    case CoeffVariant::thm2: return thm2(which, n);
    case CoeffVariant::neg: return neg(which, n);
    case CoeffVariant::reflect: throw VariantOutOfRange("REFLECT has no single-series form");
    default: return alt(v, n);
    }
}

RatFunc reflect_thm3(Coefficient which, long n)
{
    if (n < 0) throw VariantOutOfRange("reflect_thm3 needs n >= 0");
    RatFunc inner = coeff(which, n - 1, CoeffVariant::thm1);
    RatFunc shifted = inner.substitute({lf(-2 * n, 1), lf(-n, 0, 1), sym_c});
    RatFunc pre = RatFunc(BigRational(4).pow(n)) / pochhammer(lf(1, 0, -1), n);
    if (which == Coefficient::P) return pre * pochhammer(lf(1, BigRational(-1, 2)), n) * shifted;
    return -(pre * pochhammer(lf(BigRational(1, 2), BigRational(-1, 2)), n) * shifted);
}

RatFunc coeff(Coefficient which, long n, CoeffVariant v)
{
    require_range(which, n, v);
    using Key = std::tuple<int, long, int>;
    static std::mutex mutex;
    static std::map<Key, RatFunc> cache;
    Key key{static_cast<int>(which), n, static_cast<int>(v)};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    RatFunc r = v == CoeffVariant::reflect ? reflect_thm3(which, -n - 1) : value_of(coeff_form(which, n, v));
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(r)).first->second;
}

RatFunc coeff(Coefficient which, long n)
{
    return coeff(which, n, default_variant(n));
}

GammaProduct genkum_gamma_term(Coefficient which)
{
    const LinearForm& x = which == Coefficient::P ? a1_half : a_half;
    GammaProduct g;
    g.gamma(sym_a - sym_b).gamma(x).gamma(sym_a, -1).gamma(x - sym_b, -1);
    return g;
}

GammaProduct kummer_rhs()
{
    GammaProduct g;
    g.gamma(lf(1, 1, -1)).gamma(lf(1, BigRational(1, 2))).gamma(lf(1, 1), -1).gamma(lf(1, BigRational(1, 2), -1), -1);
    return g;
}

template <class Real>
NumericValue<Real> genkum_rhs(long n, const Point& p)
{
    using std::abs;
    std::vector<CoeffVariant> order = n >= -1 ? std::vector<CoeffVariant>{CoeffVariant::thm1, CoeffVariant::thm2}
                                              : std::vector<CoeffVariant>{CoeffVariant::neg, CoeffVariant::reflect};
    if (n >= 0) {
        order.push_back(CoeffVariant::alt_a);
        order.push_back(CoeffVariant::alt_b);
    }
    std::optional<BigRational> P, Q;
    for (CoeffVariant v : order) {
        if (!P && variant_in_range(Coefficient::P, n, v)) {
            try {
                P = coeff(Coefficient::P, n, v).eval(p);
            } catch (const PoleAtPoint&) {
            }
        }
    }
    if (n >= 0) {
        order.push_back(CoeffVariant::alt_c);
        order.push_back(CoeffVariant::alt_d);
    }
    for (CoeffVariant v : order) {
        if (!Q && variant_in_range(Coefficient::Q, n, v)) {
            try {
                Q = coeff(Coefficient::Q, n, v).eval(p);
            } catch (const PoleAtPoint&) {
            }
        }
    }
    if (!P || !Q) throw PoleAtPoint("every coefficient form has a pole at " + p.to_string());
    NumericValue<Real> r{0, 0};
    for (auto [which, c] : {std::pair{Coefficient::P, *P}, std::pair{Coefficient::Q, *Q}}) {
        if (c.is_zero()) continue;
        auto g = eval_gamma_product<Real>(genkum_gamma_term(which), p);
        Real cr = to_real<Real>(c);
        r.value += cr * g.value;
        r.error_estimate += abs(cr) * g.error_estimate + abs(cr * g.value) * epsilon<Real>() * 2;
    }
    return r;
}

template <class Real>
Real genkum_residual(long n, const Point& p)
{
    using std::abs;
    const BigRational& a = p[Symbol::a];
    const BigRational& b = p[Symbol::b];
    if (is_nonpositive_integer(a - b)) throw InvalidLowerParameter("a - b is a non-positive integer");
    auto lhs = eval_2f1_neg1<Real>(a + BigRational(n), b, a - b);
    auto rhs = genkum_rhs<Real>(n, p);
    return abs(lhs.value - rhs.value) / std::max(Real(1), abs(rhs.value));
}

template <class Real>
Real kummer_residual(const Point& p)
{
    using std::abs;
    const BigRational& a = p[Symbol::a];
    const BigRational& b = p[Symbol::b];
    auto lhs = eval_2f1_neg1<Real>(a, b, BigRational(1) + a - b);
    auto rhs = eval_gamma_product<Real>(kummer_rhs(), p);
    return abs(lhs.value - rhs.value) / std::max(Real(1), abs(rhs.value));
}

#define HYPEVAL_INSTANTIATE_KUMMER(Real)                                 \
    template NumericValue<Real> genkum_rhs<Real>(long, const Point&);   \
    template Real genkum_residual<Real>(long, const Point&);            \
    template Real kummer_residual<Real>(const Point&);

HYPEVAL_INSTANTIATE_KUMMER(double)
HYPEVAL_INSTANTIATE_KUMMER(long double)
HYPEVAL_INSTANTIATE_KUMMER(Quad)

}  // namespace hypeval
