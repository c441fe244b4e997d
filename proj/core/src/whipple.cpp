#include <algorithm>

#include "hypeval/errors.hpp"
#include "hypeval/hypergeometric.hpp"
#include "hypeval/kummer.hpp"

namespace hypeval {

namespace {

// g_k = Gamma(x0 + k/2) / Gamma(y0 + k/2), stepping each parity chain by
// the recurrence and restarting it after a reciprocal-Gamma zero.
template <class Real>
class HalfStepGammaRatio {
public:
    HalfStepGammaRatio(BigRational x0, BigRational y0) : x0_(std::move(x0)), y0_(std::move(y0)) {}

    Real at(std::size_t k)
    {
        BigRational shift(static_cast<long>(k), 2);
        BigRational x = x0_ + shift;
        BigRational y = y0_ + shift;
        Real& slot = chain_[k % 2];
        bool& valid = valid_[k % 2];
        if (k >= 2 && valid && slot != 0) {
            BigRational xp = x - BigRational(1);
            BigRational yp = y - BigRational(1);
            slot *= to_real<Real>(xp) / to_real<Real>(yp);
        } else {
            slot = gamma_ratio<Real>(x, y);
            valid = true;
        }
        return slot;
    }

private:
    BigRational x0_, y0_;
    Real chain_[2]{0, 0};
    bool valid_[2]{false, false};
};

template <class Real>
Real scale_of(std::initializer_list<BigRational> xs)
{
    Real s = 1;
    for (const auto& x : xs) s = std::max(s, Real(to_double(to_real<Real>(x.abs()))));
    return s;
}

}  // namespace

template <class Real>
NumericValue<Real> whipple_expansion(const BigRational& A, const BigRational& B, const BigRational& C, WhippleForm form,
                                     std::size_t max_terms)
{
    using std::abs;
    // series coefficient (d)_k / k!
    BigRational d = form == WhippleForm::w841 ? C - A + B - BigRational(1) : A - B - C + BigRational(1);
    BigRational x0 = A / BigRational(2);
    BigRational y0 = form == WhippleForm::w841 ? C - A / BigRational(2) : A / BigRational(2) + BigRational(1) - B;
    GammaProduct pre(RatFunc(BigRational(1, 2)));
    pre.gamma(LinearForm(C)).gamma(LinearForm(A), -1);
    if (form == WhippleForm::w841a) pre.gamma(LinearForm(BigRational(1) - B)).gamma(LinearForm(C - A), -1);
    auto prefactor = eval_gamma_product<Real>(pre, Point{});

    HalfStepGammaRatio<Real> g(x0, y0);
    Real dr = to_real<Real>(d);
    Real h = 1;
    std::size_t k = 0;
    const bool alternating = form == WhippleForm::w841;
    auto next = [&]() -> Real {
        if (k > 0) h *= (dr + Real(k - 1)) / Real(k);
        Real t = h * g.at(k);
        if (alternating && (k % 2 == 1)) t = -t;
        ++k;
        return t;
    };

    NumericValue<Real> sum;
    if (is_nonpositive_integer(d)) {
        long K = (-d).to_long();
        Real s = 0;
        Real mag = 0;
        for (long j = 0; j <= K; ++j) {
            Real t = next();
            s += t;
            mag += abs(t);
        }
        sum = {s, mag * epsilon<Real>() * Real(4 + K)};
    } else if (alternating) {
        if (B >= BigRational(2)) throw NoConvergence("W841 series diverges for B >= 2");
        sum = sum_alternating_series<Real>(next, scale_of<Real>({A, B, C}), max_terms);
    } else {
        BigRational margin = C - A;
        if (margin.sign() <= 0) throw NoConvergence("W841A series needs C - A > 0");
        sum = sum_algebraic_series<Real>(next, to_real<Real>(margin), scale_of<Real>({A, B, C}), max_terms);
    }
    Real value = prefactor.value * sum.value;
    Real err = abs(prefactor.value) * sum.error_estimate + abs(sum.value) * prefactor.error_estimate;
    return {value, err};
}

template <class Real>
std::pair<Real, Real> whipple_nu(const BigRational& nu, const Point& p)
{
    using std::abs;
    if (nu.is_integer() && nu.sign() >= 0) throw DomainError("nu must not be a non-negative integer");
    const BigRational& a = p[Symbol::a];
    const BigRational& b = p[Symbol::b];
    auto lhs = eval_2f1_neg1<Real>(a + nu, b, a - b);
    const BigRational h(1, 2);
    SeriesSpec s1{{LinearForm(-(nu - BigRational(1)) * h), LinearForm(-nu * h), LinearForm(b)},
                  {LinearForm(-nu), LinearForm((a + BigRational(1)) * h)},
                  BigRational(1)};
    SeriesSpec s2{{LinearForm(-nu * h), LinearForm(-(nu + BigRational(1)) * h), LinearForm(b)},
                  {LinearForm(-nu), LinearForm(a * h)},
                  BigRational(1)};
    auto f1 = eval_series_numeric<Real>(s1);
    auto f2 = eval_series_numeric<Real>(s2);
    auto g1 = eval_gamma_product<Real>(genkum_gamma_term(Coefficient::Q), p);
    auto g2 = eval_gamma_product<Real>(genkum_gamma_term(Coefficient::P), p);
    Real scale = std::max(Real(1), abs(lhs.value));
    return {abs(lhs.value - g1.value * f1.value) / scale, abs(lhs.value - g2.value * f2.value) / scale};
}

#define HYPEVAL_INSTANTIATE_WHIPPLE(Real)                                                                      \
    template NumericValue<Real> whipple_expansion<Real>(const BigRational&, const BigRational&,               \
                                                        const BigRational&, WhippleForm, std::size_t);        \
    template std::pair<Real, Real> whipple_nu<Real>(const BigRational&, const Point&);

HYPEVAL_INSTANTIATE_WHIPPLE(double)
HYPEVAL_INSTANTIATE_WHIPPLE(long double)
HYPEVAL_INSTANTIATE_WHIPPLE(Quad)

}  // namespace hypeval
