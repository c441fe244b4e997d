#include "hypeval/special.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "hypeval/errors.hpp"
#include "hypeval/gamma.hpp"
#include "hypeval/hypergeometric.hpp"
#include "hypeval/kummer.hpp"

namespace hypeval {

namespace {

template <class Real>
Real relative(const Real& lhs, const Real& rhs)
{
    using std::abs;
    return abs(lhs - rhs) / std::max(Real(1), abs(rhs));
}

}  // namespace

std::string_view special_name(SpecialKind k)
{
    switch (k) {
    case SpecialKind::q4_zero: return "Q4_ZERO";
    case SpecialKind::specfo1: return "SPECFO1";
    case SpecialKind::specfo2: return "SPECFO2";
    }
    return "?";
}

SpecialKind parse_special(std::string_view name)
{
    std::string upper;
    for (char ch : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    for (SpecialKind k : {SpecialKind::q4_zero, SpecialKind::specfo1, SpecialKind::specfo2})
        if (special_name(k) == upper) return k;
    throw ParseError("unknown special evaluation '" + std::string(name) + "'");
}

RatFunc q4_displayed()
{
    RatFunc a = RatFunc::symbol(Symbol::a);
    RatFunc b = RatFunc::symbol(Symbol::b);
    return RatFunc(-4) * (a - 1) * (a - 3) * (a * 2 - b - 7) / ((b - 1) * (b - 2) * (b - 3));
}

Q4Report q4_report()
{
    Q4Report r;
    r.computed = coeff(Coefficient::Q, -4, CoeffVariant::neg);
    r.matches_display = equal(r.computed, q4_displayed());
    RatFunc on_curve = r.computed.substitute({sym_a, sym_a * BigRational(2) - LinearForm(7), sym_c});
    r.vanishes_on_curve = on_curve.is_zero();
    return r;
}

template <class Real>
Real specfo1_residual(const BigRational& c)
{
    Real lhs = eval_2f1_neg1<Real>(BigRational(3) - c, BigRational(7) - BigRational(2) * c, c).value;
    GammaProduct g(RatFunc(BigRational(3, 4)));
    BigRational h(1, 2);
    g.gamma(LinearForm(c)).gamma(LinearForm(BigRational(3) - c * h));
    g.gamma(LinearForm(BigRational(5) - c), -1).gamma(LinearForm(BigRational(3, 2) * c - BigRational(2)), -1);
    Real rhs = eval_gamma_product<Real>(g, {}).value;
    return relative(lhs, rhs);
}

template <class Real>
Real specfo2_residual(const BigRational& t)
{
    if (t.is_zero() || t == BigRational(1)) throw DomainError("specfo2 needs t != 0, 1");
    BigRational t2 = t * t;
    BigRational d = t2 - BigRational(2);
    BigRational A = -(BigRational(2) * t2 - BigRational(7) * t + BigRational(6)) / d;
    BigRational B = (t2 + BigRational(4) * t - BigRational(8)) / d;
    BigRational C = (BigRational(2) * t2 + BigRational(3) * t - BigRational(8)) / d;
    Real lhs = eval_2f1_neg1<Real>(A, B, C).value;
    GammaProduct g(RatFunc((t2 + BigRational(3) * t - BigRational(6)) / (t * (t - BigRational(1)))));
    g.gamma(LinearForm((BigRational(3) * t - BigRational(4)) / d));
    g.gamma(LinearForm((t2 + BigRational(7) * t - BigRational(12)) / (BigRational(2) * d)));
    g.gamma(LinearForm((BigRational(7) * t - BigRational(10)) / d), -1);
    g.gamma(LinearForm(t * (t - BigRational(1)) / (BigRational(2) * d)), -1);
    Real rhs = eval_gamma_product<Real>(g, {}).value;
    return relative(lhs, rhs);
}

template <class Real>
Real special_evaluation(SpecialKind kind, const BigRational& param)
{
    using std::abs;
    switch (kind) {
    case SpecialKind::q4_zero: {
        RatFunc q = coeff(Coefficient::Q, -4, CoeffVariant::neg);
        Point p{param, BigRational(2) * param - BigRational(7), BigRational(0)};
        return abs(to_real<Real>(q.eval(p)));
    }
    case SpecialKind::specfo1: return specfo1_residual<Real>(param);
    case SpecialKind::specfo2: return specfo2_residual<Real>(param);
    }
    throw DomainError("unknown special evaluation");
}

#define HYPEVAL_INSTANTIATE_SPECIAL(Real)                                      \
    template Real specfo1_residual<Real>(const BigRational&);                  \
    template Real specfo2_residual<Real>(const BigRational&);                  \
    template Real special_evaluation<Real>(SpecialKind, const BigRational&);

HYPEVAL_INSTANTIATE_SPECIAL(double)
HYPEVAL_INSTANTIATE_SPECIAL(long double)
HYPEVAL_INSTANTIATE_SPECIAL(Quad)

}  // namespace hypeval
