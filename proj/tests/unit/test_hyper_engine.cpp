#include <gtest/gtest.h>

#include "hypeval/errors.hpp"
#include "hypeval/gamma.hpp"
#include "hypeval/hypergeometric.hpp"
#include "hypeval/kummer.hpp"
#include "hypeval/sampling.hpp"
#include "hypeval/series.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace hypeval;
using testing_support::for_all;
using testing_support::from_decimal;
using testing_support::Gen;
using testing_support::q;
using testing_support::rel_err;

namespace {

const RatFunc A = RatFunc::symbol(Symbol::a);
const RatFunc B = RatFunc::symbol(Symbol::b);

SeriesSpec spec(std::vector<LinearForm> up, std::vector<LinearForm> lo, BigRational z = BigRational(1))
{
    return SeriesSpec{std::move(up), std::move(lo), std::move(z)};
}

template <class Real>
class Tiers : public ::testing::Test {};
using RealTypes = ::testing::Types<double, long double, Quad>;
TYPED_TEST_SUITE(Tiers, RealTypes);

// A few ulps of slack for each tier.
template <class Real>
Real slack(double ulps = 64)
{
    return Real(ulps) * epsilon<Real>();
}

}  // namespace

TEST(Pochhammer, Definition)
{
    EXPECT_TRUE(equal(pochhammer(sym_a, 0), RatFunc(1)));
    EXPECT_TRUE(equal(pochhammer(LinearForm(1), 4), RatFunc(24)));
    LinearForm x = sym_a * q("1/2") - sym_b;
    EXPECT_TRUE(equal(pochhammer(x, 2), RatFunc(x) * RatFunc(x + LinearForm(1))));
    EXPECT_TRUE(equal(pochhammer_signed(sym_a, -2), RatFunc(1) / ((A - 2) * (A - 1))));
    EXPECT_EQ(factorial(10), BigRational(3628800));
}

TEST(Pochhammer, ShiftIdentityOnRandomForms)
{
    for_all(40, [](Gen& g, int) {
        LinearForm x = g.linear_form();
        long k = g.integer(0, 6);
        // (x)_{k+1} = (x)_k (x+k)
        EXPECT_TRUE(equal(pochhammer(x, k + 1), pochhammer(x, k) * RatFunc(x + LinearForm(BigRational(k)))));
        EXPECT_TRUE(equal(pochhammer_signed(x, -k) * pochhammer(x - LinearForm(BigRational(k)), k), RatFunc(1)));
    }, 11);
}

TEST(SumTerminating, TableEntries)
{
    // 1/2 3F2(-1/2, -1, b; -1, a/2; 1) = (a-b)/(2a)
    RatFunc p1 = sum_terminating(spec({LinearForm(q("-1/2")), LinearForm(-1), sym_b}, {LinearForm(-1), sym_a / q("2")}));
    EXPECT_TRUE(equal(p1 * RatFunc(q("1/2")), (A - B) / (A * 2)));
    EXPECT_TRUE(equal(p1, RatFunc(1) - B / A));
    // 3F2(-1, -3/2, b; -2, a/2; 1) = 1 - 3b/(2a)
    RatFunc p2 = sum_terminating(spec({LinearForm(-1), LinearForm(q("-3/2")), sym_b}, {LinearForm(-2), sym_a / q("2")}));
    EXPECT_TRUE(equal(p2, RatFunc(1) - B * 3 / (A * 2)));
}

TEST(SumTerminating, ZeroUpperGivesOne)
{
    EXPECT_TRUE(equal(sum_terminating(spec({LinearForm(0), sym_a}, {sym_b})), RatFunc(1)));
}

TEST(SumTerminating, TerminatingKummerCase)
{
    EXPECT_TRUE(equal(sum_terminating(spec({LinearForm(1), LinearForm(-1)}, {LinearForm(3)}, q("-1"))), RatFunc(q("4/3"))));
}

TEST(SumTerminating, TerminationRule)
{
    // stops at the smallest -m
    EXPECT_TRUE(equal(sum_terminating(spec({LinearForm(-3), LinearForm(-1)}, {LinearForm(1)})), RatFunc(4)));
    // lower -1 hit before termination at K=2
    EXPECT_THROW(sum_terminating(spec({LinearForm(-2), sym_a}, {LinearForm(-1)})), IllDefined);
    // lower -m with m >= K is allowed
    EXPECT_NO_THROW(sum_terminating(spec({LinearForm(-2), sym_a}, {LinearForm(-2)})));
    EXPECT_THROW(sum_terminating(spec({sym_a, LinearForm(q("1/2"))}, {sym_b})), NonTerminating);
}

TEST(SumTerminating, VandermondeOnRandomInstances)
{
    // 2F1(-m, x; y; 1) = (y-x)_m / (y)_m
    for_all(30, [](Gen& g, int) {
        long m = g.integer(0, 5);
        LinearForm x = g.linear_form(), y = g.linear_form() + sym_b;
        RatFunc lhs = sum_terminating(spec({LinearForm(BigRational(-m)), x}, {y}));
        EXPECT_TRUE(equal(lhs, pochhammer(y - x, m) / pochhammer(y, m)));
    }, 12);
}

TEST(SeriesTerm, MatchesRatioOfConsecutiveTerms)
{
    SeriesSpec s = spec({sym_a, sym_b}, {sym_a + sym_b + LinearForm(1)}, q("-1/2"));
    RatFunc t3 = series_term(s, 3), t2 = series_term(s, 2);
    RatFunc ratio = (A + 2) * (B + 2) / ((A + B + 3) * 3) * RatFunc(q("-1/2"));
    EXPECT_TRUE(equal(t3, t2 * ratio));
}

TYPED_TEST(Tiers, ExponentialSeries)
{
    using Real = TypeParam;
    auto v = eval_series_numeric<Real>(spec({}, {}, BigRational(1)));
    Real e = from_decimal<Real>(oracle::e);
    EXPECT_LE(rel_err(v.value, e), slack<Real>());
    EXPECT_LE(abs(v.value - e), v.error_estimate * 4 + slack<Real>());
}

TYPED_TEST(Tiers, TwoF1AtMinusOneAgainstOracle)
{
    using Real = TypeParam;
    for (const auto& row : oracle::two_f1_neg1) {
        SCOPED_TRACE(std::string(row.A) + "," + row.B + ";" + row.C);
        auto v = eval_2f1_neg1<Real>(q(row.A), q(row.B), q(row.C));
        Real ref = from_decimal<Real>(row.value);
        using std::abs;
        EXPECT_LE(rel_err(v.value, ref), slack<Real>(1e4));
        // the error estimate covers the actual error, with a little room
        EXPECT_LE(abs(v.value - ref), Real(4) * v.error_estimate + slack<Real>(8) * abs(ref));
    }
}

TEST(TwoF1, SpecialValues)
{
    auto t = eval_2f1_neg1<double>(q("1"), q("-1"), q("3"));
    EXPECT_NEAR(t.value, 4.0 / 3.0, 1e-15);
    auto c = eval_2f1_neg1<double>(q("1/2"), q("2"), q("5/2"));
    EXPECT_NEAR(c.value, 0.75, 1e-13);
    EXPECT_THROW(eval_2f1_neg1<double>(q("1/3"), q("1/4"), q("0")), InvalidLowerParameter);
    EXPECT_THROW(eval_2f1_neg1<double>(q("1/3"), q("1/4"), q("-2")), InvalidLowerParameter);
}

TEST(TwoF1, PfaffPathWhereDirectSummationDiverges)
{
    // a = 9/2, b = 1/4, n = 2: C - A - B = -5/2
    auto v = eval_2f1_neg1<double>(q("13/2"), q("1/4"), q("17/4"));
    EXPECT_LE(rel_err(v.value, from_decimal<double>(oracle::two_f1_neg1[2].value)), 1e-12);
    EXPECT_THROW(eval_2f1_neg1_direct<double>(q("13/2"), q("1/4"), q("17/4")), NoConvergence);
    double rhs = genkum_rhs<double>(2, Point(q("9/2"), q("1/4"))).value;
    EXPECT_LE(rel_err(v.value, rhs), 1e-9);
}

TEST(TwoF1, DirectAndPfaffAgreeWithinErrorBounds)
{
    Sampler s(testing_support::base_seed());
    for (int i = 0; i < 50; ++i) {
        auto [A_, B_, C_] = s.overlap_2f1();
        SCOPED_TRACE(A_.to_string() + "," + B_.to_string() + ";" + C_.to_string());
        auto d = eval_2f1_neg1_direct<double>(A_, B_, C_);
        auto p = eval_2f1_neg1_pfaff<double>(A_, B_, C_);
        EXPECT_LE(std::abs(d.value - p.value), 10 * (d.error_estimate + p.error_estimate));
    }
}

TEST(TwoF1, TerminatingNumericMatchesExact)
{
    for_all(30, [](Gen& g, int) {
        long m = g.integer(0, 8);
        BigRational B_ = g.rational(), C_ = g.rational() + BigRational(1, 7);
        if (is_nonpositive_integer(C_)) return;
        RatFunc exact = sum_terminating(spec({LinearForm(BigRational(-m)), LinearForm(B_)}, {LinearForm(C_)}, q("-1")));
        double ref = to_real<double>(*exact.constant_value());
        auto v = eval_2f1_neg1<double>(BigRational(-m), B_, C_);
        EXPECT_LE(std::abs(v.value - ref), 1e-13 * std::max(1.0, std::abs(ref)) + v.error_estimate);
    }, 13);
}

TEST(SeriesNumeric, DivergentSeriesRejected)
{
    EXPECT_THROW(eval_series_numeric<double>(spec({LinearForm(1), LinearForm(1)}, {LinearForm(1)})), NoConvergence);
    EXPECT_THROW(eval_series_numeric<double>(spec({LinearForm(1)}, {}, q("2"))), NoConvergence);
}

TYPED_TEST(Tiers, ThreeF2AtOne)
{
    using Real = TypeParam;
    const auto& row = oracle::three_f2_one[0];
    auto v = eval_series_numeric<Real>(spec({LinearForm(q(row.A)), LinearForm(q(row.B)), LinearForm(q(row.C))},
                                            {LinearForm(q(row.E)), LinearForm(q(row.F))}));
    Real ref = from_decimal<Real>(row.value);
    EXPECT_LE(rel_err(v.value, ref), Real(1e-8));
    using std::abs;
    EXPECT_LE(abs(v.value - ref), Real(10) * v.error_estimate + slack<Real>());
}

TYPED_TEST(Tiers, LogGammaAgainstOracle)
{
    using Real = TypeParam;
    for (const auto& row : oracle::log_gamma) {
        SCOPED_TRACE(row.x);
        auto lg = log_gamma<Real>(q(row.x));
        Real ref = from_decimal<Real>(row.log_abs);
        using std::abs;
        EXPECT_LE(abs(lg.log_abs - ref), slack<Real>(256) * std::max(Real(1), abs(ref)));
        EXPECT_EQ(lg.sign, row.sign);
    }
}

TEST(LogGamma, Poles)
{
    EXPECT_THROW(log_gamma<double>(q("0")), PoleAtPoint);
    EXPECT_THROW(log_gamma<double>(q("-3")), PoleAtPoint);
    EXPECT_THROW(log_gamma<double>(-2.0), PoleAtPoint);
}

TEST(LogGamma, QuadAtSmallIntegers)
{
    EXPECT_LE(abs(log_gamma<Quad>(q("3")).log_abs - log(Quad(2))), Quad(1e-32));
    EXPECT_LE(abs(log_gamma<Quad>(Quad(3)).log_abs - log(Quad(2))), Quad(1e-32));
}

TEST(LogGamma, RecurrenceOnRandomArguments)
{
    for_all(60, [](Gen& g, int) {
        BigRational x = g.rational(40, 11);
        if (is_nonpositive_integer(x) || is_nonpositive_integer(x + BigRational(1))) return;
        // log|G(x+1)| = log|G(x)| + log|x|
        auto l0 = log_gamma<double>(x), l1 = log_gamma<double>(x + BigRational(1));
        double lx = std::log(std::abs(to_real<double>(x)));
        EXPECT_NEAR(l1.log_abs, l0.log_abs + lx, 1e-12 * std::max(1.0, std::abs(l1.log_abs)));
        EXPECT_EQ(l1.sign, l0.sign * x.sign());
    }, 14);
}

TEST(SinPi, ExactReduction)
{
    EXPECT_EQ(sin_pi<double>(q("1")), 0.0);
    EXPECT_EQ(sin_pi<double>(q("-7")), 0.0);
    EXPECT_DOUBLE_EQ(sin_pi<double>(q("1/2")), 1.0);
    EXPECT_DOUBLE_EQ(sin_pi<double>(q("1000001/2")), 1.0);
    EXPECT_DOUBLE_EQ(sin_pi<double>(q("1000003/2")), -1.0);
    EXPECT_DOUBLE_EQ(sin_pi<double>(q("-1/6")), -0.5);
}

TEST(GammaProduct, ParseAndEvaluate)
{
    auto root_pi = eval_gamma_product<double>(GammaProduct::parse("G(1/2)"), {});
    EXPECT_LE(std::abs(root_pi.value - from_decimal<double>(oracle::sqrt_pi)), root_pi.error_estimate);
    EXPECT_LE(root_pi.error_estimate, 1e-14);
    auto k = eval_gamma_product<Quad>(kummer_rhs(), Point(1, -1));
    EXPECT_LE(abs(k.value - Quad(4) / 3), Quad(1e-32));
    GammaProduct g = GammaProduct::parse("3/4*G(c)*G(3-c/2)/G(5-c)/G(3c/2-2)");
    EXPECT_NEAR(eval_gamma_product<double>(g, Point(0, 0, q("5/2"))).value, 0.75, 1e-15);
    auto pw = eval_gamma_product<double>(GammaProduct::parse("2^(1/2)*G(a)^-2"), Point(3, 0));
    EXPECT_LE(std::abs(pw.value - std::sqrt(2.0) / 4), pw.error_estimate);
    EXPECT_THROW(GammaProduct::parse("G(1/2"), ParseError);
}

TEST(GammaProduct, PoleSemantics)
{
    EXPECT_THROW(eval_gamma_product<double>(GammaProduct::parse("G(0)"), {}), PoleAtPoint);
    EXPECT_EQ(eval_gamma_product<double>(GammaProduct::parse("G(1/2)/G(-2)"), {}).value, 0.0);
    EXPECT_THROW(eval_gamma_product<double>(GammaProduct::parse("G(a)"), Point(-1, 0)), PoleAtPoint);
}

TEST(GammaProduct, InverseCancels)
{
    for_all(30, [](Gen& g, int) {
        GammaProduct p(RatFunc(g.nonzero_rational()));
        p.gamma(g.linear_form(), static_cast<int>(g.integer(-2, 2)));
        p.gamma(g.linear_form());
        Point pt = g.point();
        try {
            double v = eval_gamma_product<double>(p * p.inverse(), pt).value;
            EXPECT_NEAR(v, 1.0, 1e-10);
        } catch (const PoleAtPoint&) {
        }
    }, 15);
}

TEST(GammaProduct, RatioHelper)
{
    EXPECT_NEAR(gamma_ratio<double>(q("5"), q("3")), 12.0, 1e-13);
    EXPECT_EQ(gamma_ratio<double>(q("1/2"), q("-1")), 0.0);
    EXPECT_THROW(gamma_ratio<double>(q("-1"), q("1/2")), PoleAtPoint);
}
