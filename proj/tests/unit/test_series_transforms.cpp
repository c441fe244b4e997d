#include <gtest/gtest.h>

#include "hypeval/errors.hpp"
#include "hypeval/kummer.hpp"
#include "hypeval/sampling.hpp"
#include "hypeval/transforms.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace hypeval;
using testing_support::from_decimal;
using testing_support::q;
using testing_support::rel_err;

namespace {

RatFunc orbit_value(const OrbitLabel& l) { return l.normalizer() * sum_terminating(l.spec()); }

// y with both triple sums equal to 1-m; the last entry of each triple is solved for.
OrbitLabel random_label(testing_support::Gen& g, long m)
{
    for (;;) {
        std::array<LinearForm, 6> y;
        for (int t = 0; t < 2; ++t) {
            y[3 * t] = g.rational(12, 7);
            y[3 * t + 1] = g.rational(12, 7);
            y[3 * t + 2] = LinearForm(BigRational(1 - m)) - y[3 * t] - y[3 * t + 1];
        }
        OrbitLabel l(y, m);
        try {
            orbit_terminating(l);
            return l;
        } catch (const SingularOrbit&) {
        }
    }
}

SeriesSpec spec3(const char* A, const char* B, const char* C, const char* E, const char* F)
{
    return SeriesSpec{{LinearForm::parse(A), LinearForm::parse(B), LinearForm::parse(C)},
                      {LinearForm::parse(E), LinearForm::parse(F)},
                      BigRational(1)};
}

}  // namespace

TEST(Orbit, TrivialAtMZero)
{
    testing_support::Gen g(testing_support::base_seed());
    OrbitLabel l = random_label(g, 0);
    auto orbit = orbit_terminating(l);
    ASSERT_EQ(orbit.size(), 18U);
    for (const auto& t : orbit) EXPECT_TRUE(equal(exact_value(t), RatFunc(1))) << t.to_string();
}

TEST(Orbit, AllEighteenValuesAgreeAtMTwo)
{
    testing_support::for_all(
        5,
        [](testing_support::Gen& g, int) {
            OrbitLabel l = random_label(g, 2);
            RatFunc ref = orbit_value(l);
            auto orbit = orbit_terminating(l);
            ASSERT_EQ(orbit.size(), 18U);
            for (std::size_t j = 0; j < orbit.size(); ++j) EXPECT_TRUE(equal(exact_value(orbit[j]), ref)) << j;
        },
        1);
}

TEST(Orbit, LabelsCarryTheSwapSign)
{
    testing_support::Gen g(testing_support::base_seed() + 3);
    for (long m : {1L, 2L, 3L}) {
        OrbitLabel l = random_label(g, m);
        auto labels = orbit_labels(l);
        ASSERT_EQ(labels.size(), 18U);
        RatFunc ref = orbit_value(l);
        int positive = 0;
        for (const auto& [lab, sign] : labels) {
            EXPECT_TRUE(equal(orbit_value(lab) * sign, ref)) << lab.to_string();
            positive += sign > 0;
        }
        EXPECT_EQ(positive, m % 2 ? 9 : 18);
    }
}

TEST(Orbit, ReversalPermutationIsTheTerminatingTransform)
{
    testing_support::Gen g(testing_support::base_seed() + 4);
    for (long m = 1; m <= 4; ++m) {
        OrbitLabel l = random_label(g, m);
        const auto& y = l.y();
        OrbitLabel r({y[5], y[4], y[3], y[2], y[1], y[0]}, m);
        // swapping the two triples contributes (-1)^m
        RatFunc lhs = orbit_value(r) * (m % 2 ? -1 : 1);
        EXPECT_TRUE(equal(lhs, orbit_value(l))) << m;
        SeriesSpec s = l.spec();
        TransformedSeries t = transform_terminating(s, m);
        EXPECT_TRUE(equal(exact_value(t), sum_terminating(s))) << m;
    }
}

TEST(Orbit, Errors)
{
    std::array<LinearForm, 6> bad{1, 0, 0, 0, 0, 0};
    EXPECT_THROW(OrbitLabel(bad, 0), DomainError);
    std::array<LinearForm, 6> ok{0, 0, 1, 0, 0, 1};
    EXPECT_THROW(OrbitLabel(ok, -1), DomainError);
    std::array<LinearForm, 6> singular{0, 0, -1, 0, 0, -1};
    EXPECT_THROW(orbit_terminating(OrbitLabel(singular, 2)), SingularOrbit);
}

TEST(TerminatingTransform, Examples)
{
    SeriesSpec zero = spec3("0", "b", "a/2-b", "1/2", "a/2");
    TransformedSeries t0 = transform_terminating(zero, 0);
    EXPECT_TRUE(equal(exact_value(t0), RatFunc(1)));
    EXPECT_TRUE(equal(t0.prefactor.prefactor(), RatFunc(1)));

    SeriesSpec one = spec3("-1", "b", "a/2-b", "1/2", "a/2");
    TransformedSeries t1 = transform_terminating(one, 1);
    EXPECT_TRUE(equal(exact_value(t1), sum_terminating(one)));
    // (E-A)_1/(E)_1 with E = 1/2, A = b
    EXPECT_TRUE(equal(t1.prefactor.prefactor(), (RatFunc(q("1/2")) - RatFunc::symbol(Symbol::b)) * 2));

    EXPECT_THROW(transform_terminating(SeriesSpec{{LinearForm(-1), LinearForm(1)}, {LinearForm(2)}, BigRational(1)}, 1),
                 InvalidShape);
}

TEST(TerminatingTransform, CarriesOneFormOfPIntoAnother)
{
    for (long n = 1; n <= 8; ++n) {
        CoeffForm f = coeff_form(Coefficient::P, n, CoeffVariant::thm1);
        ASSERT_TRUE(f.series);
        auto m = f.series->termination_index();
        ASSERT_TRUE(m);
        if (f.series->upper.size() != 3) continue;
        RatFunc via = f.prefactor * exact_value(transform_terminating(*f.series, *m));
        EXPECT_TRUE(equal(via, coeff(Coefficient::P, n, CoeffVariant::thm2))) << n;
    }
}

TEST(TerminatingTransform, ValuePreservingOnRandomInstances)
{
    Sampler s(testing_support::base_seed() + 5);
    for (int i = 0; i < 60; ++i) {
        long m = i % 7;
        SeriesSpec spec = s.terminating_3f2(m);
        EXPECT_TRUE(equal(exact_value(transform_terminating(spec, m)), sum_terminating(spec))) << spec.to_string();
    }
}

TEST(Thomae, QuarterPoint)
{
    SeriesSpec s = spec3("1/4", "1/4", "1/4", "1", "1");
    TransformedSeries t = thomae_transform(s);
    auto lhs = evaluate<double>(s);
    auto rhs = evaluate<double>(t);
    EXPECT_LT(rel_err(lhs.value, rhs.value), 1e-8);
    double ref = from_decimal<double>(oracle::three_f2_one[0].value);
    EXPECT_LT(rel_err(lhs.value, ref), 1e-10);
    EXPECT_LT(rel_err(rhs.value, ref), 1e-8);
}

TEST(Thomae, TerminatingInstanceMatchesDirectSum)
{
    SeriesSpec s = spec3("1/3", "1/5", "-2", "3/2", "7/4");
    long double exact = to_real<long double>(sum_terminating(s).eval(Point()));
    EXPECT_LT(rel_err(evaluate<long double>(thomae_transform(s)).value, exact), 1e-15L);
}

TEST(Thomae, AppliedTwiceReturnsTheOriginal)
{
    SeriesSpec s = spec3("1/3", "2/7", "1/5", "6/5", "3/2");
    TransformedSeries once = thomae_transform(s);
    TransformedSeries twice = thomae_transform(once.spec);
    EXPECT_EQ(twice.spec, s);
    double product = eval_gamma_product<double>(once.prefactor * twice.prefactor, Point()).value;
    EXPECT_NEAR(product, 1.0, 1e-13);
    EXPECT_LT(rel_err(evaluate<double>(twice).value * eval_gamma_product<double>(once.prefactor, Point()).value,
                      evaluate<double>(s).value),
              1e-8);
}

TEST(Thomae, RejectsDivergentInput)
{
    EXPECT_THROW(thomae_transform(spec3("1", "1", "1", "1", "1")), NoConvergence);
    // margin fine but the transformed series needs F - C > 0
    EXPECT_THROW(thomae_transform(spec3("1/4", "1/4", "3", "4", "2")), NoConvergence);
    for (long n = 1; n <= 4; ++n) {
        CoeffForm f = coeff_form(Coefficient::P, n, CoeffVariant::alt_a);
        if (f.series) EXPECT_THROW(thomae_transform(*f.series), NoConvergence) << n;
        CoeffForm g = coeff_form(Coefficient::Q, n, CoeffVariant::alt_c);
        if (g.series) EXPECT_THROW(thomae_transform(*g.series), NoConvergence) << n;
    }
    EXPECT_THROW(thomae_transform(SeriesSpec{{LinearForm(1), LinearForm(1)}, {LinearForm(3)}, BigRational(1)}),
                 InvalidShape);
}

TEST(Thomae, PreservesValueWithinErrorEstimates)
{
    Sampler s(testing_support::base_seed() + 6);
    for (int i = 0; i < 50; ++i) {
        SeriesSpec spec = s.thomae_instance();
        auto lhs = evaluate<double>(spec);
        auto rhs = evaluate<double>(thomae_transform(spec));
        EXPECT_LE(std::abs(lhs.value - rhs.value), 10 * (lhs.error_estimate + rhs.error_estimate) + 1e-15)
            << spec.to_string();
    }
}

TEST(TwoTerm, PfaffAtZeroIsTheIdentity)
{
    SeriesSpec s{{LinearForm(q("1/3")), LinearForm(q("5/2"))}, {LinearForm(q("7/4"))}, BigRational(0)};
    for (TwoTermKind k : {TwoTermKind::pfaff_a, TwoTermKind::pfaff_b, TwoTermKind::bateman_292}) {
        TransformedSeries t = two_term_2f1(k, s);
        EXPECT_EQ(t.spec.z, BigRational(0));
        EXPECT_DOUBLE_EQ(evaluate<double>(t).value, 1.0);
    }
}

TEST(TwoTerm, BatemanAtKummerShape)
{
    SeriesSpec s{{LinearForm(3), LinearForm(q("1/4"))}, {LinearForm(q("11/4"))}, BigRational(-1)};
    TransformedSeries t = two_term_2f1(TwoTermKind::bateman_292, s);
    SeriesSpec expect{{LinearForm(q("-1/4")), LinearForm(q("5/2"))}, {LinearForm(q("11/4"))}, BigRational(-1)};
    EXPECT_EQ(t.spec, expect);
    double lhs = evaluate<double>(s).value;
    double rhs = std::pow(2.0, -0.5) * evaluate<double>(t.spec).value;
    EXPECT_LT(rel_err(lhs, rhs), 1e-9);
    EXPECT_LT(rel_err(evaluate<double>(t).value, lhs), 1e-9);
}

TEST(TwoTerm, SymbolicBatemanPrefactor)
{
    // 2F1(a+n, b; a-b; -1) -> 2^(-2b-n) 2F1(-b-n, a-2b; a-b; -1)
    const long n = 2;
    SeriesSpec s{{sym_a + LinearForm(n), sym_b}, {sym_a - sym_b}, BigRational(-1)};
    TransformedSeries t = two_term_2f1(TwoTermKind::bateman_292, s);
    ASSERT_EQ(t.spec.upper.size(), 2U);
    EXPECT_EQ(t.spec.upper[0], LinearForm(-n) - sym_b);
    EXPECT_EQ(t.spec.upper[1], sym_a - sym_b * BigRational(2));
    Point p(q("9/2"), q("1/4"));
    double lhs = evaluate<double>(s, p).value;
    EXPECT_LT(rel_err(evaluate<double>(t, p).value, lhs), 1e-9);
    EXPECT_LT(rel_err(std::pow(2.0, -2 * 0.25 - n) * evaluate<double>(t.spec, p).value, lhs), 1e-9);
}

TEST(TwoTerm, OverlapAgreement)
{
    Sampler s(testing_support::base_seed() + 7);
    for (int i = 0; i < 20; ++i) {
        auto [A, B, C] = s.overlap_2f1();
        SeriesSpec spec{{LinearForm(A), LinearForm(B)}, {LinearForm(C)}, BigRational(-1, 3)};
        double lhs = evaluate<double>(spec).value;
        for (TwoTermKind k : {TwoTermKind::pfaff_a, TwoTermKind::pfaff_b, TwoTermKind::bateman_292})
            EXPECT_LT(rel_err(evaluate<double>(two_term_2f1(k, spec)).value, lhs), 1e-10)
                << two_term_name(k) << " " << spec.to_string();
    }
}

TEST(TwoTerm, Errors)
{
    SeriesSpec at_one{{LinearForm(1), LinearForm(1)}, {LinearForm(3)}, BigRational(1)};
    EXPECT_THROW(two_term_2f1(TwoTermKind::pfaff_a, at_one), InvalidShape);
    EXPECT_THROW(two_term_2f1(TwoTermKind::pfaff_b, spec3("1", "1", "1", "2", "2")), InvalidShape);
    EXPECT_EQ(parse_two_term("bateman_292"), TwoTermKind::bateman_292);
    EXPECT_EQ(parse_two_term("PFAFF_A"), TwoTermKind::pfaff_a);
    EXPECT_THROW(parse_two_term("EULER"), ParseError);
    TransformedSeries with_gamma = thomae_transform(spec3("1/4", "1/4", "1/4", "1", "1"));
    EXPECT_THROW(exact_value(with_gamma), InvalidShape);
}

TEST(Sampler, SameSeedSameStream)
{
    Sampler x(42), y(42), z(43);
    bool differs = false;
    for (int i = 0; i < 20; ++i) {
        Point px = x.genkum_point(), py = y.genkum_point(), pz = z.genkum_point();
        EXPECT_EQ(px, py);
        differs |= !(px == pz);
    }
    EXPECT_TRUE(differs);
    EXPECT_EQ(Sampler(9).orbit_label(2).to_string(), Sampler(9).orbit_label(2).to_string());
}

TEST(Sampler, PointsRespectTheirConstraints)
{
    Sampler s(testing_support::base_seed() + 8);
    const BigRational eighth(1, 8);
    for (int i = 0; i < 50; ++i) {
        Point p = s.genkum_point();
        const BigRational &a = p[Symbol::a], &b = p[Symbol::b];
        for (const BigRational& x : {a, b, a - b, a / 2, (a + 1) / 2, a / 2 - b, (a + 1) / 2 - b})
            EXPECT_TRUE(away_from_integers(x, eighth)) << p.to_string();
        EXPECT_LE(a.abs(), BigRational(10));
        EXPECT_LE(b.abs(), BigRational(10));
        EXPECT_EQ(mpz_class(a.denominator() % 2), 1);

        Point w = s.whipple_point();
        EXPECT_GE(w[Symbol::a] / 2 - w[Symbol::b], BigRational(1, 4));
        BigRational nu = s.whipple_nu();
        EXPECT_TRUE(away_from_integers(nu, eighth));
        EXPECT_GT(nu, BigRational(-2));
        EXPECT_LT(nu, BigRational(3));

        Point d = s.dixon_point();
        EXPECT_GE(d[Symbol::a] - d[Symbol::b] * BigRational(2) - d[Symbol::c] * BigRational(2), BigRational(5, 4));

        SeriesSpec t = s.thomae_instance();
        EXPECT_GE(t.margin().constant(), BigRational(1, 2));
        EXPECT_GE((t.lower[1] - t.upper[2]).constant(), BigRational(1, 2));
    }
}
