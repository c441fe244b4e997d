#include <gtest/gtest.h>

#include "hypeval/errors.hpp"
#include "hypeval/hypergeometric.hpp"
#include "hypeval/kummer.hpp"
#include "hypeval/recurrence.hpp"
#include "support.hpp"

using namespace hypeval;
using testing_support::q;

namespace {

const RatFunc A = RatFunc::symbol(Symbol::a);
const RatFunc B = RatFunc::symbol(Symbol::b);
const RatFunc C = RatFunc::symbol(Symbol::c);

RatFunc kummer_check(Coefficient w, long n, CoeffVariant vp, CoeffVariant v0, CoeffVariant vm)
{
    return check_recurrence(build_recurrence(Family::kummer), {coeff(w, n + 1, vp), coeff(w, n, v0), coeff(w, n - 1, vm)}, n);
}

RatFunc kummer_check(Coefficient w, long n)
{
    return kummer_check(w, n, default_variant(n + 1), default_variant(n), default_variant(n - 1));
}

}  // namespace

TEST(Recurrence, KummerCoefficients)
{
    Recurrence2 r = build_recurrence(Family::kummer);
    for (long n = -3; n <= 3; ++n) {
        auto [cp, c0, cm] = r.at(n);
        EXPECT_TRUE(equal(cp, (A + n) * 2)) << n;
        EXPECT_TRUE(equal(c0, -(A * 2 + n * 3))) << n;
        EXPECT_TRUE(equal(cm, B + n)) << n;
    }
}

TEST(Recurrence, GosperAndDixonCoefficients)
{
    Recurrence2 g = build_recurrence(Family::gosper);
    Recurrence2 d = build_recurrence(Family::dixon);
    for (long n = -3; n <= 3; ++n) {
        auto [gp, g0, gm] = g.at(n);
        EXPECT_TRUE(equal(gp, (A * 2 + n + 1) * (A * 6 + 2 * n + 3) * 2));
        EXPECT_TRUE(equal(g0, (A * 4 + 2 * n + 3) * (A * 6 + 4 * n + 1)));
        EXPECT_TRUE(equal(gm, (A * 4 + 2 * n + 1) * (A * 4 + 2 * n + 3) * -3));
        auto [dp, d0, dm] = d.at(n);
        EXPECT_TRUE(equal(dp, (A + n) * (B * 2 + C * 2 - A + n + 1)));
        RatFunc expect0 = -(RatFunc(2 * n * n) + B * 3 * n + C * 3 * n + n - A * A + A * B * 2 + A * C * 2 + A);
        EXPECT_TRUE(equal(d0, expect0));
        EXPECT_TRUE(equal(dm, (B + n) * (C + n)));
    }
    EXPECT_EQ(parse_family("dixon"), Family::dixon);
    EXPECT_EQ(parse_family("KUMMER"), Family::kummer);
    EXPECT_THROW(parse_family("gauss"), ParseError);
}

TEST(Recurrence, TableRowsSatisfyIt)
{
    Recurrence2 r = build_recurrence(Family::kummer);
    // n = 0 on (P(1), P(0), P(-1)) = ((a-b)/(2a), 1/2, 1)
    EXPECT_TRUE(check_recurrence(r, {(A - B) / (A * 2), RatFunc(q("1/2")), RatFunc(1)}, 0).is_zero());
    EXPECT_TRUE(check_recurrence(r, {RatFunc(q("1/2")), RatFunc(q("1/2")), RatFunc(0)}, 0).is_zero());
    EXPECT_TRUE(check_recurrence(r, {RatFunc(q("1/2")), RatFunc(1), (A - 2) / (B - 1)}, -1).is_zero());
    // a wrong value is caught
    EXPECT_FALSE(check_recurrence(r, {(A - B) / A, RatFunc(q("1/2")), RatFunc(1)}, 0).is_zero());
}

TEST(Recurrence, SecondFormForPositiveN)
{
    for (long n = 1; n <= 6; ++n)
        for (Coefficient w : {Coefficient::P, Coefficient::Q})
            EXPECT_TRUE(kummer_check(w, n, CoeffVariant::thm2, CoeffVariant::thm2, CoeffVariant::thm2).is_zero()) << n;
}

TEST(Recurrence, HoldsForEveryVariantAcrossZero)
{
    for (long n = -7; n <= 7; ++n)
        for (Coefficient w : {Coefficient::P, Coefficient::Q}) {
            EXPECT_TRUE(kummer_check(w, n).is_zero()) << n;
            for (CoeffVariant v : variants_in_range(w, n))
                EXPECT_TRUE(kummer_check(w, n, default_variant(n + 1), v, default_variant(n - 1)).is_zero())
                    << coefficient_name(w) << " n=" << n << " " << variant_name(v);
        }
}

TEST(Recurrence, LeadingCoefficientVanishesAtNegativeA)
{
    Recurrence2 r = build_recurrence(Family::kummer);
    for (long n = 0; n <= 5; ++n) {
        EXPECT_TRUE(r.at(n)[0].eval(Point(BigRational(-n), q("1/3"))).is_zero()) << n;
        EXPECT_FALSE(r.at(n)[0].eval(Point(BigRational(-n) + q("1/2"), q("1/3"))).is_zero()) << n;
    }
}

TEST(Recurrence, NumericSequence)
{
    Recurrence2 r = build_recurrence(Family::kummer);
    Point p(3, q("1/4"));
    auto S = [&](long n) { return eval_2f1_neg1<double>(p[Symbol::a] + n, p[Symbol::b], p[Symbol::a] - p[Symbol::b]).value; };
    for (long n = -3; n <= 3; ++n) EXPECT_LT(recurrence_residual<double>(r, {S(n + 1), S(n), S(n - 1)}, n, p), 1e-9) << n;
    EXPECT_GT(recurrence_residual<double>(r, {S(2), S(0), S(-1)}, 0, p), 1e-3);
}

TEST(Certificates, BothFamiliesTelescope)
{
    for (long n = 1; n <= 12; ++n) {
        EXPECT_TRUE(verify_certificate(CertificateFamily::p_cert, n)) << n;
        EXPECT_TRUE(verify_certificate(CertificateFamily::q_cert, n)) << n;
    }
}

TEST(Certificates, DisplayedQSignIsRejected)
{
    for (long n = 1; n <= 12; ++n) {
        CertificateReport r = verify_certificate_report(CertificateFamily::q_cert, n, CertificateSign::displayed);
        EXPECT_FALSE(r.ok()) << n;
        EXPECT_TRUE(verify_certificate(CertificateFamily::p_cert, n, CertificateSign::displayed)) << n;
    }
}

TEST(Certificates, RatioForP)
{
    for (long n = 1; n <= 6; ++n)
        for (long k = 1; k <= (n + 1) / 2; ++k) {
            if (n - 2 * k + 2 == 0 || n - 2 * k + 3 == 0) continue;
            RatFunc expect = (A + (2 * k - 2)) * RatFunc(-2 * k * (n - k + 1)) / RatFunc((n - 2 * k + 2) * (n - 2 * k + 3));
            EXPECT_TRUE(equal(cert_ratio(CertificateFamily::p_cert, n, k), expect)) << n << "," << k;
        }
}

TEST(Certificates, BoundaryAtKZero)
{
    for (long n = 1; n <= 8; ++n) {
        EXPECT_TRUE(cert_combined(CertificateFamily::p_cert, n, 0).is_zero());
        EXPECT_TRUE(cert_combined(CertificateFamily::q_cert, n, 0).is_zero());
        EXPECT_TRUE(cert_ratio(CertificateFamily::p_cert, n, 0).is_zero());
    }
}

TEST(Certificates, SummandsAddUpToTheCoefficients)
{
    for (long n = 1; n <= 8; ++n)
        for (auto [f, w] : {std::pair{CertificateFamily::p_cert, Coefficient::P}, std::pair{CertificateFamily::q_cert, Coefficient::Q}}) {
            RatFunc s;
            for (long k = 0; k <= n; ++k) s += cert_summand(f, n, k);
            EXPECT_TRUE(equal(s, coeff(w, n))) << coefficient_name(w) << n;
            EXPECT_TRUE(cert_summand(f, n, n + 3).is_zero());
            EXPECT_TRUE(cert_summand(f, n, -1).is_zero());
        }
}

TEST(Contiguity, InitialValueChecks)
{
    for (auto [p, tol] : {std::pair{Point(3, q("1/4")), 1e-9}, std::pair{Point(q("5/2"), q("1/3")), 1e-9},
                          std::pair{Point(1, -1), 1e-15}}) {
        auto r = contiguity_initial_checks<double>(p);
        EXPECT_LT(r.gauss, tol) << p.to_string();
        EXPECT_LT(r.genkum0, tol) << p.to_string();
    }
    auto quad = contiguity_initial_checks<Quad>(Point(q("7/3"), q("2/5")));
    EXPECT_LT(quad.gauss, Quad(1e-28));
    EXPECT_LT(quad.genkum0, Quad(1e-28));
}
