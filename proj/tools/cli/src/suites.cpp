#include "hypeval_cli/suites.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "hypeval/dixon.hpp"
#include "hypeval/errors.hpp"
#include "hypeval/gosper.hpp"
#include "hypeval/hypergeometric.hpp"
#include "hypeval/kummer.hpp"
#include "hypeval/recurrence.hpp"
#include "hypeval/sampling.hpp"
#include "hypeval/special.hpp"
#include "hypeval/transforms.hpp"

namespace hypeval::cli {

namespace {

std::string format_tol(double t)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

// For exact checks whose outcome is a predicate rather than a difference.
CheckRecord exact_flag(std::string name, bool ok, std::string why)
{
    CheckRecord r{std::move(name), CheckKind::exact, CheckStatus::pass, "exact-zero"};
    if (!ok) {
        r.status = CheckStatus::fail;
        r.residual = "nonzero";
        r.detail = std::move(why);
    }
    return r;
}

template <class Real>
CheckRecord numeric_record(std::string name, const Real& residual, double tol)
{
    using std::isfinite;
    CheckRecord r{std::move(name), CheckKind::numeric, CheckStatus::pass, format_real(residual), format_tol(tol)};
    if (!isfinite(residual) || !(residual < Real(tol))) r.status = CheckStatus::fail;
    return r;
}

std::string pt(const Point& p, bool with_c = false)
{
    std::string s = "a=" + p[Symbol::a].to_string() + " b=" + p[Symbol::b].to_string();
    if (with_c) s += " c=" + p[Symbol::c].to_string();
    return s;
}

std::pair<long, long> range_or(const VerifyOptions& o, long lo, long hi)
{
    auto r = o.n_range.value_or(std::pair{lo, hi});
    if (r.first > r.second) throw DomainError("empty n range");
    return r;
}

int points_or(const VerifyOptions& o, int d)
{
    int p = o.points.value_or(d);
    if (p <= 0) throw DomainError("--points must be positive");
    return p;
}

double tol_or(const VerifyOptions& o, double d) { return o.tol.value_or(d); }

void add(std::vector<WorkItem>& items, std::string name, std::function<std::vector<CheckRecord>()> f)
{
    items.push_back(WorkItem{std::move(name), std::move(f)});
}

void add1(std::vector<WorkItem>& items, const std::string& name, std::function<CheckRecord()> f)
{
    items.push_back(WorkItem{name, [f = std::move(f)] { return std::vector<CheckRecord>{f()}; }});
}

template <class Real>
void genkum_items(std::vector<WorkItem>& items, const VerifyOptions& o)
{
    auto [lo, hi] = range_or(o, -5, 5);
    int count = points_or(o, 20);
    double tol = tol_or(o, o.precision == Precision::binary53 ? 1e-9 : 1e-12);
    Sampler s(o.seed);
    for (int i = 0; i < count; ++i) {
        Point p = s.genkum_point();
        for (long n = lo; n <= hi; ++n) {
            std::string name = "genkum n=" + std::to_string(n) + " " + pt(p);
            add1(items, name, [=] { return numeric_record(name, genkum_residual<Real>(n, p), tol); });
        }
    }
    double wtol = tol_or(o, 1e-8);
    for (int i = 0; i < 5; ++i) {
        BigRational nu = s.whipple_nu();
        Point p = s.whipple_point();
        std::string tag = " nu=" + nu.to_string() + " " + pt(p);
        add(items, "whipple" + tag, [=] {
            auto [r1, r2] = whipple_nu<Real>(nu, p);
            return std::vector<CheckRecord>{numeric_record("whip1" + tag, r1, wtol),
                                            numeric_record("whip2" + tag, r2, wtol)};
        });
    }
}

template <class Real>
void kummer_items(std::vector<WorkItem>& items, const VerifyOptions& o)
{
    int count = points_or(o, 20);
    double tol = tol_or(o, 1e-10);
    add1(items, "kummer terminating a=1 b=-1 equals 4/3", [] {
        SeriesSpec s{{LinearForm(1), LinearForm(-1)}, {LinearForm(3)}, BigRational(-1)};
        return exact_record("kummer terminating a=1 b=-1 equals 4/3", sum_terminating(s) - RatFunc(BigRational(4, 3)));
    });
    Sampler s(o.seed);
    std::vector<Point> pts{Point(1, -1)};
    for (int i = 0; i < count; ++i) pts.push_back(s.genkum_point());
    for (const Point& p : pts) {
        std::string name = "kummer " + pt(p);
        add1(items, name, [=] { return numeric_record(name, kummer_residual<Real>(p), tol); });
    }
    for (int i = 0; i < 50; ++i) {
        auto [A, B, C] = s.overlap_2f1();
        std::string name = "continuation A=" + A.to_string() + " B=" + B.to_string() + " C=" + C.to_string();
        add1(items, name, [=] {
            using std::abs;
            auto d = eval_2f1_neg1_direct<Real>(A, B, C);
            auto f = eval_2f1_neg1_pfaff<Real>(A, B, C);
            Real bound = Real(10) * (d.error_estimate + f.error_estimate);
            Real diff = abs(d.value - f.value);
            CheckRecord r{name, CheckKind::numeric, CheckStatus::pass, format_real(diff), format_real(bound)};
            if (!(diff <= bound)) r.status = CheckStatus::fail;
            return r;
        });
    }
    for (const Point& p : {Point(3, BigRational(1, 4)), Point(1, -1), Point(BigRational(5, 2), BigRational(1, 3))}) {
        std::string tag = " " + pt(p);
        add(items, "contiguity" + tag, [=] {
            auto c = contiguity_initial_checks<Real>(p);
            return std::vector<CheckRecord>{numeric_record("gauss contiguity" + tag, c.gauss, tol),
                                            numeric_record("genkum n=0 from contiguity" + tag, c.genkum0, tol)};
        });
    }
}

void kummer_recurrence_items(std::vector<WorkItem>& items, long lo, long hi)
{
    Recurrence2 rec = build_recurrence(Family::kummer);
    for (long n = lo; n <= hi; ++n) {
        for (Coefficient w : {Coefficient::P, Coefficient::Q}) {
            std::string name = std::string("recrel ") + coefficient_name(w) + " n=" + std::to_string(n);
            add1(items, name, [=] {
                return exact_record(name, check_recurrence(rec, {coeff(w, n + 1), coeff(w, n), coeff(w, n - 1)}, n));
            });
            for (CoeffVariant v : all_variants) {
                if (!variant_in_range(w, n - 1, v) || !variant_in_range(w, n + 1, v)) continue;
                std::string vname = name + " " + std::string(variant_name(v));
                add1(items, vname, [=] {
                    return exact_record(vname,
                                        check_recurrence(rec, {coeff(w, n + 1, v), coeff(w, n, v), coeff(w, n - 1, v)}, n));
                });
            }
        }
    }
}

void gosper_recurrence_items(std::vector<WorkItem>& items, long lo, long hi)
{
    Recurrence2 rec = build_recurrence(Family::gosper);
    for (long n = lo; n <= hi; ++n)
        for (GosperCoeff w : {GosperCoeff::K, GosperCoeff::L}) {
            std::string name = std::string("gosper recurrence ") + gosper_coeff_name(w) + " n=" + std::to_string(n);
            add1(items, name, [=] {
                return exact_record(name, check_recurrence(rec,
                                                           {gosper_normalized(w, n + 1), gosper_normalized(w, n),
                                                            gosper_normalized(w, n - 1)},
                                                           n));
            });
        }
}

void dixon_recurrence_items(std::vector<WorkItem>& items, long lo, long hi)
{
    Recurrence2 rec = build_recurrence(Family::dixon);
    for (long n = lo; n <= hi; ++n)
        for (DixonCoeff w : {DixonCoeff::P, DixonCoeff::Q}) {
            std::string name = std::string("dixon recurrence ") + dixon_coeff_name(w) + "~ n=" + std::to_string(n);
            add1(items, name, [=] {
                return exact_record(name,
                                    check_recurrence(rec, {dixon_coeff(w, n + 1), dixon_coeff(w, n), dixon_coeff(w, n - 1)}, n));
            });
        }
}

template <class Real>
void recurrence_items(std::vector<WorkItem>& items, const VerifyOptions& o)
{
    auto [lo, hi] = range_or(o, -7, 7);
    kummer_recurrence_items(items, lo, hi);
    auto [glo, ghi] = o.n_range.value_or(std::pair{-4L, 4L});
    gosper_recurrence_items(items, glo, ghi);
    dixon_recurrence_items(items, glo, ghi);
    double tol = tol_or(o, 1e-10);
    Point p(3, BigRational(1, 4));
    Recurrence2 rec = build_recurrence(Family::kummer);
    for (long n = -3; n <= 3; ++n) {
        std::string name = "recrel numeric n=" + std::to_string(n) + " " + pt(p);
        add1(items, name, [=] {
            auto S = [&](long k) {
                BigRational a = p[Symbol::a], b = p[Symbol::b];
                return eval_2f1_neg1<Real>(a + BigRational(k), b, a - b).value;
            };
            return numeric_record(name, recurrence_residual<Real>(rec, {S(n + 1), S(n), S(n - 1)}, n, p), tol);
        });
    }
}

template <class Real>
void gosper_items(std::vector<WorkItem>& items, const VerifyOptions& o)
{
    auto [lo, hi] = range_or(o, -4, 4);
    gosper_recurrence_items(items, lo, hi);
    for (long m = 1; m <= 6; ++m) {
        std::string name = "gosper K(-" + std::to_string(m) + ") explicit sum equals 4F3 form";
        add1(items, name, [=] {
            return exact_record(name, gosper_explicit_sum(GosperCoeff::K, -m) -
                                          sum_terminating(gosper_4f3(GosperCoeff::K, -m)));
        });
    }
    int count = points_or(o, 5);
    double tol = tol_or(o, 1e-8);
    Sampler s(o.seed);
    for (int i = 0; i < count; ++i) {
        Point p = s.gosper_point();
        for (long n = lo; n <= hi; ++n) {
            std::string name = "gengosper n=" + std::to_string(n) + " a=" + p[Symbol::a].to_string();
            add1(items, name, [=] { return numeric_record(name, gengosper_residual<Real>(n, p), tol); });
        }
    }
}

template <class Real>
void dixon_items(std::vector<WorkItem>& items, const VerifyOptions& o)
{
    auto [rlo, rhi] = range_or(o, -4, 4);
    dixon_recurrence_items(items, rlo, rhi);
    for (long n = 0; n <= 4; ++n)
        for (long k = 0; k <= std::min(2L, (n + 1) / 2); ++k)
            for (DixonCoeff w : {DixonCoeff::P, DixonCoeff::Q}) {
                std::string name = std::string("dixon c->inf limit ") + dixon_coeff_name(w) + "~ n=" + std::to_string(n) +
                                   " k=" + std::to_string(k);
                add1(items, name, [=] {
                    return exact_flag(name, dixon_kummer_limit(w, n, k), "limit differs from twice the Kummer term");
                });
            }
    auto [lo, hi] = range_or(o, -3, 1);
    int count = points_or(o, 5);
    double tol = tol_or(o, 1e-8);
    Sampler s(o.seed);
    for (int i = 0; i < count; ++i) {
        Point p = s.dixon_point();
        for (long n = lo; n <= hi; ++n) {
            std::string name = "gendixon n=" + std::to_string(n) + " " + pt(p, true);
            add1(items, name, [=] { return numeric_record(name, gendixon_residual<Real>(n, p), tol); });
        }
    }
}

void certificate_items(std::vector<WorkItem>& items, const VerifyOptions& o)
{
    auto [lo, hi] = range_or(o, 1, 12);
    if (lo < 1) throw DomainError("certificates need n >= 1");
    for (long n = lo; n <= hi; ++n)
        for (CertificateFamily f : {CertificateFamily::p_cert, CertificateFamily::q_cert}) {
            std::string name = std::string(f == CertificateFamily::p_cert ? "P" : "Q") + " certificate n=" + std::to_string(n);
            add1(items, name, [=] {
                CertificateReport r = verify_certificate_report(f, n);
                std::string why;
                if (r.failing_k >= 0) why = "telescoping fails at k=" + std::to_string(r.failing_k);
                else if (!r.ratio_matches) why = "R differs from r*F";
                else if (!r.boundary_zero) why = "boundary terms do not cancel";
                else if (!r.sum_zero) why = "k-sum does not vanish";
                return exact_flag(name, r.ok(), why);
            });
        }
    std::string name = "Q certificate with the opposite sign is rejected";
    add1(items, name, [=] {
        for (long n = lo; n <= hi; ++n)
            if (verify_certificate(CertificateFamily::q_cert, n, CertificateSign::displayed))
                return exact_flag(name, false, "accepted at n=" + std::to_string(n));
        return exact_flag(name, true, {});
    });
}

template <class Real>
void orbit_items(std::vector<WorkItem>& items, const VerifyOptions& o)
{
    auto [lo, hi] = range_or(o, 0, 3);
    if (lo < 0) throw DomainError("orbit needs m >= 0");
    int count = points_or(o, 10);
    Sampler s(o.seed);
    for (long m = lo; m <= hi; ++m)
        for (int i = 0; i < count; ++i) {
            OrbitLabel label = s.orbit_label(m);
            std::string name = "orbit " + label.to_string();
            add1(items, name, [=] {
                RatFunc ref = label.normalizer() * sum_terminating(label.spec());
                auto orbit = orbit_terminating(label);
                for (std::size_t j = 0; j < orbit.size(); ++j) {
                    RatFunc diff = exact_value(orbit[j]) - ref;
                    if (!diff.is_zero()) {
                        CheckRecord r = exact_record(name, diff);
                        r.detail = "entry " + std::to_string(j);
                        return r;
                    }
                }
                return exact_flag(name, orbit.size() == 18, "orbit has " + std::to_string(orbit.size()) + " entries");
            });
        }
    for (int i = 0; i < 50; ++i) {
        long m = 1 + i % 4;
        SeriesSpec spec = s.terminating_3f2(m);
        std::string name = "termhpg32 " + spec.to_string();
        add1(items, name, [=] { return exact_record(name, exact_value(transform_terminating(spec, m)) - sum_terminating(spec)); });
    }
    double tol = tol_or(o, 1e-8);
    for (int i = 0; i < 50; ++i) {
        SeriesSpec spec = s.thomae_instance();
        std::string name = "thomae " + spec.to_string();
        add1(items, name, [=] {
            using std::abs;
            Real lhs = evaluate<Real>(spec).value;
            Real rhs = evaluate<Real>(thomae_transform(spec)).value;
            return numeric_record(name, abs(lhs - rhs) / std::max(Real(1), abs(rhs)), tol);
        });
    }
    for (int i = 0; i < 10; ++i) {
        auto [A, B, C] = s.overlap_2f1();
        SeriesSpec spec{{LinearForm(A), LinearForm(B)}, {LinearForm(C)}, BigRational(-1, 3)};
        for (TwoTermKind k : {TwoTermKind::pfaff_a, TwoTermKind::pfaff_b, TwoTermKind::bateman_292}) {
            std::string name = std::string(two_term_name(k)) + " " + spec.to_string();
            add1(items, name, [=] {
                using std::abs;
                Real lhs = evaluate<Real>(spec).value;
                Real rhs = evaluate<Real>(two_term_2f1(k, spec)).value;
                return numeric_record(name, abs(lhs - rhs) / std::max(Real(1), abs(rhs)), tol);
            });
        }
    }
    for (long n = 1; n <= 4; ++n)
        for (auto [w, v] : {std::pair{Coefficient::P, CoeffVariant::alt_a}, std::pair{Coefficient::Q, CoeffVariant::alt_c}}) {
            std::string name = "thomae on " + std::string(variant_name(v)) + " series rejected n=" + std::to_string(n);
            add1(items, name, [=] {
                CoeffForm f = coeff_form(w, n, v);
                if (!f.series) return exact_flag(name, true, {});
                try {
                    thomae_transform(*f.series);
                } catch (const NoConvergence&) {
                    return exact_flag(name, true, {});
                }
                return exact_flag(name, false, "transform accepted a divergent series");
            });
        }
}

template <class Real>
void special_items(std::vector<WorkItem>& items, const VerifyOptions& o)
{
    std::vector<SpecialKind> kinds{SpecialKind::q4_zero, SpecialKind::specfo1, SpecialKind::specfo2};
    if (o.kind) kinds = {parse_special(*o.kind)};
    if (o.param && !o.kind) throw DomainError("--param needs --kind");
    for (SpecialKind k : kinds) {
        std::string kname(special_name(k));
        if (k == SpecialKind::q4_zero) {
            add(items, "Q(-4)", [] {
                Q4Report q = q4_report();
                CheckRecord disp = exact_record("Q(-4) equals the displayed form", q.computed - q4_displayed());
                if (!q.matches_display) disp.detail = "computed " + q.computed.to_string();
                return std::vector<CheckRecord>{
                    disp, exact_flag("Q(-4) vanishes on b=2a-7", q.vanishes_on_curve, "nonzero on the curve")};
            });
            std::vector<BigRational> as{BigRational(6), BigRational(7, 3)};
            if (o.param) as = {*o.param};
            for (const auto& a : as) {
                std::string name = "Q(-4) at a=" + a.to_string() + " b=" + (BigRational(2) * a - BigRational(7)).to_string();
                add1(items, name, [=] {
                    RatFunc q = coeff(Coefficient::Q, -4, CoeffVariant::neg);
                    return exact_record(name, RatFunc(q.eval(Point(a, BigRational(2) * a - BigRational(7)))));
                });
            }
            continue;
        }
        std::vector<std::pair<BigRational, double>> params;
        if (k == SpecialKind::specfo1) params = {{BigRational(5, 2), 1e-10}, {BigRational(11, 4), 1e-9}, {BigRational(7, 2), 1e-9}};
        else params = {{BigRational(3), 1e-8}, {BigRational(4), 1e-8}};
        if (o.param) params = {{*o.param, params.front().second}};
        for (const auto& [x, d] : params) {
            double tol = tol_or(o, d);
            std::string name = kname + (k == SpecialKind::specfo1 ? " c=" : " t=") + x.to_string();
            add1(items, name, [=] { return numeric_record(name, special_evaluation<Real>(k, x), tol); });
        }
    }
}

template <class Real>
void suite_items(std::string_view suite, std::vector<WorkItem>& items, const VerifyOptions& o)
{
    if (suite == "genkum") genkum_items<Real>(items, o);
    else if (suite == "kummer") kummer_items<Real>(items, o);
    else if (suite == "gosper") gosper_items<Real>(items, o);
    else if (suite == "dixon") dixon_items<Real>(items, o);
    else if (suite == "certificates") certificate_items(items, o);
    else if (suite == "orbit") orbit_items<Real>(items, o);
    else if (suite == "special") special_items<Real>(items, o);
    else if (suite == "recurrences") recurrence_items<Real>(items, o);
    else if (suite == "all") {
        // Each suite keeps its own ranges and parameters.
        VerifyOptions shared = o;
        shared.n_range.reset();
        shared.kind.reset();
        shared.param.reset();
        for (std::string_view s : suite_names)
            if (s != "all") suite_items<Real>(s, items, shared);
    } else
        throw ParseError("unknown suite '" + std::string(suite) + "'");
}

}  // namespace

std::vector<CheckRecord> run_suite(std::string_view suite, const VerifyOptions& opt)
{
    std::vector<WorkItem> items;
    with_precision(opt.precision, [&]<class Real>() { suite_items<Real>(suite, items, opt); });
    return run_items(items, opt.threads);
}

std::pair<long, long> parse_range(std::string_view text)
{
    auto dots = text.find("..");
    if (dots == std::string_view::npos) throw ParseError("range '" + std::string(text) + "' is not of the form lo..hi");
    auto num = [&](std::string_view s) {
        long v = 0;
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || p != s.data() + s.size())
            throw ParseError("bad range bound '" + std::string(s) + "'");
        return v;
    };
    return {num(text.substr(0, dots)), num(text.substr(dots + 2))};
}

}  // namespace hypeval::cli
