#include "hypeval/recurrence.hpp"

#include <algorithm>
#include <cctype>

#include "hypeval/errors.hpp"
#include "hypeval/gamma.hpp"
#include "hypeval/hypergeometric.hpp"
#include "hypeval/kummer.hpp"
#include "hypeval/series.hpp"

namespace hypeval {

namespace {

long floor_half(long n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }
long ceil_half(long n) { return -floor_half(-n); }

RatFunc sign_pow(long k) { return RatFunc(BigRational(k % 2 == 0 ? 1 : -1)); }

RatFunc pow4_inv(long k)
{
    return RatFunc(BigRational(1) / BigRational(4).pow(k));
}

const LinearForm& half_a()
{
    static const LinearForm f = sym_a / BigRational(2);
    return f;
}

const LinearForm& half_a1()
{
    static const LinearForm f = (sym_a + LinearForm(1)) / BigRational(2);
    return f;
}

}  // namespace

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::kummer: return "KUMMER";
    case Family::gosper: return "GOSPER";
    case Family::dixon: return "DIXON";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    std::string upper;
    for (char ch : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    for (Family f : {Family::kummer, Family::gosper, Family::dixon})
        if (family_name(f) == upper) return f;
    throw ParseError("unknown family '" + std::string(name) + "'");
}

NPoly NPoly::linear(const RatFunc& c1, const RatFunc& c0) { return NPoly({c0, c1}); }

RatFunc NPoly::at(long n) const
{
    RatFunc r;
    RatFunc x{BigRational(n)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

NPoly& NPoly::operator*=(const NPoly& o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<RatFunc> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    return *this;
}

NPoly& NPoly::operator*=(const RatFunc& s)
{
    for (auto& c : c_) c *= s;
    return *this;
}

std::string NPoly::to_string() const
{
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].to_string() + ")";
        if (i >= 1) s += "*n";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

std::array<RatFunc, 3> Recurrence2::at(long n) const { return {c_plus.at(n), c_zero.at(n), c_minus.at(n)}; }

std::string Recurrence2::to_string() const
{
    return "[" + c_plus.to_string() + "] S(n+1) + [" + c_zero.to_string() + "] S(n) + [" + c_minus.to_string() +
           "] S(n-1) = 0";
}

Recurrence2 build_recurrence(Family family)
{
    RatFunc a = RatFunc::symbol(Symbol::a);
    RatFunc b = RatFunc::symbol(Symbol::b);
    RatFunc c = RatFunc::symbol(Symbol::c);
    auto lin = [](const RatFunc& c1, const RatFunc& c0) { return NPoly::linear(c1, c0); };
    switch (family) {
    case Family::kummer:
        return {family, lin(2, a * 2), lin(-3, a * -2), lin(1, b)};
    case Family::gosper:
        return {family, lin(2, a * 4 + 2) * lin(2, a * 6 + 3),
                lin(2, a * 4 + 3) * lin(4, a * 6 + 1),
                lin(2, a * 4 + 1) * lin(2, a * 4 + 3) * RatFunc(-3)};
    case Family::dixon:
        return {family, lin(1, a) * lin(1, b * 2 + c * 2 - a + 1),
                NPoly({a * a - a * b * 2 - a * c * 2 - a, b * -3 - c * 3 - 1, RatFunc(-2)}),
                lin(1, b) * lin(1, c)};
    }
    throw DomainError("unknown family");
}

RatFunc check_recurrence(const Recurrence2& rec, const std::array<RatFunc, 3>& values, long n)
{
    auto c = rec.at(n);
    return c[0] * values[0] + c[1] * values[1] + c[2] * values[2];
}

template <class Real>
Real recurrence_residual(const Recurrence2& rec, const std::array<Real, 3>& values, long n, const Point& p)
{
    using std::abs;
    auto c = rec.at(n);
    Real sum = 0;
    Real scale = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        Real t = to_real<Real>(c[i].eval(p)) * values[i];
        sum += t;
        scale = std::max(scale, abs(t));
    }
    if (scale == 0) scale = 1;
    return abs(sum) / scale;
}

RatFunc cert_summand(CertificateFamily f, long n, long k)
{
    if (n < 0) throw DomainError("certificate summands need n >= 0");
    if (k < 0) return RatFunc();
    RatFunc base = sign_pow(k) * pow4_inv(k) * RatFunc(BigRational(1, 2));
    if (f == CertificateFamily::p_cert) {
        if (k > ceil_half(n)) return RatFunc();
        BigRational fac = BigRational(n + 1) * factorial(n - k) / (factorial(n - 2 * k + 1) * factorial(k));
        return base * RatFunc(fac) * pochhammer(sym_b, k) / pochhammer(half_a(), k);
    }
    if (k > floor_half(n)) return RatFunc();
    BigRational fac = factorial(n - k) / (factorial(n - 2 * k) * factorial(k));
    return base * RatFunc(fac) * pochhammer(sym_b, k) / pochhammer(half_a1(), k);
}

RatFunc cert_ratio(CertificateFamily f, long n, long k, CertificateSign sign)
{
    RatFunc a = RatFunc::symbol(Symbol::a);
    if (f == CertificateFamily::p_cert) {
        RatFunc num = RatFunc(BigRational(-2 * k * (n - k + 1))) * (a + RatFunc(2 * k - 2));
        BigRational den = BigRational(n - 2 * k + 2) * BigRational(n - 2 * k + 3);
        if (den.is_zero()) throw DivisionByZero("certificate denominator vanishes");
        return num / RatFunc(den);
    }
    long s = sign == CertificateSign::corrected ? -2 : 2;
    RatFunc num = RatFunc(BigRational(s * k * (n - k + 1))) * (a + RatFunc(2 * k - 1));
    BigRational den = BigRational(n - 2 * k + 1) * BigRational(n - 2 * k + 2);
    if (den.is_zero()) throw DivisionByZero("certificate denominator vanishes");
    return num / RatFunc(den);
}

RatFunc cert_combined(CertificateFamily f, long n, long k, CertificateSign sign)
{
    if (k <= 0 || k > n + 1) return RatFunc();
    RatFunc a = RatFunc::symbol(Symbol::a);
    RatFunc base = sign_pow(k) * pow4_inv(k) * RatFunc(BigRational(-k));
    if (f == CertificateFamily::p_cert) {
        if (n - 2 * k + 3 < 0) return RatFunc();
        BigRational fac = BigRational(n + 1) * factorial(n - k + 1) / (factorial(n - 2 * k + 3) * factorial(k));
        return base * (a + RatFunc(2 * k - 2)) * RatFunc(fac) * pochhammer(sym_b, k) / pochhammer(half_a(), k);
    }
    if (n - 2 * k + 2 < 0) return RatFunc();
    BigRational fac = factorial(n - k + 1) / (factorial(n - 2 * k + 2) * factorial(k));
    RatFunc r = base * (a + RatFunc(2 * k - 1)) * RatFunc(fac) * pochhammer(sym_b, k) / pochhammer(half_a1(), k);
    return sign == CertificateSign::corrected ? r : -r;
}

CertificateReport verify_certificate_report(CertificateFamily f, long n, CertificateSign sign)
{
    if (n < 1) throw DomainError("certificate check needs n >= 1");
    CertificateReport rep;
    Recurrence2 rec = build_recurrence(Family::kummer);
    long m = n + 1;
    auto c = rec.at(m);
    long kmax = ceil_half(m + 1) + 1;
    RatFunc total;
    for (long k = 0; k <= kmax; ++k) {
        RatFunc lhs = c[0] * cert_summand(f, m + 1, k) + c[1] * cert_summand(f, m, k) + c[2] * cert_summand(f, m - 1, k);
        total += lhs;
        if (rep.failing_k < 0 && !equal(lhs, cert_combined(f, n, k + 1, sign) - cert_combined(f, n, k, sign)))
            rep.failing_k = k;
        RatFunc F = cert_summand(f, n, k);
        if (F.is_zero()) continue;
        try {
            if (!equal(cert_ratio(f, n, k, sign) * F, cert_combined(f, n, k, sign))) rep.ratio_matches = false;
        } catch (const DivisionByZero&) {
        }
    }
    rep.sum_zero = total.is_zero() || equal(total, RatFunc());
    long upper = f == CertificateFamily::p_cert ? floor_half(n) : floor_half(n - 1);
    long edge = f == CertificateFamily::p_cert ? ceil_half(n + 1) : ceil_half(n);
    RatFunc tele;
    for (long k = 0; k <= upper; ++k) tele += cert_combined(f, n, k + 1, sign) - cert_combined(f, n, k, sign);
    tele -= cert_combined(f, n, edge, sign);
    rep.boundary_zero = tele.is_zero() || equal(tele, RatFunc());
    return rep;
}

bool verify_certificate(CertificateFamily f, long n, CertificateSign sign)
{
    return verify_certificate_report(f, n, sign).ok();
}

template <class Real>
ContiguityReport<Real> contiguity_initial_checks(const Point& p)
{
    using std::abs;
    const BigRational& a = p[Symbol::a];
    const BigRational& b = p[Symbol::b];
    BigRational amb = a - b;
    if (is_nonpositive_integer(amb)) throw PoleAtPoint("a-b is a non-positive integer");
    Real K = eval_gamma_product<Real>(kummer_rhs(), p).value;
    Real s0 = eval_2f1_neg1<Real>(a, b, amb).value;
    Real sm1 = eval_2f1_neg1<Real>(a - BigRational(1), b, amb).value;
    Real t1 = to_real<Real>(a - BigRational(2) * b) * K;
    Real t2 = -2 * to_real<Real>(amb) * s0;
    Real t3 = to_real<Real>(amb) * sm1;
    Real scale1 = std::max({Real(1), abs(t1), abs(t2), abs(t3)});
    Real gp = eval_gamma_product<Real>(genkum_gamma_term(Coefficient::P), p).value;
    Real gq = eval_gamma_product<Real>(genkum_gamma_term(Coefficient::Q), p).value;
    Real rhs = (gp + gq) / 2;
    Real scale2 = std::max({Real(1), abs(s0), abs(rhs)});
    return {abs(t1 + t2 + t3) / scale1, abs(s0 - rhs) / scale2};
}

#define HYPEVAL_INSTANTIATE_RECURRENCE(Real)                                                                 \
    template Real recurrence_residual<Real>(const Recurrence2&, const std::array<Real, 3>&, long, const Point&); \
    template ContiguityReport<Real> contiguity_initial_checks<Real>(const Point&);

HYPEVAL_INSTANTIATE_RECURRENCE(double)
HYPEVAL_INSTANTIATE_RECURRENCE(long double)
HYPEVAL_INSTANTIATE_RECURRENCE(Quad)

}  // namespace hypeval
