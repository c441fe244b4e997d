#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hypeval/numeric.hpp"
#include "hypeval/ratfunc.hpp"

namespace hypeval {

enum class Family { kummer, gosper, dixon };

std::string_view family_name(Family f);
// "KUMMER", "gosper", ... Throws ParseError.
Family parse_family(std::string_view name);

// Polynomial in n with RatFunc coefficients, lowest degree first.
class NPoly {
public:
    NPoly() = default;
    NPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {}  // NOLINT(google-explicit-constructor)
    // c1 n + c0
    static NPoly linear(const RatFunc& c1, const RatFunc& c0);

    RatFunc at(long n) const;
    const std::vector<RatFunc>& coefficients() const noexcept { return c_; }

    NPoly& operator*=(const NPoly& o);
    NPoly& operator*=(const RatFunc& s);
    friend NPoly operator*(NPoly x, const NPoly& y) { return x *= y; }
    friend NPoly operator*(NPoly x, const RatFunc& s) { return x *= s; }

    std::string to_string() const;

private:
    std::vector<RatFunc> c_;
};

// c_plus(n) S(n+1) + c_zero(n) S(n) + c_minus(n) S(n-1) = 0
struct Recurrence2 {
    Family family;
    NPoly c_plus, c_zero, c_minus;

    std::array<RatFunc, 3> at(long n) const;
    std::string to_string() const;
};

Recurrence2 build_recurrence(Family family);

// c_plus v[0] + c_zero v[1] + c_minus v[2] with values (S(n+1), S(n), S(n-1)).
RatFunc check_recurrence(const Recurrence2& rec, const std::array<RatFunc, 3>& values, long n);

// |c_plus v[0] + c_zero v[1] + c_minus v[2]| divided by the largest of the
// three term magnitudes (or 1 when all vanish). Throws PoleAtPoint.
template <class Real>
Real recurrence_residual(const Recurrence2& rec, const std::array<Real, 3>& values, long n, const Point& p);

enum class CertificateFamily { p_cert, q_cert };

// Sign convention for the Q certificate: `corrected` is the one that
// telescopes, `displayed` is the opposite sign. They coincide for P.
enum class CertificateSign { corrected, displayed };

// Summands of P(n), Q(n) as finite k-sums; zero outside 0 <= k <= ceil(n/2)
// for P and 0 <= k <= floor(n/2) for Q.
RatFunc cert_summand(CertificateFamily f, long n, long k);
// r(n, k) itself; throws DivisionByZero where its denominator vanishes.
RatFunc cert_ratio(CertificateFamily f, long n, long k, CertificateSign sign = CertificateSign::corrected);
// R(n, k) = r(n, k) F(n, k) in cancelled factorial form, zero for k <= 0
// and wherever the factorial in its denominator has a negative argument.
RatFunc cert_combined(CertificateFamily f, long n, long k, CertificateSign sign = CertificateSign::corrected);

struct CertificateReport {
    // First k where the telescoping identity fails, or -1.
    long failing_k = -1;
    bool ratio_matches = true;
    bool boundary_zero = true;
    bool sum_zero = true;
    bool ok() const { return failing_k < 0 && ratio_matches && boundary_zero && sum_zero; }
};

// Replays the creative-telescoping proof for one n >= 1, with the
// recurrence taken at m = n+1:
//   c+(m) F(m+1, k) + c0(m) F(m, k) + c-(m) F(m-1, k) = R(n, k+1) - R(n, k)
// for every k where some term is nonzero, R = r F wherever both are
// defined, the boundary bookkeeping (sum over k <= floor(n/2) for P,
// floor((n-1)/2) for Q, minus R(n, ceil((n+1)/2)) resp. R(n, ceil(n/2)))
// vanishes, and the k-sum of the left side is zero.
CertificateReport verify_certificate_report(CertificateFamily f, long n,
                                            CertificateSign sign = CertificateSign::corrected);
bool verify_certificate(CertificateFamily f, long n, CertificateSign sign = CertificateSign::corrected);

template <class Real>
struct ContiguityReport {
    // (a-2b) K - 2(a-b) S(0) + (a-b) S(-1), K the Kummer right side
    Real gauss;
    // S(0) - (G_P + G_Q)/2
    Real genkum0;
};

// Residuals relative to max(1, largest term). Throws PoleAtPoint.
template <class Real>
ContiguityReport<Real> contiguity_initial_checks(const Point& p);

}  // namespace hypeval
