#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hypeval/gamma.hpp"
#include "hypeval/numeric.hpp"
#include "hypeval/ratfunc.hpp"
#include "hypeval/series.hpp"

namespace hypeval {

// Coefficients of 2F1(a+n, b; a-b; -1) = P(n) G_P + Q(n) G_Q.
enum class Coefficient { P, Q };

enum class CoeffVariant { thm1, thm2, neg, alt_a, alt_b, alt_c, alt_d, reflect };

inline constexpr CoeffVariant all_variants[] = {CoeffVariant::thm1,  CoeffVariant::thm2,  CoeffVariant::neg,
                                                CoeffVariant::alt_a, CoeffVariant::alt_b, CoeffVariant::alt_c,
                                                CoeffVariant::alt_d, CoeffVariant::reflect};

std::string_view variant_name(CoeffVariant v);
// "THM1", "thm1", "ALT_A", ... Throws ParseError.
CoeffVariant parse_variant(std::string_view name);
char coefficient_name(Coefficient c);

// thm1: n >= -1; thm2, alt_*: n >= 0; neg, reflect: n <= -1. alt_a and
// alt_b exist only for P, alt_c and alt_d only for Q.
bool variant_in_range(Coefficient which, long n, CoeffVariant v);
std::vector<CoeffVariant> variants_in_range(Coefficient which, long n);
// thm1 for n >= -1, neg below.
CoeffVariant default_variant(long n);

// A variant written as prefactor * sum_terminating(series); no series means
// the value is the prefactor alone.
struct CoeffForm {
    RatFunc prefactor;
    std::optional<SeriesSpec> series;
};

// Not available for reflect. Throws VariantOutOfRange.
CoeffForm coeff_form(Coefficient which, long n, CoeffVariant v);

// Memoized; safe to call concurrently. Throws VariantOutOfRange.
RatFunc coeff(Coefficient which, long n, CoeffVariant v);
RatFunc coeff(Coefficient which, long n);

// P(-n-1) from P(n-1) with a -> a-2n, b -> b-n (and the Q analogue).
RatFunc reflect_thm3(Coefficient which, long n);

// Gamma(a-b) Gamma((a+1)/2) / (Gamma(a) Gamma((a+1)/2-b)) for P,
// Gamma(a-b) Gamma(a/2) / (Gamma(a) Gamma(a/2-b)) for Q.
GammaProduct genkum_gamma_term(Coefficient which);
// Gamma(1+a-b) Gamma(1+a/2) / (Gamma(1+a) Gamma(1+a/2-b)).
GammaProduct kummer_rhs();

// P(n) G_P + Q(n) G_Q at a point; variants are tried in order until one
// is pole-free there.
template <class Real>
NumericValue<Real> genkum_rhs(long n, const Point& p);

// |2F1(a+n, b; a-b; -1) - rhs| / max(1, |rhs|).
template <class Real>
Real genkum_residual(long n, const Point& p);

// Residual of 2F1(a, b; 1+a-b; -1) against kummer_rhs().
template <class Real>
Real kummer_residual(const Point& p);

enum class WhippleForm { w841, w841a };

// Gamma-ratio series expansions of 2F1(A, B; C; -1).
template <class Real>
NumericValue<Real> whipple_expansion(const BigRational& A, const BigRational& B, const BigRational& C, WhippleForm form,
                                     std::size_t max_terms = std::size_t{1} << 21);

// Residuals of the two non-integer-nu expansions of 2F1(a+nu, b; a-b; -1)
// in terms of 3F2 at 1. nu must not be a non-negative integer.
template <class Real>
std::pair<Real, Real> whipple_nu(const BigRational& nu, const Point& p);

}  // namespace hypeval
