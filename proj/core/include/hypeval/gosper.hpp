#pragma once

#include "hypeval/gamma.hpp"
#include "hypeval/numeric.hpp"
#include "hypeval/ratfunc.hpp"
#include "hypeval/series.hpp"

namespace hypeval {

// 2F1(-a, 1/2; 2a+3/2+n; 1/4) = K(n) T_K(n) + L(n) T_L(n)
enum class GosperCoeff { K, L };

char gosper_coeff_name(GosperCoeff c);

// Coefficients in a. K(0) = L(1) = 1, K(1) = L(0) = 0. Memoized.
RatFunc gosper_coeff(GosperCoeff which, long n);

// The finite sums as usually written, which carry an extra factor 3 (and
// a sign for L at negative n) relative to gosper_coeff:
//   K(n) = (-1)^n sum_{ceil(n/3)}^{floor(n/2)} (27/4)^k n (k-1)! / ((n-2k)! (3k-n)!) (a+1/2)_k/(a+1)_k,  n > 1
//   K(-m) = sum_0^{floor(m/3)} (-4/27)^k m (m-2k-1)! / ((m-3k)! k!) (-a)_k/(-a+1/2)_k
//   L(-m) = (-1)^m sum_{ceil((m+1)/3)}^{floor((m+1)/2)} (27/4)^k (m+1)(k-1)! / ((m-2k+1)! (3k-m-1)!) (-a-1/2)_k/(-a)_k
// Throws DomainError for n in {0, 1} and for L with n > 1 (no explicit sum).
RatFunc gosper_explicit_sum(GosperCoeff which, long n);
// The 4F3 forms: L(n), n > 1, and K(-m), m >= 1. Throws DomainError elsewhere.
SeriesSpec gosper_4f3(GosperCoeff which, long n);

// T_K(n) = 2^(n+3/2)/3^(n+1) G(a+5/4+n/2) G(a+3/4+n/2) G(a+1/2)
//          / (G(a+7/6+n/3) G(a+5/6+n/3) G(a+1/2+n/3))
// T_L(n) = -(-3)^(n-2) 2^(3/2) G(a+5/4+n/2) G(a+3/4+n/2) G(a+1)
//          / (G(a+3/2) G(a+1/2+n/2) G(a+1+n/2))
// The rational part of the powers is folded into the prefactor and a
// single 2^(1/2) kept as a power factor.
GammaProduct gosper_gamma_term(GosperCoeff which, long n);

// 2F1(-a, 1/2; 2a+3/2+n; 1/4)
SeriesSpec gosper_lhs(long n);

// Gamma-normalized sequences on which the three-term recurrence holds:
// u(n) = (2a+3/2)_n/(3a+3/2)_n K(n), v(n) = (-3)^n (2a+3/2)_n/(2a+1)_n L(n),
// with (x)_{-m} = 1/(x-m)_m.
RatFunc gosper_normalized(GosperCoeff which, long n);

// |LHS - RHS| / max(1, |RHS|). Throws PoleAtPoint, NoConvergence.
template <class Real>
Real gengosper_residual(long n, const Point& p);

}  // namespace hypeval
