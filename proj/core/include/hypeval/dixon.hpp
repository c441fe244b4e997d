#pragma once

#include <optional>

#include "hypeval/gamma.hpp"
#include "hypeval/numeric.hpp"
#include "hypeval/ratfunc.hpp"
#include "hypeval/series.hpp"

namespace hypeval {

// 3F2(a+n, b, c; a-b, a-c; 1) = P~(n)/2 T_P + Q~(n)/2 T_Q
enum class DixonCoeff { P, Q };

char dixon_coeff_name(DixonCoeff c);

// Written as prefactor * 4F3(...; 1); no series means the prefactor alone.
struct DixonForm {
    RatFunc prefactor;
    std::optional<SeriesSpec> series;
};

// n >= 0:  P~(n) = 4F3(-n/2, -(n+1)/2, b, c; -n, a/2, (1-a)/2+b+c; 1)
//          Q~(n) = 4F3(-(n-1)/2, -n/2, b, c; -n, (1+a)/2, 1-a/2+b+c; 1)
// n = -1:  P~ = 2, Q~ = 0
// n = -N-1, N >= 1:
//          P~ = 4^N (1-a/2)_N ((1+a)/2-b-c)_N / ((1-b)_N (1-c)_N)
//               * 4F3(-N/2, -(N-1)/2, b-N, c-N; 1-N, a/2-N, (1-a)/2+b+c-N; 1)
//          Q~ = -4^N ((1-a)/2)_N (a/2-b-c)_N / ((1-b)_N (1-c)_N)
//               * 4F3(-(N-1)/2, -(N-2)/2, b-N, c-N; 1-N, (1+a)/2-N, 1-a/2+b+c-N; 1)
DixonForm dixon_form(DixonCoeff which, long n);
// Memoized.
RatFunc dixon_coeff(DixonCoeff which, long n);

// k-th summand of the P~(n) or Q~(n) series (times its prefactor).
RatFunc dixon_term(DixonCoeff which, long n, long k);

// T_P = G((a+1)/2) G(a-b) G(a-c) G((a+1)/2-b-c) / (G(a) G((a+1)/2-b) G((a+1)/2-c) G(a-b-c))
// T_Q = G(a/2) G(a-b) G(a-c) G(a/2-b-c) / (G(a) G(a/2-b) G(a/2-c) G(a-b-c))
GammaProduct dixon_gamma_term(DixonCoeff which);

// 3F2(a+n, b, c; a-b, a-c; 1); convergence margin a-2b-2c-n.
SeriesSpec dixon_lhs(long n);

// For n >= 0 and k up to min(2, termination): the c -> infinity limit of the
// k-th term of P~(n) (resp. Q~(n)) equals twice the k-th term of the
// corresponding Kummer coefficient in its THM2 form.
bool dixon_kummer_limit(DixonCoeff which, long n, long k);

// |LHS - RHS| / max(1, |RHS|). Throws NoConvergence, PoleAtPoint.
template <class Real>
Real gendixon_residual(long n, const Point& p);

}  // namespace hypeval
