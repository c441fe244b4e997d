#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hypeval/numeric.hpp"
#include "hypeval/series.hpp"

namespace hypeval {

inline constexpr std::size_t default_max_terms = std::size_t{1} << 21;

// Numeric pFq at a point. Terminating series are summed exactly and
// rounded. |z| < 1 (or p <= q) uses a geometric tail bound; z = 1 with
// positive margin uses extrapolation in the known tail exponents; z = -1
// with margin > -1 uses averaging of alternating partial sums.
// tol <= 0 means the working epsilon.
template <class Real>
NumericValue<Real> eval_series_numeric(const SeriesSpec& spec, const Point& point = {},
                                       std::size_t max_terms = default_max_terms, Real tol = Real(0));

// 2F1(A, B; C; -1), analytically continued. Direct summation when
// C - A - B > -1/2, otherwise 2^-A 2F1(A, C-B; C; 1/2).
template <class Real>
NumericValue<Real> eval_2f1_neg1(const BigRational& A, const BigRational& B, const BigRational& C);
// The two paths individually.
template <class Real>
NumericValue<Real> eval_2f1_neg1_direct(const BigRational& A, const BigRational& B, const BigRational& C);
template <class Real>
NumericValue<Real> eval_2f1_neg1_pfaff(const BigRational& A, const BigRational& B, const BigRational& C);

// Level counts for the accelerated modes at a precision tier.
template <class Real>
struct AccelerationLevels {
    static std::size_t alternating();
    static std::size_t extrapolation();
};

// Generic accelerated sums for caller-supplied term sequences; `scale`
// bounds the parameter magnitudes so the asymptotic regime can be reached.
template <class Real>
NumericValue<Real> sum_alternating_series(const std::function<Real()>& next, const Real& scale,
                                          std::size_t max_terms = default_max_terms);
template <class Real>
NumericValue<Real> sum_algebraic_series(const std::function<Real()>& next, const Real& margin, const Real& scale,
                                        std::size_t max_terms = default_max_terms);

}  // namespace hypeval
