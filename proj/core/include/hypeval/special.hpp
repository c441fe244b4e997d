#pragma once

#include <string_view>

#include "hypeval/numeric.hpp"
#include "hypeval/ratfunc.hpp"

namespace hypeval {

enum class SpecialKind { q4_zero, specfo1, specfo2 };

std::string_view special_name(SpecialKind k);
// "Q4_ZERO", "specfo1", ... Throws ParseError.
SpecialKind parse_special(std::string_view name);

// -4 (a-1)(a-3)(2a-b-7) / ((b-1)(b-2)(b-3)), as usually printed.
RatFunc q4_displayed();

struct Q4Report {
    RatFunc computed;         // coeff(Q, -4, NEG)
    bool matches_display;     // computed == q4_displayed()
    bool vanishes_on_curve;   // computed at b = 2a-7 is the zero function
};
Q4Report q4_report();

// 2F1(3-c, 7-2c; c; -1) against 3/4 G(c) G(3-c/2) / (G(5-c) G(3c/2-2)).
template <class Real>
Real specfo1_residual(const BigRational& c);

// With d = t^2-2:
// 2F1(-(2t^2-7t+6)/d, (t^2+4t-8)/d; (2t^2+3t-8)/d; -1)
//   against (t^2+3t-6)/(t(t-1)) G((3t-4)/d) G((t^2+7t-12)/(2d)) / (G((7t-10)/d) G(t(t-1)/(2d))).
// Throws DomainError at t = 0, 1.
template <class Real>
Real specfo2_residual(const BigRational& t);

// q4_zero: |Q(-4)| at (param, 2 param - 7), which is 0 exactly when the
// symbolic zero holds; specfo1 / specfo2: the residuals above.
template <class Real>
Real special_evaluation(SpecialKind kind, const BigRational& param);

}  // namespace hypeval
