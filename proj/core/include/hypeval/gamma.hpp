#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypeval/linear_form.hpp"
#include "hypeval/numeric.hpp"
#include "hypeval/ratfunc.hpp"

namespace hypeval {

template <class Real>
struct SignedLog {
    Real log_abs{};
    int sign = 1;
};

// log|Gamma(x)| and sign(Gamma(x)). Throws PoleAtPoint at 0, -1, -2, ...
template <class Real>
SignedLog<Real> log_gamma(const Real& x);
// Same, with the argument reduction done exactly.
template <class Real>
SignedLog<Real> log_gamma(const BigRational& x);

// sin(pi r) with exact reduction of r modulo 2.
template <class Real>
Real sin_pi(const BigRational& r);

struct GammaFactor {
    LinearForm arg;
    int exponent;
};

// base^exponent with base > 0; exact when the exponent evaluates to an
// integer, otherwise evaluated in floating point.
struct PowerFactor {
    BigRational base;
    LinearForm exponent;
};

// prefactor * prod Gamma(arg)^exponent * prod base^exponent.
class GammaProduct {
public:
    GammaProduct() = default;
    explicit GammaProduct(RatFunc prefactor) : prefactor_(std::move(prefactor)) {}

    // "G(1/2)", "3/4*G(c)*G(3-c/2)/G(5-c)/G(3c/2-2)", "2^(1/2)*G(a)^-2".
    static GammaProduct parse(std::string_view text);

    GammaProduct& gamma(const LinearForm& arg, int exponent = 1);
    GammaProduct& power(const BigRational& base, const LinearForm& exponent);
    GammaProduct& scale(const RatFunc& f);
    GammaProduct& operator*=(const GammaProduct& o);
    friend GammaProduct operator*(GammaProduct x, const GammaProduct& y) { return x *= y; }
    GammaProduct inverse() const;
    GammaProduct substitute(const std::array<LinearForm, 3>& images) const;

    const RatFunc& prefactor() const noexcept { return prefactor_; }
    const std::vector<GammaFactor>& factors() const noexcept { return factors_; }
    const std::vector<PowerFactor>& powers() const noexcept { return powers_; }
    bool has_gamma_or_power() const noexcept { return !factors_.empty() || !powers_.empty(); }

    std::string to_string() const;

private:
    RatFunc prefactor_{1};
    std::vector<GammaFactor> factors_;
    std::vector<PowerFactor> powers_;
};

// Gamma at a non-positive integer in numerator position, or a prefactor
// pole, throws PoleAtPoint. In denominator position it contributes
// 1/Gamma = 0 and the product is 0.
template <class Real>
NumericValue<Real> eval_gamma_product(const GammaProduct& g, const Point& p);

// Gamma(x)/Gamma(y) with sign; 0 when y is a pole, PoleAtPoint when x is.
template <class Real>
Real gamma_ratio(const BigRational& x, const BigRational& y);

}  // namespace hypeval
