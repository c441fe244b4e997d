#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypeval/linear_form.hpp"
#include "hypeval/poly.hpp"
#include "hypeval/rational.hpp"

namespace hypeval {

// Exact rational function in a, b, c.
//
// The numerator is kept expanded; the denominator is kept as a product of
// monic polynomial factors with multiplicities, so its expanded form always
// has leading coefficient 1. A factor that divides the numerator exactly is
// cancelled. No gcd is attempted beyond that, so two equal functions may
// have different representations; compare with equal().
class RatFunc {
public:
    struct Factor {
        MultiPoly poly;
        unsigned mult;
    };

    RatFunc() = default;
    RatFunc(const BigRational& c) : num_(c) {}   // NOLINT(google-explicit-constructor)
    RatFunc(int c) : num_(BigRational(c)) {}     // NOLINT(google-explicit-constructor)
    RatFunc(const MultiPoly& p) : num_(p) {}     // NOLINT(google-explicit-constructor)
    RatFunc(const LinearForm& f) : num_(f.to_poly()) {}  // NOLINT(google-explicit-constructor)
    // Throws DivisionByZero when den is the zero polynomial.
    RatFunc(const MultiPoly& num, const MultiPoly& den);

    static RatFunc symbol(Symbol s) { return RatFunc(MultiPoly::variable(s)); }

    const MultiPoly& numerator() const noexcept { return num_; }
    // Expanded denominator with leading coefficient 1.
    MultiPoly denominator() const;
    const std::vector<Factor>& denominator_factors() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.empty(); }
    // Constant value, when the function is a constant.
    std::optional<BigRational> constant_value() const;

    // Throws PoleAtPoint when a denominator factor vanishes at p.
    BigRational eval(const Point& p) const;
    // Simultaneous substitution of a, b, c by affine forms. Throws
    // PoleAtPoint if the substitution kills a denominator factor.
    RatFunc substitute(const std::array<LinearForm, 3>& images) const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc x, const RatFunc& y) { return x += y; }
    friend RatFunc operator-(RatFunc x, const RatFunc& y) { return x -= y; }
    friend RatFunc operator*(RatFunc x, const RatFunc& y) { return x *= y; }
    friend RatFunc operator/(RatFunc x, const RatFunc& y) { return x /= y; }

    RatFunc pow(long e) const;
    RatFunc inverse() const;

    // Expanded, integer-coefficient form such as "(a - b)/(2*a)".
    std::string to_string() const;

private:
    void divide_by_poly(MultiPoly p, unsigned mult);
    void cancel();
    MultiPoly cofactor(const std::vector<Factor>& target) const;

    MultiPoly num_;
    std::vector<Factor> den_;

    friend bool equal(const RatFunc& f, const RatFunc& g);
};

// f.num * g.den == g.num * f.den, evaluated over a common multiple of the
// two factored denominators.
bool equal(const RatFunc& f, const RatFunc& g);

inline bool operator==(const RatFunc& f, const RatFunc& g) { return equal(f, g); }

// Limit as symbol s tends to infinity; nullopt when it diverges.
std::optional<RatFunc> limit_at_infinity(const RatFunc& f, Symbol s);

}  // namespace hypeval
