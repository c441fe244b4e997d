#pragma once

#include <array>
#include <string>
#include <string_view>

#include "hypeval/poly.hpp"
#include "hypeval/rational.hpp"

namespace hypeval {

// q0 + qa*a + qb*b + qc*c with exact rational coefficients.
class LinearForm {
public:
    LinearForm() = default;
    LinearForm(const BigRational& constant) : q_{constant, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    LinearForm(int constant) : LinearForm(BigRational(constant)) {}     // NOLINT(google-explicit-constructor)
    LinearForm(BigRational q0, BigRational qa, BigRational qb, BigRational qc = BigRational(0))
        : q_{std::move(q0), std::move(qa), std::move(qb), std::move(qc)}
    {
    }

    static LinearForm symbol(Symbol s);
    // Accepts affine expressions such as "a/2-b", "(a+1)/2", "-0.25", "3/4", "2a+1".
    static LinearForm parse(std::string_view text);

    const BigRational& constant() const noexcept { return q_[0]; }
    const BigRational& coeff(Symbol s) const noexcept { return q_[1 + static_cast<std::size_t>(s)]; }
    bool is_constant() const;

    BigRational eval(const Point& p) const;
    MultiPoly to_poly() const;
    LinearForm substitute(const std::array<LinearForm, 3>& images) const;

    LinearForm operator-() const;
    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const BigRational& s);
    LinearForm& operator/=(const BigRational& s);
    friend LinearForm operator+(LinearForm x, const LinearForm& y) { return x += y; }
    friend LinearForm operator-(LinearForm x, const LinearForm& y) { return x -= y; }
    friend LinearForm operator*(LinearForm x, const BigRational& s) { return x *= s; }
    friend LinearForm operator*(const BigRational& s, LinearForm x) { return x *= s; }
    friend LinearForm operator/(LinearForm x, const BigRational& s) { return x /= s; }
    friend bool operator==(const LinearForm& x, const LinearForm& y) { return x.q_ == y.q_; }

    std::string to_string() const;

private:
    std::array<BigRational, 4> q_{};
};

inline const LinearForm sym_a = LinearForm::symbol(Symbol::a);
inline const LinearForm sym_b = LinearForm::symbol(Symbol::b);
inline const LinearForm sym_c = LinearForm::symbol(Symbol::c);

}  // namespace hypeval
