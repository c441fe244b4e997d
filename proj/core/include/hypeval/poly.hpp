#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hypeval/rational.hpp"

namespace hypeval {

enum class Symbol : std::uint8_t { a = 0, b = 1, c = 2 };

inline constexpr std::array<Symbol, 3> all_symbols{Symbol::a, Symbol::b, Symbol::c};

char symbol_name(Symbol s);

// Assignment of rational values to a, b, c.
struct Point {
    std::array<BigRational, 3> v{};

    Point() = default;
    Point(BigRational a, BigRational b, BigRational c = BigRational(0)) : v{std::move(a), std::move(b), std::move(c)} {}

    BigRational& operator[](Symbol s) { return v[static_cast<std::size_t>(s)]; }
    const BigRational& operator[](Symbol s) const { return v[static_cast<std::size_t>(s)]; }

    std::string to_string() const;
    friend bool operator==(const Point&, const Point&) = default;
};

using Exponents = std::array<std::uint32_t, 3>;

// Graded order; ties broken by the exponent of c, then b, then a.
struct MonomialOrder {
    bool operator()(const Exponents& x, const Exponents& y) const noexcept
    {
        std::uint32_t dx = x[0] + x[1] + x[2];
        std::uint32_t dy = y[0] + y[1] + y[2];
        if (dx != dy) return dx < dy;
        if (x[2] != y[2]) return x[2] < y[2];
        if (x[1] != y[1]) return x[1] < y[1];
        return x[0] < y[0];
    }
};

// Sparse polynomial in a, b, c with rational coefficients. Zero
// coefficients are never stored.
class MultiPoly {
public:
    using Terms = std::map<Exponents, BigRational, MonomialOrder>;

    MultiPoly() = default;
    MultiPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)
    MultiPoly(int constant) : MultiPoly(BigRational(constant)) {}  // NOLINT(google-explicit-constructor)

    static MultiPoly variable(Symbol s);
    static MultiPoly monomial(const Exponents& e, const BigRational& coeff);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    BigRational constant_term() const;

    std::uint32_t total_degree() const;
    std::uint32_t degree(Symbol s) const;
    // Leading monomial and coefficient; polynomial must be nonzero.
    const std::pair<const Exponents, BigRational>& lead() const;
    // Componentwise minimum exponent over all terms.
    Exponents monomial_content() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const BigRational& s);
    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
    friend MultiPoly operator*(MultiPoly x, const BigRational& s) { return x *= s; }
    friend MultiPoly operator*(const BigRational& s, MultiPoly x) { return x *= s; }
    friend bool operator==(const MultiPoly& x, const MultiPoly& y) { return x.terms_ == y.terms_; }

    MultiPoly pow(unsigned e) const;
    // Divides every term by x^e; e must not exceed monomial_content().
    MultiPoly divide_monomial(const Exponents& e) const;
    // Quotient when d divides this polynomial exactly, otherwise nullopt.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

    BigRational eval(const Point& p) const;
    // Simultaneous substitution a -> images[0], b -> images[1], c -> images[2].
    MultiPoly substitute(const std::array<MultiPoly, 3>& images) const;
    // Coefficient of s^e, as a polynomial in the remaining symbols.
    MultiPoly coefficient_of(Symbol s, std::uint32_t e) const;

    // Terms in descending monomial order, e.g. "2*a^2 - 1/3*a*b + 5".
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const BigRational& c);
    Terms terms_;
};

}  // namespace hypeval
