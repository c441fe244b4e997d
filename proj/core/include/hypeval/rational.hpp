#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hypeval {

// Exact rational number, always in lowest terms with positive denominator.
// Thin value wrapper over mpq_class; the wrapper exists so that arithmetic
// never yields gmpxx expression templates.
class BigRational {
public:
    BigRational() = default;
    BigRational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(long long v);       // NOLINT(google-explicit-constructor)
    BigRational(const mpz_class& num, const mpz_class& den);
    BigRational(long num, long den);
    explicit BigRational(const mpz_class& z) : q_(z) {}
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // "p/q", "-7", "0.25", "-1.5e-3" are all accepted and converted exactly.
    static BigRational parse(std::string_view text);

    const mpq_class& get() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    // Only meaningful when is_integer() and the value fits.
    bool fits_long() const { return is_integer() && q_.get_num().fits_slong_p(); }
    long to_long() const { return q_.get_num().get_si(); }

    // floor and ceiling as exact integers.
    mpz_class floor() const;
    mpz_class ceil() const;
    BigRational abs() const;
    BigRational inverse() const;
    BigRational pow(long e) const;

    double to_double() const { return q_.get_d(); }
    std::string to_string() const { return q_.get_str(); }

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational x, const BigRational& y) { return x += y; }
    friend BigRational operator-(BigRational x, const BigRational& y) { return x -= y; }
    friend BigRational operator*(BigRational x, const BigRational& y) { return x *= y; }
    friend BigRational operator/(BigRational x, const BigRational& y) { return x /= y; }

    friend bool operator==(const BigRational& x, const BigRational& y) { return x.q_ == y.q_; }
    friend std::strong_ordering operator<=>(const BigRational& x, const BigRational& y)
    {
        int c = cmp(x.q_, y.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

// Distance from r to the nearest integer.
BigRational distance_to_integer(const BigRational& r);

// True when r is one of 0, -1, -2, ...
bool is_nonpositive_integer(const BigRational& r);

}  // namespace hypeval

template <>
struct std::hash<hypeval::BigRational> {
    std::size_t operator()(const hypeval::BigRational& r) const { return r.hash(); }
};
