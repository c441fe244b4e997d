#include "hypeval/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "hypeval/errors.hpp"

namespace hypeval {

BigRational::BigRational(long long v)
{
    // mpz has no long long constructor on every platform
    q_ = mpq_class(mpz_class(std::to_string(v)));
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

mpz_class pow10(unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

// Decimal literal with optional fraction and exponent, sign already stripped.
BigRational parse_decimal(std::string_view s, std::string_view whole)
{
    std::string_view mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mant = s.substr(0, e);
        std::string_view ex = s.substr(e + 1);
        bool neg = false;
        if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
            neg = ex[0] == '-';
            ex.remove_prefix(1);
        }
        if (!all_digits(ex) || ex.size() > 6) throw ParseError("bad exponent in '" + std::string(whole) + "'");
        exp10 = std::stol(std::string(ex));
        if (neg) exp10 = -exp10;
    }
    std::string digits;
    long frac = 0;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mant.substr(0, dot);
        std::string_view fp = mant.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
            throw ParseError("bad decimal literal '" + std::string(whole) + "'");
        digits = std::string(ip) + std::string(fp);
        frac = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mant)) throw ParseError("bad number '" + std::string(whole) + "'");
        digits = std::string(mant);
    }
    mpz_class num(digits, 10);
    long shift = exp10 - frac;
    if (shift >= 0) return BigRational(mpz_class(num * pow10(static_cast<unsigned long>(shift))));
    return BigRational(num, pow10(static_cast<unsigned long>(-shift)));
}

}  // namespace

BigRational BigRational::parse(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    BigRational r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash);
        std::string_view q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) throw ParseError("bad rational literal '" + std::string(text) + "'");
        mpz_class den(std::string(q), 10);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        r = BigRational(mpz_class(std::string(p), 10), den);
    } else {
        r = parse_decimal(s, text);
    }
    return neg ? -r : r;
}

mpz_class BigRational::floor() const
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class BigRational::ceil() const
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

BigRational BigRational::abs() const
{
    BigRational r;
    r.q_ = ::abs(q_);
    return r;
}

BigRational BigRational::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero");
    BigRational r;
    r.q_ = 1 / q_;
    return r;
}

BigRational BigRational::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    BigRational r;
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.q_ = mpq_class(n, d);
    return r;
}

BigRational BigRational::operator-() const
{
    BigRational r;
    r.q_ = -q_;
    return r;
}

BigRational& BigRational::operator+=(const BigRational& o)
{
    q_ += o.q_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o)
{
    q_ -= o.q_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o)
{
    q_ *= o.q_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o)
{
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::size_t BigRational::hash() const
{
    std::size_t h = std::hash<std::string>{}(q_.get_str(16));
    return h;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r)
{
    return os << r.to_string();
}

BigRational distance_to_integer(const BigRational& r)
{
    BigRational lo(r.floor());
    BigRational d1 = r - lo;
    BigRational d2 = BigRational(1) - d1;
    return d1 < d2 ? d1 : d2;
}

bool is_nonpositive_integer(const BigRational& r)
{
    return r.is_integer() && r.sign() <= 0;
}

}  // namespace hypeval
