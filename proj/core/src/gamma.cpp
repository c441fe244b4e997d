#include "hypeval/gamma.hpp"

#include <boost/math/constants/constants.hpp>
#include <cctype>
#include <mutex>
#include <sstream>

#include "hypeval/errors.hpp"

namespace hypeval {

namespace {

// Argument shift and number of asymptotic terms per precision tier.
template <class Real>
struct StirlingParams;
template <>
struct StirlingParams<double> {
    static constexpr long shift = 10;
    static constexpr int terms = 8;
};
template <>
struct StirlingParams<long double> {
    static constexpr long shift = 15;
    static constexpr int terms = 10;
};
template <>
struct StirlingParams<Quad> {
    static constexpr long shift = 30;
    static constexpr int terms = 14;
};

// B_0 .. B_{2*count}, exact.
const std::vector<BigRational>& bernoulli_numbers()
{
    static const std::vector<BigRational> table = [] {
        constexpr int max_index = 2 * 16;
        std::vector<BigRational> b(max_index + 1);
        b[0] = 1;
        for (int m = 1; m <= max_index; ++m) {
            BigRational s(0);
            mpz_class binom = 1;  // C(m+1, j)
            for (int j = 0; j < m; ++j) {
                s += BigRational(binom) * b[static_cast<std::size_t>(j)];
                binom = binom * (m + 1 - j) / (j + 1);
            }
            b[static_cast<std::size_t>(m)] = -s / BigRational(m + 1);
        }
        return b;
    }();
    return table;
}

template <class Real>
const std::vector<Real>& stirling_coefficients()
{
    // B_{2j} / (2j (2j-1))
    static const std::vector<Real> coeffs = [] {
        const auto& b = bernoulli_numbers();
        std::vector<Real> c;
        for (int j = 1; j <= StirlingParams<Real>::terms; ++j)
            c.push_back(to_real<Real>(b[static_cast<std::size_t>(2 * j)] / BigRational(2 * j * (2 * j - 1))));
        return c;
    }();
    return coeffs;
}

// log Gamma(x) for x >= shift threshold.
template <class Real>
Real stirling(const Real& x)
{
    using std::log;
    const Real half_log_2pi = log(2 * boost::math::constants::pi<Real>()) / 2;
    const auto& c = stirling_coefficients<Real>();
    Real inv = 1 / x;
    Real inv2 = inv * inv;
    Real series = 0;
    for (std::size_t j = c.size(); j-- > 0;) series = series * inv2 + c[j];
    series *= inv;
    return (x - Real(0.5)) * log(x) - x + half_log_2pi + series;
}

template <class Real>
Real sin_pi_real(const Real& x)
{
    using std::round;
    using std::sin;
    Real t = x - 2 * round(x / 2);
    if (t > Real(0.5)) t = 1 - t;
    if (t < Real(-0.5)) t = -1 - t;
    return sin(boost::math::constants::pi<Real>() * t);
}

}  // namespace

template <class Real>
Real sin_pi(const BigRational& r)
{
    using std::sin;
    BigRational half = r / BigRational(2);
    // nearest integer to r/2
    BigRational k(BigRational(half + BigRational(1, 2)).floor());
    BigRational t = r - BigRational(2) * k;
    if (t > BigRational(1, 2)) t = BigRational(1) - t;
    if (t < BigRational(-1, 2)) t = BigRational(-1) - t;
    if (t.is_zero()) return Real(0);
    return sin(boost::math::constants::pi<Real>() * to_real<Real>(t));
}

template <class Real>
SignedLog<Real> log_gamma(const Real& x)
{
    using std::floor;
    using std::log;
    using std::abs;
    if (x <= 0 && floor(x) == x) throw PoleAtPoint("Gamma pole at a non-positive integer");
    if (x < Real(0.5)) {
        Real s = sin_pi_real(x);
        SignedLog<Real> g = log_gamma(Real(1 - x));
        return {log(boost::math::constants::pi<Real>()) - log(abs(s)) - g.log_abs, s < 0 ? -1 : 1};
    }
    Real y = x;
    Real prod = 1;
    while (y < Real(StirlingParams<Real>::shift)) {
        prod *= y;
        y += 1;
    }
    return {stirling(y) - log(prod), 1};
}

template <class Real>
SignedLog<Real> log_gamma(const BigRational& x)
{
    using std::log;
    using std::abs;
    if (is_nonpositive_integer(x)) throw PoleAtPoint("Gamma pole at " + x.to_string());
    if (x < BigRational(1, 2)) {
        Real s = sin_pi<Real>(x);
        SignedLog<Real> g = log_gamma<Real>(BigRational(1) - x);
        return {log(boost::math::constants::pi<Real>()) - log(abs(s)) - g.log_abs, s < 0 ? -1 : 1};
    }
    BigRational shift = BigRational(StirlingParams<Real>::shift) - x;
    long n = shift.sign() > 0 ? shift.ceil().get_si() : 0;
    BigRational prod(1);
    for (long j = 0; j < n; ++j) prod *= x + BigRational(j);
    BigRational y = x + BigRational(n);
    return {stirling(to_real<Real>(y)) - log(to_real<Real>(prod)), 1};
}

template <class Real>
Real gamma_ratio(const BigRational& x, const BigRational& y)
{
    using std::exp;
    if (is_nonpositive_integer(x)) throw PoleAtPoint("Gamma pole at " + x.to_string());
    if (is_nonpositive_integer(y)) return Real(0);
    if (x == y) return Real(1);
    auto gx = log_gamma<Real>(x);
    auto gy = log_gamma<Real>(y);
    Real v = exp(gx.log_abs - gy.log_abs);
    return gx.sign * gy.sign < 0 ? -v : v;
}

GammaProduct& GammaProduct::gamma(const LinearForm& arg, int exponent)
{
    if (exponent == 0) return *this;
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
        if (it->arg == arg) {
            it->exponent += exponent;
            if (it->exponent == 0) factors_.erase(it);
            return *this;
        }
    }
    factors_.push_back(GammaFactor{arg, exponent});
    return *this;
}

GammaProduct& GammaProduct::power(const BigRational& base, const LinearForm& exponent)
{
    if (base.sign() <= 0) throw DomainError("power factor needs a positive base");
    if (base == BigRational(1) || (exponent.is_constant() && exponent.constant().is_zero())) return *this;
    if (exponent.is_constant() && exponent.constant().is_integer() && exponent.constant().fits_long()) {
        prefactor_ *= RatFunc(base.pow(exponent.constant().to_long()));
        return *this;
    }
    for (auto it = powers_.begin(); it != powers_.end(); ++it) {
        if (it->base == base) {
            it->exponent += exponent;
            LinearForm e = it->exponent;
            if (e.is_constant() && e.constant().is_integer() && e.constant().fits_long()) {
                powers_.erase(it);
                prefactor_ *= RatFunc(base.pow(e.constant().to_long()));
            }
            return *this;
        }
    }
    powers_.push_back(PowerFactor{base, exponent});
    return *this;
}

GammaProduct& GammaProduct::scale(const RatFunc& f)
{
    prefactor_ *= f;
    return *this;
}

GammaProduct& GammaProduct::operator*=(const GammaProduct& o)
{
    prefactor_ *= o.prefactor_;
    for (const auto& f : o.factors_) gamma(f.arg, f.exponent);
    for (const auto& p : o.powers_) power(p.base, p.exponent);
    return *this;
}

GammaProduct GammaProduct::inverse() const
{
    GammaProduct r(prefactor_.inverse());
    for (const auto& f : factors_) r.gamma(f.arg, -f.exponent);
    for (const auto& p : powers_) r.power(p.base, -p.exponent);
    return r;
}

GammaProduct GammaProduct::substitute(const std::array<LinearForm, 3>& images) const
{
    GammaProduct r(prefactor_.substitute(images));
    for (const auto& f : factors_) r.gamma(f.arg.substitute(images), f.exponent);
    for (const auto& p : powers_) r.power(p.base, p.exponent.substitute(images));
    return r;
}

std::string GammaProduct::to_string() const
{
    std::ostringstream os;
    os << prefactor_.to_string();
    auto wrap = [](const std::string& s) { return "(" + s + ")"; };
    for (const auto& p : powers_) os << " * " << p.base << "^" << wrap(p.exponent.to_string());
    for (const auto& f : factors_) {
        os << (f.exponent > 0 ? " * " : " / ") << "G" << wrap(f.arg.to_string());
        int e = f.exponent > 0 ? f.exponent : -f.exponent;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

namespace {

class ProductParser {
public:
    explicit ProductParser(std::string_view s) : s_(s) {}

    GammaProduct parse_all()
    {
        GammaProduct g = product();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("in gamma product '" + std::string(s_) + "': " + what);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    // Text up to the parenthesis matching the one just consumed.
    std::string_view balanced()
    {
        std::size_t start = pos_;
        int depth = 1;
        while (pos_ < s_.size()) {
            char ch = s_[pos_++];
            if (ch == '(') ++depth;
            if (ch == ')' && --depth == 0) return s_.substr(start, pos_ - 1 - start);
        }
        fail("unbalanced parentheses");
    }

    long integer_exponent()
    {
        char ch = peek();
        if (ch == '(') {
            ++pos_;
            LinearForm e = LinearForm::parse(balanced());
            if (!e.is_constant() || !e.constant().is_integer()) fail("exponent of G must be an integer");
            return e.constant().to_long();
        }
        std::size_t start = pos_;
        if (ch == '-' || ch == '+') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("missing exponent");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    GammaProduct product()
    {
        GammaProduct g = item();
        for (;;) {
            char ch = peek();
            if (ch == '*') {
                ++pos_;
                g *= item();
            } else if (ch == '/') {
                ++pos_;
                g *= item().inverse();
            } else {
                return g;
            }
        }
    }

    GammaProduct item()
    {
        char ch = peek();
        if (ch == 'G') {
            ++pos_;
            if (peek() != '(') fail("expected '(' after G");
            ++pos_;
            LinearForm arg = LinearForm::parse(balanced());
            long e = 1;
            if (peek() == '^') {
                ++pos_;
                e = integer_exponent();
            }
            if (e == 0) return GammaProduct();
            GammaProduct g;
            g.gamma(arg, static_cast<int>(e));
            return g;
        }
        if (ch == '(') {
            ++pos_;
            std::string_view inner = balanced();
            GammaProduct g = ProductParser(inner).parse_all();
            if (peek() == '^') {
                ++pos_;
                long e = integer_exponent();
                GammaProduct base = e < 0 ? g.inverse() : g;
                GammaProduct r;
                for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
                return r;
            }
            return g;
        }
        if (ch == '-' || ch == '.' || std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            if (ch == '-') ++pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            BigRational v = BigRational::parse(s_.substr(start, pos_ - start));
            if (peek() == '^') {
                ++pos_;
                LinearForm e;
                if (peek() == '(') {
                    ++pos_;
                    e = LinearForm::parse(balanced());
                } else {
                    e = LinearForm(BigRational(integer_exponent()));
                }
                GammaProduct g;
                g.power(v, e);
                return g;
            }
            return GammaProduct(RatFunc(v));
        }
        if (ch == 'a' || ch == 'b' || ch == 'c') {
            ++pos_;
            return GammaProduct(RatFunc::symbol(ch == 'a' ? Symbol::a : (ch == 'b' ? Symbol::b : Symbol::c)));
        }
        fail(ch == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, ch) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

GammaProduct GammaProduct::parse(std::string_view text)
{
    return ProductParser(text).parse_all();
}

template <class Real>
NumericValue<Real> eval_gamma_product(const GammaProduct& g, const Point& p)
{
    using std::abs;
    using std::exp;
    using std::log;
    BigRational pref = g.prefactor().eval(p);
    bool vanishes = false;
    Real log_sum = 0;
    Real magnitude = 0;
    int sign = 1;
    for (const auto& f : g.factors()) {
        BigRational x = f.arg.eval(p);
        if (is_nonpositive_integer(x)) {
            if (f.exponent > 0) throw PoleAtPoint("Gamma(" + x.to_string() + ") in numerator position");
            vanishes = true;
            continue;
        }
        auto lg = log_gamma<Real>(x);
        log_sum += f.exponent * lg.log_abs;
        magnitude += abs(Real(f.exponent)) * (abs(lg.log_abs) + 2);
        if (lg.sign < 0 && (f.exponent % 2 != 0)) sign = -sign;
    }
    for (const auto& pw : g.powers()) {
        BigRational e = pw.exponent.eval(p);
        if (e.is_integer() && e.fits_long()) {
            pref *= pw.base.pow(e.to_long());
            continue;
        }
        Real term = to_real<Real>(e) * log(to_real<Real>(pw.base));
        log_sum += term;
        magnitude += abs(term) + 2;
    }
    if (vanishes || pref.is_zero()) return {Real(0), Real(0)};
    Real value = to_real<Real>(pref) * exp(log_sum);
    if (sign < 0) value = -value;
    Real err = abs(value) * epsilon<Real>() * (4 * magnitude + 8);
    return {value, err};
}

#define HYPEVAL_INSTANTIATE_GAMMA(Real)                                                   \
    template SignedLog<Real> log_gamma<Real>(const Real&);                               \
    template SignedLog<Real> log_gamma<Real>(const BigRational&);                        \
    template Real sin_pi<Real>(const BigRational&);                                      \
    template Real gamma_ratio<Real>(const BigRational&, const BigRational&);             \
    template NumericValue<Real> eval_gamma_product<Real>(const GammaProduct&, const Point&);

HYPEVAL_INSTANTIATE_GAMMA(double)
HYPEVAL_INSTANTIATE_GAMMA(long double)
HYPEVAL_INSTANTIATE_GAMMA(Quad)

}  // namespace hypeval
