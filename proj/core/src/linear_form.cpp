#include "hypeval/linear_form.hpp"

#include <cctype>

#include "hypeval/errors.hpp"

namespace hypeval {

LinearForm LinearForm::symbol(Symbol s)
{
    LinearForm f;
    f.q_[1 + static_cast<std::size_t>(s)] = 1;
    return f;
}

bool LinearForm::is_constant() const
{
    return q_[1].is_zero() && q_[2].is_zero() && q_[3].is_zero();
}

BigRational LinearForm::eval(const Point& p) const
{
    BigRational r = q_[0];
    for (std::size_t i = 0; i < 3; ++i)
        if (!q_[i + 1].is_zero()) r += q_[i + 1] * p.v[i];
    return r;
}

MultiPoly LinearForm::to_poly() const
{
    MultiPoly p(q_[0]);
    for (std::size_t i = 0; i < 3; ++i) {
        Exponents e{0, 0, 0};
        e[i] = 1;
        p += MultiPoly::monomial(e, q_[i + 1]);
    }
    return p;
}

LinearForm LinearForm::substitute(const std::array<LinearForm, 3>& images) const
{
    LinearForm r(q_[0]);
    for (std::size_t i = 0; i < 3; ++i)
        if (!q_[i + 1].is_zero()) r += images[i] * q_[i + 1];
    return r;
}

LinearForm LinearForm::operator-() const
{
    LinearForm r = *this;
    for (auto& q : r.q_) q = -q;
    return r;
}

LinearForm& LinearForm::operator+=(const LinearForm& o)
{
    for (std::size_t i = 0; i < 4; ++i) q_[i] += o.q_[i];
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o)
{
    for (std::size_t i = 0; i < 4; ++i) q_[i] -= o.q_[i];
    return *this;
}

LinearForm& LinearForm::operator*=(const BigRational& s)
{
    for (auto& q : q_) q *= s;
    return *this;
}

LinearForm& LinearForm::operator/=(const BigRational& s)
{
    if (s.is_zero()) throw DivisionByZero("linear form divided by zero");
    for (auto& q : q_) q /= s;
    return *this;
}

std::string LinearForm::to_string() const
{
    return to_poly().to_string();
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    LinearForm parse_all()
    {
        LinearForm r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("in '" + std::string(s_) + "': " + what);
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

    LinearForm expr()
    {
        LinearForm r = term();
        for (;;) {
            char ch = peek();
            if (ch == '+') {
                ++pos_;
                r += term();
            } else if (ch == '-') {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    static LinearForm product(const LinearForm& x, const LinearForm& y, const Parser& p)
    {
        if (x.is_constant()) return y * x.constant();
        if (y.is_constant()) return x * y.constant();
        p.fail("product of two non-constant terms is not linear");
    }

    LinearForm term()
    {
        LinearForm r = factor();
        for (;;) {
            char ch = peek();
            if (ch == '*') {
                ++pos_;
                r = product(r, factor(), *this);
            } else if (ch == '/') {
                ++pos_;
                LinearForm d = factor();
                if (!d.is_constant()) fail("division by a non-constant term");
                if (d.constant().is_zero()) fail("division by zero");
                r /= d.constant();
            } else if (ch == '(' || ch == 'a' || ch == 'b' || ch == 'c') {
                r = product(r, factor(), *this);
            } else {
                return r;
            }
        }
    }

    LinearForm factor()
    {
        char ch = peek();
        if (ch == '-') {
            ++pos_;
            return -factor();
        }
        if (ch == '+') {
            ++pos_;
            return factor();
        }
        if (ch == '(') {
            ++pos_;
            LinearForm r = expr();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return r;
        }
        if (ch == 'a') return ++pos_, LinearForm::symbol(Symbol::a);
        if (ch == 'b') return ++pos_, LinearForm::symbol(Symbol::b);
        if (ch == 'c') return ++pos_, LinearForm::symbol(Symbol::c);
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
        if (ch == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    LinearForm number()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t save = pos_++;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            } else {
                pos_ = save;
            }
        }
        return LinearForm(BigRational::parse(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

LinearForm LinearForm::parse(std::string_view text)
{
    return Parser(text).parse_all();
}

}  // namespace hypeval
