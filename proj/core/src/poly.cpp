#include "hypeval/poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "hypeval/errors.hpp"

namespace hypeval {

char symbol_name(Symbol s)
{
    switch (s) {
    case Symbol::a: return 'a';
    case Symbol::b: return 'b';
    case Symbol::c: return 'c';
    }
    return '?';
}

std::string Point::to_string() const
{
    return "a=" + v[0].to_string() + ", b=" + v[1].to_string() + ", c=" + v[2].to_string();
}

MultiPoly::MultiPoly(const BigRational& constant)
{
    if (!constant.is_zero()) terms_.emplace(Exponents{0, 0, 0}, constant);
}

MultiPoly MultiPoly::variable(Symbol s)
{
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(s)] = 1;
    return monomial(e, BigRational(1));
}

MultiPoly MultiPoly::monomial(const Exponents& e, const BigRational& coeff)
{
    MultiPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(e, coeff);
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

BigRational MultiPoly::constant_term() const
{
    auto it = terms_.find(Exponents{0, 0, 0});
    return it == terms_.end() ? BigRational(0) : it->second;
}

std::uint32_t MultiPoly::total_degree() const
{
    if (terms_.empty()) return 0;
    const auto& e = terms_.rbegin()->first;
    return e[0] + e[1] + e[2];
}

std::uint32_t MultiPoly::degree(Symbol s) const
{
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(s)]);
    return d;
}

const std::pair<const Exponents, BigRational>& MultiPoly::lead() const
{
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return *terms_.rbegin();
}

Exponents MultiPoly::monomial_content() const
{
    if (terms_.empty()) return {0, 0, 0};
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

void MultiPoly::add_term(const Exponents& e, const BigRational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y)
{
    MultiPoly r;
    if (x.is_zero() || y.is_zero()) return r;
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) {
            Exponents e{ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]};
            r.add_term(e, cx * cy);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result(1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::divide_monomial(const Exponents& m) const
{
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[0] < m[0] || e[1] < m[1] || e[2] < m[2]) throw DomainError("monomial does not divide polynomial");
        r.terms_.emplace_hint(r.terms_.end(), Exponents{e[0] - m[0], e[1] - m[1], e[2] - m[2]}, c);
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const
{
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return MultiPoly();
    const auto& [dl, dc] = d.lead();
    if (d.size() == 1) {
        const auto cm = monomial_content();
        if (cm[0] < dl[0] || cm[1] < dl[1] || cm[2] < dl[2]) return std::nullopt;
        MultiPoly q = divide_monomial(dl);
        q *= dc.inverse();
        return q;
    }
    MultiPoly rem = *this;
    MultiPoly quot;
    while (!rem.is_zero()) {
        const auto& [rl, rc] = rem.lead();
        if (rl[0] < dl[0] || rl[1] < dl[1] || rl[2] < dl[2]) return std::nullopt;
        Exponents qe{rl[0] - dl[0], rl[1] - dl[1], rl[2] - dl[2]};
        BigRational qc = rc / dc;
        quot.add_term(qe, qc);
        for (const auto& [e, c] : d.terms_) rem.add_term(Exponents{e[0] + qe[0], e[1] + qe[1], e[2] + qe[2]}, -(c * qc));
    }
    return quot;
}

BigRational MultiPoly::eval(const Point& p) const
{
    BigRational sum(0);
    for (const auto& [e, c] : terms_) {
        BigRational t = c;
        for (std::size_t i = 0; i < 3; ++i)
            if (e[i]) t *= p.v[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const std::array<MultiPoly, 3>& images) const
{
    std::array<std::vector<MultiPoly>, 3> powers;
    for (std::size_t i = 0; i < 3; ++i) powers[i].push_back(MultiPoly(1));
    auto power = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
        while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * images[i]);
        return powers[i][k];
    };
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        MultiPoly t(c);
        for (std::size_t i = 0; i < 3; ++i)
            if (e[i]) t = t * power(i, e[i]);
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::coefficient_of(Symbol s, std::uint32_t k) const
{
    auto i = static_cast<std::size_t>(s);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        Exponents f = e;
        f[i] = 0;
        r.add_term(f, c);
    }
    return r;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c.sign() < 0;
        BigRational mag = c.abs();
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool is_const = e == Exponents{0, 0, 0};
        bool unit = mag == BigRational(1);
        if (!unit || is_const) os << mag;
        bool need_star = !unit || is_const;
        for (std::size_t i = 0; i < 3; ++i) {
            if (!e[i]) continue;
            if (need_star) os << '*';
            os << symbol_name(static_cast<Symbol>(i));
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace hypeval
