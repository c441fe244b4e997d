#include "hypeval/ratfunc.hpp"

#include <algorithm>

#include "hypeval/errors.hpp"

namespace hypeval {

namespace {

using Factors = std::vector<RatFunc::Factor>;

const RatFunc::Factor* find_factor(const Factors& fs, const MultiPoly& p)
{
    for (const auto& f : fs)
        if (f.poly == p) return &f;
    return nullptr;
}

// Common multiple: every factor with the larger multiplicity.
Factors merge_max(const Factors& x, const Factors& y)
{
    Factors r = x;
    for (const auto& f : y) {
        auto it = std::find_if(r.begin(), r.end(), [&](const RatFunc::Factor& g) { return g.poly == f.poly; });
        if (it == r.end())
            r.push_back(f);
        else
            it->mult = std::max(it->mult, f.mult);
    }
    return r;
}

}  // namespace

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num)
{
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    divide_by_poly(den, 1);
    cancel();
}

// Appends p^mult to the denominator: constant content moves into the
// numerator, monomial content is split into single-symbol factors.
void RatFunc::divide_by_poly(MultiPoly p, unsigned mult)
{
    if (p.is_zero()) throw DivisionByZero("division by zero polynomial");
    if (num_.is_zero()) return;
    BigRational lc = p.lead().second;
    if (lc != BigRational(1)) {
        p *= lc.inverse();
        num_ *= lc.pow(-static_cast<long>(mult));
    }
    auto add_factor = [&](const MultiPoly& q, unsigned m) {
        for (auto& f : den_) {
            if (f.poly == q) {
                f.mult += m;
                return;
            }
        }
        den_.push_back(Factor{q, m});
    };
    Exponents mc = p.monomial_content();
    if (mc != Exponents{0, 0, 0}) {
        p = p.divide_monomial(mc);
        for (std::size_t i = 0; i < 3; ++i)
            if (mc[i]) add_factor(MultiPoly::variable(static_cast<Symbol>(i)), mc[i] * mult);
    }
    if (!p.is_constant()) add_factor(p, mult);
}

void RatFunc::cancel()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& f : den_) {
        while (f.mult > 0) {
            auto q = num_.divide_exact(f.poly);
            if (!q) break;
            num_ = std::move(*q);
            --f.mult;
        }
    }
    std::erase_if(den_, [](const Factor& f) { return f.mult == 0; });
}

// Product of the factors in target that are missing from this denominator.
MultiPoly RatFunc::cofactor(const Factors& target) const
{
    MultiPoly r(1);
    for (const auto& t : target) {
        const Factor* mine = find_factor(den_, t.poly);
        unsigned have = mine ? mine->mult : 0;
        if (t.mult > have) r = r * t.poly.pow(t.mult - have);
    }
    return r;
}

MultiPoly RatFunc::denominator() const
{
    MultiPoly d(1);
    for (const auto& f : den_) d = d * f.poly.pow(f.mult);
    return d;
}

std::optional<BigRational> RatFunc::constant_value() const
{
    if (!den_.empty() || !num_.is_constant()) return std::nullopt;
    return num_.constant_term();
}

BigRational RatFunc::eval(const Point& p) const
{
    BigRational den(1);
    for (const auto& f : den_) {
        BigRational v = f.poly.eval(p);
        if (v.is_zero()) throw PoleAtPoint("denominator vanishes at " + p.to_string());
        den *= v.pow(f.mult);
    }
    return num_.eval(p) / den;
}

RatFunc RatFunc::substitute(const std::array<LinearForm, 3>& images) const
{
    std::array<MultiPoly, 3> polys{images[0].to_poly(), images[1].to_poly(), images[2].to_poly()};
    RatFunc r(num_.substitute(polys));
    for (const auto& f : den_) {
        MultiPoly s = f.poly.substitute(polys);
        if (s.is_zero()) throw PoleAtPoint("substitution makes a denominator factor vanish");
        r.divide_by_poly(s, f.mult);
    }
    r.cancel();
    return r;
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    Factors common = merge_max(den_, o.den_);
    num_ = num_ * cofactor(common) + o.num_ * o.cofactor(common);
    den_ = std::move(common);
    cancel();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o)
{
    return *this += -o;
}

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    num_ = num_ * o.num_;
    for (const auto& f : o.den_) {
        auto it = std::find_if(den_.begin(), den_.end(), [&](const Factor& g) { return g.poly == f.poly; });
        if (it == den_.end())
            den_.push_back(f);
        else
            it->mult += f.mult;
    }
    cancel();
    return *this;
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    RatFunc r(denominator());
    r.divide_by_poly(num_, 1);
    r.cancel();
    return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    return *this *= o.inverse();
}

RatFunc RatFunc::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1);
    for (long i = 0; i < e; ++i) r *= *this;
    return r;
}

bool equal(const RatFunc& f, const RatFunc& g)
{
    Factors common = merge_max(f.den_, g.den_);
    return f.num_ * f.cofactor(common) == g.num_ * g.cofactor(common);
}

std::optional<RatFunc> limit_at_infinity(const RatFunc& f, Symbol s)
{
    MultiPoly n = f.numerator();
    MultiPoly d = f.denominator();
    if (n.is_zero()) return RatFunc();
    auto dn = n.degree(s);
    auto dd = d.degree(s);
    if (dn > dd) return std::nullopt;
    if (dn < dd) return RatFunc();
    return RatFunc(n.coefficient_of(s, dn), d.coefficient_of(s, dd));
}

namespace {

// Scale so that all coefficients are coprime integers with the
// denominator's leading coefficient positive.
void to_integer_content(MultiPoly& n, MultiPoly& d)
{
    mpz_class l = 1;
    mpz_class g = 0;
    for (const MultiPoly* p : {&n, &d})
        for (const auto& [e, c] : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get().get_den_mpz_t());
    n *= BigRational(l);
    d *= BigRational(l);
    for (const MultiPoly* p : {&n, &d})
        for (const auto& [e, c] : p->terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get().get_num_mpz_t());
    if (g != 0 && g != 1) {
        BigRational inv(mpz_class(1), g);
        n *= inv;
        d *= inv;
    }
}

bool needs_parens(const MultiPoly& p)
{
    return p.size() > 1 || (p.size() == 1 && p.lead().second.sign() < 0 && !p.is_constant());
}

}  // namespace

std::string RatFunc::to_string() const
{
    MultiPoly n = num_;
    MultiPoly d = denominator();
    to_integer_content(n, d);
    if (d == MultiPoly(1)) return n.to_string();
    std::string ns = n.to_string();
    std::string ds = d.to_string();
    if (needs_parens(n)) ns = "(" + ns + ")";
    bool bare = d.is_constant();
    for (Symbol sy : all_symbols)
        if (d == MultiPoly::variable(sy)) bare = true;
    if (!bare) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

}  // namespace hypeval
