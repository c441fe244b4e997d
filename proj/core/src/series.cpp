#include "hypeval/series.hpp"

#include <sstream>

#include "hypeval/errors.hpp"

namespace hypeval {

std::optional<long> SeriesSpec::termination_index() const
{
    std::optional<long> k;
    for (const auto& u : upper) {
        if (!u.is_constant()) continue;
        const BigRational& v = u.constant();
        if (!is_nonpositive_integer(v) || !(-v).fits_long()) continue;
        long m = (-v).to_long();
        if (!k || m < *k) k = m;
    }
    return k;
}

SeriesSpec SeriesSpec::at(const Point& p) const
{
    SeriesSpec r;
    r.z = z;
    for (const auto& u : upper) r.upper.emplace_back(u.eval(p));
    for (const auto& l : lower) r.lower.emplace_back(l.eval(p));
    return r;
}

SeriesSpec SeriesSpec::substitute(const std::array<LinearForm, 3>& images) const
{
    SeriesSpec r;
    r.z = z;
    for (const auto& u : upper) r.upper.push_back(u.substitute(images));
    for (const auto& l : lower) r.lower.push_back(l.substitute(images));
    return r;
}

LinearForm SeriesSpec::margin() const
{
    LinearForm s;
    for (const auto& l : lower) s += l;
    for (const auto& u : upper) s -= u;
    return s;
}

std::string SeriesSpec::to_string() const
{
    std::ostringstream os;
    os << upper.size() << 'F' << lower.size() << '(';
    for (std::size_t i = 0; i < upper.size(); ++i) os << (i ? ", " : "") << upper[i].to_string();
    os << "; ";
    for (std::size_t i = 0; i < lower.size(); ++i) os << (i ? ", " : "") << lower[i].to_string();
    os << "; " << z << ')';
    return os.str();
}

RatFunc pochhammer(const LinearForm& x, long k)
{
    if (k < 0) throw DomainError("pochhammer with negative index");
    MultiPoly p(1);
    MultiPoly base = x.to_poly();
    for (long j = 0; j < k; ++j) p = p * (base + MultiPoly(BigRational(j)));
    return RatFunc(p);
}

RatFunc pochhammer_signed(const LinearForm& x, long k)
{
    if (k >= 0) return pochhammer(x, k);
    RatFunc r(1);
    for (long j = 1; j <= -k; ++j) r /= RatFunc(x - LinearForm(j));
    return r;
}

BigRational factorial(long n)
{
    if (n < 0) throw DomainError("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return BigRational(f);
}

RatFunc series_term(const SeriesSpec& spec, long k)
{
    RatFunc t(spec.z.pow(k) / factorial(k));
    for (const auto& u : spec.upper) t *= pochhammer(u, k);
    for (const auto& l : spec.lower) {
        for (long j = 0; j < k; ++j) {
            LinearForm f = l + LinearForm(j);
            if (f.is_constant() && f.constant().is_zero())
                throw IllDefined("lower parameter " + l.to_string() + " vanishes at term " + std::to_string(k));
            t /= RatFunc(f);
        }
    }
    return t;
}

RatFunc sum_terminating(const SeriesSpec& spec)
{
    auto K = spec.termination_index();
    if (!K) throw NonTerminating("no upper parameter is a non-positive integer: " + spec.to_string());
    for (const auto& l : spec.lower) {
        if (!l.is_constant() || !is_nonpositive_integer(l.constant())) continue;
        BigRational m = -l.constant();
        if (m < BigRational(*K))
            throw IllDefined("lower parameter " + l.to_string() + " is hit before termination at K=" +
                             std::to_string(*K));
    }
    // t_{k+1} = t_k * prod(u+k) / prod(l+k) * z / (k+1)
    RatFunc sum(0);
    RatFunc term(1);
    for (long k = 0; k <= *K; ++k) {
        if (k > 0) {
            RatFunc ratio(spec.z / BigRational(k));
            for (const auto& u : spec.upper) ratio *= RatFunc(u + LinearForm(k - 1));
            for (const auto& l : spec.lower) ratio /= RatFunc(l + LinearForm(k - 1));
            term *= ratio;
        }
        sum += term;
    }
    return sum;
}

}  // namespace hypeval
