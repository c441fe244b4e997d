#include "hypeval/hypergeometric.hpp"

#include <algorithm>

#include "hypeval/errors.hpp"
#include "hypeval/summation.hpp"

namespace hypeval {

template <>
std::size_t AccelerationLevels<double>::alternating() { return 30; }
template <>
std::size_t AccelerationLevels<double>::extrapolation() { return 8; }
template <>
std::size_t AccelerationLevels<long double>::alternating() { return 36; }
template <>
std::size_t AccelerationLevels<long double>::extrapolation() { return 10; }
template <>
std::size_t AccelerationLevels<Quad>::alternating() { return 66; }
template <>
std::size_t AccelerationLevels<Quad>::extrapolation() { return 12; }

namespace {

template <class Real>
std::size_t scaled_start(const Real& scale, std::size_t factor, std::size_t floor)
{
    using std::ceil;
    Real s = ceil(scale);
    if (s > Real(1e6)) throw NoConvergence("parameters too large for the series engine");
    return std::max(floor, static_cast<std::size_t>(to_double(s)) * factor + 16);
}

// Parameters of a constant spec in floating point, t_0 = 1,
// t_{k+1} = t_k prod(u+k) / prod(l+k) z / (k+1).
template <class Real>
class HyperTerms {
public:
    HyperTerms(const SeriesSpec& spec)
    {
        for (const auto& u : spec.upper) upper_.push_back(to_real<Real>(u.constant()));
        for (const auto& l : spec.lower) lower_.push_back(to_real<Real>(l.constant()));
        z_ = to_real<Real>(spec.z);
    }

    Real operator()()
    {
        if (k_ > 0) {
            Real kk = Real(k_ - 1);
            Real r = z_ / Real(k_);
            for (const auto& u : upper_) r *= u + kk;
            for (const auto& l : lower_) r /= l + kk;
            t_ *= r;
        }
        ++k_;
        return t_;
    }

    Real growth() const { return Real(upper_.size() + lower_.size() + 3); }

private:
    std::vector<Real> upper_, lower_;
    Real z_;
    Real t_ = 1;
    std::size_t k_ = 0;
};

}  // namespace

template <class Real>
NumericValue<Real> sum_alternating_series(const std::function<Real()>& next, const Real& scale, std::size_t max_terms)
{
    std::size_t levels = AccelerationLevels<Real>::alternating();
    std::size_t start = scaled_start(scale, 2, levels);
    return sum_alternating<Real>(next, start, levels, max_terms, Real(8));
}

template <class Real>
NumericValue<Real> sum_algebraic_series(const std::function<Real()>& next, const Real& margin, const Real& scale,
                                        std::size_t max_terms)
{
    std::size_t levels = AccelerationLevels<Real>::extrapolation();
    std::size_t n0 = scaled_start(scale, 4, 32);
    return sum_algebraic<Real>(next, margin, n0, levels, max_terms, Real(8));
}

template <class Real>
NumericValue<Real> eval_series_numeric(const SeriesSpec& spec, const Point& point, std::size_t max_terms, Real tol)
{
    using std::abs;
    SeriesSpec c = spec.at(point);
    if (tol <= 0) tol = 4 * epsilon<Real>();
    if (c.z.is_zero()) return {Real(1), Real(0)};
    if (c.termination_index()) {
        auto v = sum_terminating(c).constant_value();
        Real r = to_real<Real>(*v);
        return {r, abs(r) * epsilon<Real>()};
    }
    for (const auto& l : c.lower)
        if (is_nonpositive_integer(l.constant()))
            throw InvalidLowerParameter("lower parameter " + l.constant().to_string() + " in a non-terminating series");
    Real scale = 1;
    for (const auto* list : {&c.upper, &c.lower})
        for (const auto& x : *list) scale = std::max(scale, abs(to_real<Real>(x.constant())));
    HyperTerms<Real> terms(c);
    const std::size_t p = c.upper.size();
    const std::size_t q = c.lower.size();
    BigRational az = c.z.abs();
    if (p <= q || az < BigRational(1)) return sum_geometric<Real>(terms, max_terms, tol, terms.growth());
    if (p == q + 1 && az == BigRational(1)) {
        BigRational s = c.margin().constant();
        if (c.z.sign() > 0) {
            if (s.sign() <= 0) throw NoConvergence("3F2-type series at z=1 with margin " + s.to_string());
            std::size_t levels = AccelerationLevels<Real>::extrapolation();
            return sum_algebraic<Real>(terms, to_real<Real>(s), scaled_start(scale, 4, 32), levels, max_terms,
                                       terms.growth());
        }
        if (s <= BigRational(-1)) throw NoConvergence("series at z=-1 with margin " + s.to_string());
        std::size_t levels = AccelerationLevels<Real>::alternating();
        return sum_alternating<Real>(terms, scaled_start(scale, 2, levels), levels, max_terms, terms.growth());
    }
    throw NoConvergence("series " + c.to_string() + " does not converge");
}

namespace {

SeriesSpec spec_2f1(const BigRational& A, const BigRational& B, const BigRational& C, const BigRational& z)
{
    return SeriesSpec{{LinearForm(A), LinearForm(B)}, {LinearForm(C)}, z};
}

}  // namespace

template <class Real>
NumericValue<Real> eval_2f1_neg1_direct(const BigRational& A, const BigRational& B, const BigRational& C)
{
    if (is_nonpositive_integer(C)) throw InvalidLowerParameter("C = " + C.to_string());
    return eval_series_numeric<Real>(spec_2f1(A, B, C, BigRational(-1)));
}

namespace {

// 2^-A 2F1(A, C-B; C; 1/2)
template <class Real>
NumericValue<Real> pfaff_half(const BigRational& A, const BigRational& B, const BigRational& C)
{
    using std::abs;
    using std::exp;
    using std::log;
    NumericValue<Real> s = eval_series_numeric<Real>(spec_2f1(A, C - B, C, BigRational(1, 2)));
    Real a = to_real<Real>(A);
    Real f = exp(-a * log(Real(2)));
    Real value = f * s.value;
    Real err = abs(f) * s.error_estimate + abs(value) * epsilon<Real>() * (abs(a) + 2);
    return {value, err};
}

}  // namespace

// The transform can be taken on either upper parameter; the better
// conditioned of the two is returned.
template <class Real>
NumericValue<Real> eval_2f1_neg1_pfaff(const BigRational& A, const BigRational& B, const BigRational& C)
{
    if (is_nonpositive_integer(C)) throw InvalidLowerParameter("C = " + C.to_string());
    NumericValue<Real> x = pfaff_half<Real>(A, B, C);
    if (A == B) return x;
    NumericValue<Real> y = pfaff_half<Real>(B, A, C);
    return y.error_estimate < x.error_estimate ? y : x;
}

template <class Real>
NumericValue<Real> eval_2f1_neg1(const BigRational& A, const BigRational& B, const BigRational& C)
{
    if (is_nonpositive_integer(C)) throw InvalidLowerParameter("C = " + C.to_string());
    if (is_nonpositive_integer(A) || is_nonpositive_integer(B) || C - A - B > BigRational(-1, 2))
        return eval_2f1_neg1_direct<Real>(A, B, C);
    return eval_2f1_neg1_pfaff<Real>(A, B, C);
}

#define HYPEVAL_INSTANTIATE_HYPER(Real)                                                                         \
    template NumericValue<Real> eval_series_numeric<Real>(const SeriesSpec&, const Point&, std::size_t, Real);   \
    template NumericValue<Real> eval_2f1_neg1<Real>(const BigRational&, const BigRational&, const BigRational&); \
    template NumericValue<Real> eval_2f1_neg1_direct<Real>(const BigRational&, const BigRational&,              \
                                                           const BigRational&);                                 \
    template NumericValue<Real> eval_2f1_neg1_pfaff<Real>(const BigRational&, const BigRational&,               \
                                                          const BigRational&);                                  \
    template NumericValue<Real> sum_alternating_series<Real>(const std::function<Real()>&, const Real&,         \
                                                             std::size_t);                                      \
    template NumericValue<Real> sum_algebraic_series<Real>(const std::function<Real()>&, const Real&,           \
                                                           const Real&, std::size_t);

HYPEVAL_INSTANTIATE_HYPER(double)
HYPEVAL_INSTANTIATE_HYPER(long double)
HYPEVAL_INSTANTIATE_HYPER(Quad)

}  // namespace hypeval
