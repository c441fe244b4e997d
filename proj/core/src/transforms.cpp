#include "hypeval/transforms.hpp"

#include <cctype>

#include "hypeval/errors.hpp"
#include "hypeval/hypergeometric.hpp"

namespace hypeval {

namespace {

bool is_3f2_at_one(const SeriesSpec& s)
{
    return s.upper.size() == 3 && s.lower.size() == 2 && s.z == BigRational(1);
}

// Sign of a margin, at `point` when it is not constant.
int margin_sign(const LinearForm& m, const std::optional<Point>& point)
{
    if (m.is_constant()) return m.constant().sign();
    if (!point) throw DomainError("margin " + m.to_string() + " depends on the parameters; a point is needed");
    return m.eval(*point).sign();
}

}  // namespace

OrbitLabel::OrbitLabel(std::array<LinearForm, 6> y, long m) : y_(std::move(y)), m_(m)
{
    if (m_ < 0) throw DomainError("orbit label needs m >= 0");
    LinearForm target(BigRational(1 - m_));
    if (y_[0] + y_[1] + y_[2] != target || y_[3] + y_[4] + y_[5] != target)
        throw DomainError("orbit label sums must both equal 1-m: " + to_string());
}

SeriesSpec OrbitLabel::spec() const
{
    const auto& y = y_;
    return SeriesSpec{{LinearForm(BigRational(-m_)), y[0] + y[1] - y[3], y[0] + y[2] - y[3]},
                      {y[0] + y[4], y[0] + y[5]},
                      BigRational(1)};
}

RatFunc OrbitLabel::normalizer() const
{
    return pochhammer(y_[0] + y_[4], m_) * pochhammer(y_[0] + y_[5], m_);
}

std::string OrbitLabel::to_string() const
{
    std::string s = "y=(";
    for (std::size_t i = 0; i < 6; ++i) {
        if (i) s += ", ";
        s += y_[i].to_string();
    }
    return s + "), m=" + std::to_string(m_);
}

std::string TransformedSeries::to_string() const
{
    return prefactor.to_string() + " * " + spec.to_string();
}

std::vector<std::pair<OrbitLabel, int>> orbit_labels(const OrbitLabel& label)
{
    const auto& y = label.y();
    int swap_sign = label.m() % 2 == 0 ? 1 : -1;
    std::vector<std::pair<OrbitLabel, int>> out;
    out.reserve(18);
    for (int swap = 0; swap < 2; ++swap) {
        std::array<LinearForm, 3> first{y[0], y[1], y[2]};
        std::array<LinearForm, 3> second{y[3], y[4], y[5]};
        if (swap) std::swap(first, second);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                std::array<LinearForm, 6> z;
                z[0] = first[i];
                z[3] = second[j];
                std::size_t p = 1, q = 4;
                for (std::size_t k = 0; k < 3; ++k) {
                    if (k != i) z[p++] = first[k];
                    if (k != j) z[q++] = second[k];
                }
                out.emplace_back(OrbitLabel(z, label.m()), swap ? swap_sign : 1);
            }
        }
    }
    return out;
}

std::vector<TransformedSeries> orbit_terminating(const OrbitLabel& label)
{
    auto labels = orbit_labels(label);
    long m = label.m();
    for (const auto& [l, sign] : labels) {
        for (const auto& low : l.spec().lower) {
            if (!low.is_constant()) continue;
            const BigRational& v = low.constant();
            if (is_nonpositive_integer(v) && v > BigRational(-m))
                throw SingularOrbit("lower parameter " + v.to_string() + " in orbit of " + label.to_string());
        }
    }
    std::vector<TransformedSeries> out;
    out.reserve(labels.size());
    for (const auto& [l, sign] : labels)
        out.push_back(TransformedSeries{GammaProduct(l.normalizer() * RatFunc(BigRational(sign))), l.spec()});
    return out;
}

TransformedSeries transform_terminating(const SeriesSpec& spec, long m)
{
    if (!is_3f2_at_one(spec)) throw InvalidShape("expected a 3F2 at z=1, got " + spec.to_string());
    if (m < 0) throw InvalidShape("transform_terminating needs m >= 0");
    LinearForm minus_m(BigRational(-m));
    std::size_t at = 3;
    for (std::size_t i = 0; i < 3; ++i)
        if (spec.upper[i] == minus_m) {
            at = i;
            break;
        }
    if (at == 3) throw InvalidShape("no upper parameter equals " + minus_m.to_string() + " in " + spec.to_string());
    std::vector<LinearForm> rest;
    for (std::size_t i = 0; i < 3; ++i)
        if (i != at) rest.push_back(spec.upper[i]);
    const LinearForm& A = rest[0];
    const LinearForm& B = rest[1];
    const LinearForm& E = spec.lower[0];
    const LinearForm& F = spec.lower[1];
    RatFunc den = pochhammer(E, m);
    if (den.is_zero()) throw InvalidShape("(E)_m vanishes for E = " + E.to_string());
    return TransformedSeries{GammaProduct(pochhammer(E - A, m) / den),
                             SeriesSpec{{minus_m, A, F - B}, {LinearForm(1) + A - E + minus_m, F}, BigRational(1)}};
}

TransformedSeries thomae_transform(const SeriesSpec& spec, const std::optional<Point>& point)
{
    if (!is_3f2_at_one(spec)) throw InvalidShape("expected a 3F2 at z=1, got " + spec.to_string());
    const LinearForm& A = spec.upper[0];
    const LinearForm& B = spec.upper[1];
    const LinearForm& C = spec.upper[2];
    const LinearForm& E = spec.lower[0];
    const LinearForm& F = spec.lower[1];
    LinearForm s = E + F - A - B - C;
    if (margin_sign(s, point) <= 0)
        throw NoConvergence("Thomae transform needs a positive margin, got " + s.to_string());
    SeriesSpec out{{E - A, E - B, C}, {E, E + F - A - B}, BigRational(1)};
    bool terminates = point ? out.at(*point).termination_index().has_value() : out.termination_index().has_value();
    if (!terminates && margin_sign(F - C, point) <= 0)
        throw NoConvergence("transformed series diverges, margin " + (F - C).to_string());
    GammaProduct g;
    g.gamma(F).gamma(s).gamma(F - C, -1).gamma(E + F - A - B, -1);
    return TransformedSeries{std::move(g), std::move(out)};
}

std::string_view two_term_name(TwoTermKind k)
{
    switch (k) {
    case TwoTermKind::pfaff_a: return "PFAFF_A";
    case TwoTermKind::pfaff_b: return "PFAFF_B";
    case TwoTermKind::bateman_292: return "BATEMAN_292";
    }
    return "?";
}

TwoTermKind parse_two_term(std::string_view name)
{
    std::string upper;
    for (char ch : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    for (TwoTermKind k : {TwoTermKind::pfaff_a, TwoTermKind::pfaff_b, TwoTermKind::bateman_292})
        if (two_term_name(k) == upper) return k;
    throw ParseError("unknown transform '" + std::string(name) + "'");
}

TransformedSeries two_term_2f1(TwoTermKind kind, const SeriesSpec& spec)
{
    if (spec.upper.size() != 2 || spec.lower.size() != 1)
        throw InvalidShape("expected a 2F1, got " + spec.to_string());
    if (spec.z >= BigRational(1)) throw InvalidShape("2F1 transforms need z < 1, got z = " + spec.z.to_string());
    const LinearForm& A = spec.upper[0];
    const LinearForm& B = spec.upper[1];
    const LinearForm& C = spec.lower[0];
    BigRational base = BigRational(1) - spec.z;
    BigRational w = spec.z / (spec.z - BigRational(1));
    GammaProduct g;
    switch (kind) {
    case TwoTermKind::pfaff_a:
        g.power(base, -A);
        return {std::move(g), SeriesSpec{{A, C - B}, {C}, w}};
    case TwoTermKind::pfaff_b:
        g.power(base, -B);
        return {std::move(g), SeriesSpec{{C - A, B}, {C}, w}};
    case TwoTermKind::bateman_292:
        g.power(base, C - A - B);
        return {std::move(g), SeriesSpec{{C - A, C - B}, {C}, spec.z}};
    }
    throw InvalidShape("unknown transform");
}

RatFunc exact_value(const TransformedSeries& t)
{
    if (t.prefactor.has_gamma_or_power())
        throw InvalidShape("prefactor " + t.prefactor.to_string() + " is not rational");
    return t.prefactor.prefactor() * sum_terminating(t.spec);
}

template <class Real>
NumericValue<Real> evaluate(const SeriesSpec& spec, const Point& p)
{
    if (spec.upper.size() == 2 && spec.lower.size() == 1 && spec.z == BigRational(-1)) {
        SeriesSpec s = spec.at(p);
        if (!s.termination_index())
            return eval_2f1_neg1<Real>(s.upper[0].constant(), s.upper[1].constant(), s.lower[0].constant());
    }
    return eval_series_numeric<Real>(spec, p);
}

template <class Real>
NumericValue<Real> evaluate(const TransformedSeries& t, const Point& p)
{
    using std::abs;
    NumericValue<Real> g = eval_gamma_product<Real>(t.prefactor, p);
    if (g.value == 0) return g;
    NumericValue<Real> s = evaluate<Real>(t.spec, p);
    return {g.value * s.value, abs(g.value) * s.error_estimate + abs(s.value) * g.error_estimate};
}

#define HYPEVAL_INSTANTIATE_TRANSFORMS(Real)                                                       \
    template NumericValue<Real> evaluate<Real>(const SeriesSpec&, const Point&);        \
    template NumericValue<Real> evaluate<Real>(const TransformedSeries&, const Point&);

HYPEVAL_INSTANTIATE_TRANSFORMS(double)
HYPEVAL_INSTANTIATE_TRANSFORMS(long double)
HYPEVAL_INSTANTIATE_TRANSFORMS(Quad)

}  // namespace hypeval
