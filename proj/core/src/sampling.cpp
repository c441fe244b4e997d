#include "hypeval/sampling.hpp"

#include <algorithm>

#include "hypeval/errors.hpp"

namespace hypeval {

namespace {

const std::vector<long> odd_denominators{3, 5, 7, 9, 11, 13};
const std::vector<long> small_denominators{2, 3, 4, 5, 7};

bool all_away(std::initializer_list<BigRational> xs)
{
    for (const auto& x : xs)
        if (!away_from_integers(x)) return false;
    return true;
}

// Positive, or at least 1/8 from every integer.
bool safe_lower(const BigRational& x)
{
    return x > BigRational(1, 8) || away_from_integers(x);
}

}  // namespace

bool away_from_integers(const BigRational& x, const BigRational& d)
{
    return distance_to_integer(x) >= d;
}

long Sampler::integer(long lo, long hi)
{
    if (hi < lo) throw DomainError("empty sampling range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
}

BigRational Sampler::rational(const BigRational& lo, const BigRational& hi, const std::vector<long>& denominators)
{
    long q = denominators[static_cast<std::size_t>(integer(0, static_cast<long>(denominators.size()) - 1))];
    BigRational bq(q);
    long plo = (lo * bq).ceil().get_si();
    long phi = (hi * bq).floor().get_si();
    return BigRational(integer(plo, phi), q);
}

Point Sampler::genkum_point()
{
    const BigRational h(1, 2);
    for (;;) {
        BigRational a = rational(BigRational(-10), BigRational(10), odd_denominators);
        BigRational b = rational(BigRational(-10), BigRational(10), odd_denominators);
        if (all_away({a, b, a - b, a * h, (a + BigRational(1)) * h, a * h - b, (a + BigRational(1)) * h - b}))
            return Point(a, b);
    }
}

Point Sampler::whipple_point()
{
    for (;;) {
        Point p = genkum_point();
        if (p[Symbol::a] / BigRational(2) - p[Symbol::b] >= BigRational(1, 4)) return p;
    }
}

BigRational Sampler::whipple_nu()
{
    for (;;) {
        BigRational nu = rational(BigRational(-2), BigRational(3), odd_denominators);
        if (away_from_integers(nu)) return nu;
    }
}

Point Sampler::gosper_point()
{
    for (;;) {
        BigRational a = rational(BigRational(1, 4), BigRational(6), {5, 7, 11, 13});
        if (all_away({a, a * BigRational(2)})) return Point(a, BigRational(0));
    }
}

Point Sampler::dixon_point()
{
    const BigRational h(1, 2);
    for (;;) {
        BigRational b = rational(BigRational(-1), BigRational(1), odd_denominators);
        BigRational c = rational(BigRational(-1), BigRational(1), odd_denominators);
        BigRational base = BigRational(2) * (b + c) + BigRational(5, 4);
        BigRational a = rational(base, base + BigRational(5), odd_denominators);
        BigRational ha = a * h;
        BigRational ha1 = (a + BigRational(1)) * h;
        if (all_away({a, b, c, a - b, a - c, a - b - c, ha, ha1, ha - b, ha - c, ha1 - b, ha1 - c, ha - b - c,
                      ha1 - b - c}))
            return Point(a, b, c);
    }
}

OrbitLabel Sampler::orbit_label(long m, bool symbolic)
{
    BigRational target(1 - m);
    for (;;) {
        std::array<LinearForm, 6> y;
        BigRational y0 = rational(BigRational(-3), BigRational(3), small_denominators);
        BigRational y1 = rational(BigRational(-3), BigRational(3), small_denominators);
        BigRational y3 = rational(BigRational(-3), BigRational(3), small_denominators);
        BigRational y4 = rational(BigRational(-3), BigRational(3), small_denominators);
        y[0] = LinearForm(y0);
        y[1] = LinearForm(y1);
        y[2] = LinearForm(target - y0 - y1);
        y[3] = LinearForm(y3);
        y[4] = LinearForm(y4);
        y[5] = LinearForm(target - y3 - y4);
        if (symbolic) {
            y[1] += sym_a;
            y[2] -= sym_a;
            y[4] += sym_b;
            y[5] -= sym_b;
        }
        OrbitLabel label(y, m);
        try {
            orbit_terminating(label);
            return label;
        } catch (const SingularOrbit&) {
        }
    }
}

SeriesSpec Sampler::terminating_3f2(long m)
{
    const std::vector<BigRational> coeffs{BigRational(-1), BigRational(-1, 2), BigRational(1, 2), BigRational(1)};
    auto pick = [&] { return coeffs[static_cast<std::size_t>(integer(0, 3))]; };
    auto r = [&] { return rational(BigRational(-3), BigRational(3), small_denominators); };
    LinearForm A = LinearForm(r()) + sym_a * pick();
    LinearForm B = LinearForm(r()) + sym_b * pick();
    LinearForm E = LinearForm(r()) + sym_a * pick() + sym_b * pick();
    LinearForm F = LinearForm(r()) + sym_b * pick();
    return SeriesSpec{{LinearForm(BigRational(-m)), A, B}, {E, F}, BigRational(1)};
}

SeriesSpec Sampler::thomae_instance()
{
    const BigRational h(1, 2);
    for (;;) {
        BigRational A = rational(BigRational(-1), BigRational(2), small_denominators);
        BigRational B = rational(BigRational(-1), BigRational(2), small_denominators);
        BigRational C = rational(BigRational(-1), BigRational(2), small_denominators);
        BigRational E = rational(BigRational(1, 4), BigRational(3), small_denominators);
        BigRational lo = std::max(A + B + C - E, C) + h;
        BigRational F = rational(lo, lo + BigRational(3), small_denominators);
        if (A.is_integer() || B.is_integer() || C.is_integer()) continue;
        if ((E - A).is_integer() || (E - B).is_integer()) continue;
        if (!safe_lower(E) || !safe_lower(F) || !safe_lower(E + F - A - B)) continue;
        return SeriesSpec{{LinearForm(A), LinearForm(B), LinearForm(C)}, {LinearForm(E), LinearForm(F)},
                          BigRational(1)};
    }
}

std::array<BigRational, 3> Sampler::overlap_2f1()
{
    const std::vector<long> dens{2, 3, 4, 5, 7, 9};
    for (;;) {
        BigRational A = rational(BigRational(-3), BigRational(3), dens);
        BigRational B = rational(BigRational(-3), BigRational(3), dens);
        BigRational s = rational(BigRational(1, 4), BigRational(3), dens);
        BigRational C = A + B + s;
        if (safe_lower(C)) return {A, B, C};
    }
}

}  // namespace hypeval
