#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hypeval/poly.hpp"
#include "hypeval/rational.hpp"
#include "hypeval/series.hpp"
#include "hypeval/transforms.hpp"

namespace hypeval {

// Reproducible across platforms: only raw mt19937_64 output is used, never
// the standard distributions.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    // Uniform in [lo, hi].
    long integer(long lo, long hi);
    // p/q with q drawn from `denominators` and lo <= p/q <= hi.
    BigRational rational(const BigRational& lo, const BigRational& hi, const std::vector<long>& denominators);

    // a, b = p/q with q odd in 3..13, |a|, |b| <= 10, and a, b, a-b, a/2,
    // (a+1)/2, a/2-b, (a+1)/2-b all at least 1/8 from every integer.
    Point genkum_point();
    // Same, additionally a/2 - b >= 1/4 (both 3F2 series of the
    // non-integer-nu expansions converge).
    Point whipple_point();
    // Non-integer nu in (-2, 3), at least 1/8 from every integer.
    BigRational whipple_nu();
    // a in (1/4, 6) with denominator 5, 7, 11 or 13.
    Point gosper_point();
    // b, c in (-1, 1), a with a-2b-2c >= 5/4 (margin >= 1/4 for n <= 1),
    // all Gamma arguments and lower parameters at least 1/8 from integers.
    Point dixon_point();

    // Label with y1, y2 carrying +a, -a and y4, y5 carrying +b, -b when
    // `symbolic`; resampled until the orbit is nonsingular.
    OrbitLabel orbit_label(long m, bool symbolic = true);
    // 3F2(-m, A, B; E, F; 1) with A, B, E, F affine in a, b.
    SeriesSpec terminating_3f2(long m);
    // Constant 3F2(A, B, C; E, F; 1) with margin >= 1/2 and F - C >= 1/2.
    SeriesSpec thomae_instance();
    // (A, B, C) with 1/4 <= C-A-B <= 3, C away from the non-positive integers.
    std::array<BigRational, 3> overlap_2f1();

private:
    std::mt19937_64 rng_;
};

// At least `d` from every integer.
bool away_from_integers(const BigRational& x, const BigRational& d = BigRational(1, 8));

}  // namespace hypeval
