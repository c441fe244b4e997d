#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypeval/gamma.hpp"
#include "hypeval/numeric.hpp"
#include "hypeval/ratfunc.hpp"
#include "hypeval/series.hpp"

namespace hypeval {

// Six parameters with y0+y1+y2 = y3+y4+y5 = 1-m.
class OrbitLabel {
public:
    // Throws DomainError when the sums do not match or m < 0.
    OrbitLabel(std::array<LinearForm, 6> y, long m);

    const std::array<LinearForm, 6>& y() const noexcept { return y_; }
    long m() const noexcept { return m_; }

    // (y0+y4)_m (y0+y5)_m 3F2(-m, y0+y1-y3, y0+y2-y3; y0+y4, y0+y5; 1)
    SeriesSpec spec() const;
    RatFunc normalizer() const;

    std::string to_string() const;

private:
    std::array<LinearForm, 6> y_;
    long m_;
};

// prefactor * series
struct TransformedSeries {
    GammaProduct prefactor;
    SeriesSpec spec;

    std::string to_string() const;
};

// One representative per coset: y0 taken from the first triple, y3 from
// the second, then the same with the triples swapped (sign (-1)^m). The
// remaining entries keep their original relative order. Each entry's
// prefactor * series equals the expression of the input label.
// Throws SingularOrbit when a constant lower parameter of any entry is a
// non-positive integer > -m.
std::vector<TransformedSeries> orbit_terminating(const OrbitLabel& label);
// The labels behind orbit_terminating, in the same order, with signs.
std::vector<std::pair<OrbitLabel, int>> orbit_labels(const OrbitLabel& label);

// 3F2(-m, A, B; E, F; 1) = (E-A)_m/(E)_m 3F2(-m, A, F-B; 1+A-E-m, F; 1).
// Throws InvalidShape.
TransformedSeries transform_terminating(const SeriesSpec& spec, long m);

// 3F2(A, B, C; E, F; 1) = G(F) G(s) / (G(F-C) G(E+F-A-B))
//                         * 3F2(E-A, E-B, C; E, E+F-A-B; 1),  s = E+F-A-B-C.
// s must be positive; the right side must terminate or have F-C > 0.
// Margins depending on a, b, c are checked at `point`, which is then
// required. Throws InvalidShape, NoConvergence, DomainError.
TransformedSeries thomae_transform(const SeriesSpec& spec, const std::optional<Point>& point = std::nullopt);

enum class TwoTermKind { pfaff_a, pfaff_b, bateman_292 };

std::string_view two_term_name(TwoTermKind k);
// "PFAFF_A", "pfaff_b", "BATEMAN_292". Throws ParseError.
TwoTermKind parse_two_term(std::string_view name);

// 2F1(A, B; C; z) as
//   pfaff_a:     (1-z)^-A     2F1(A, C-B; C; z/(z-1))
//   pfaff_b:     (1-z)^-B     2F1(C-A, B; C; z/(z-1))
//   bateman_292: (1-z)^(C-A-B) 2F1(C-A, C-B; C; z)
// Throws InvalidShape unless spec is a 2F1 with z < 1.
TransformedSeries two_term_2f1(TwoTermKind kind, const SeriesSpec& spec);

// prefactor * series when the prefactor is a pure RatFunc and the series
// terminates. Throws InvalidShape otherwise.
RatFunc exact_value(const TransformedSeries& t);

// Numeric value at a point; a 2F1 at z = -1 goes through eval_2f1_neg1.
template <class Real>
NumericValue<Real> evaluate(const TransformedSeries& t, const Point& p = {});
// Same for a bare series.
template <class Real>
NumericValue<Real> evaluate(const SeriesSpec& spec, const Point& p = {});

}  // namespace hypeval
