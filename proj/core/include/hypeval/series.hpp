#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypeval/linear_form.hpp"
#include "hypeval/ratfunc.hpp"

namespace hypeval {

// pFq(upper; lower; z).
struct SeriesSpec {
    std::vector<LinearForm> upper;
    std::vector<LinearForm> lower;
    BigRational z{1};

    // Smallest m with some upper parameter equal to the constant -m.
    std::optional<long> termination_index() const;
    // Every parameter evaluated at p.
    SeriesSpec at(const Point& p) const;
    SeriesSpec substitute(const std::array<LinearForm, 3>& images) const;
    // Sum of lower minus sum of upper parameters.
    LinearForm margin() const;

    std::string to_string() const;
    friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

// (x)_k = x (x+1) ... (x+k-1), k >= 0.
RatFunc pochhammer(const LinearForm& x, long k);
// Extends to negative k by (x)_{-m} = 1/(x-m)_m.
RatFunc pochhammer_signed(const LinearForm& x, long k);
BigRational factorial(long n);

// Exact sum of k = 0..K where K is the termination index. Throws
// NonTerminating when no upper parameter is a constant non-positive integer,
// IllDefined when a constant lower parameter -m has m < K.
RatFunc sum_terminating(const SeriesSpec& spec);
// The k-th summand, prod (u)_k / prod (l)_k * z^k / k!.
RatFunc series_term(const SeriesSpec& spec, long k);

}  // namespace hypeval
