#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hypeval/errors.hpp"
#include "hypeval/numeric.hpp"

namespace hypeval {

// Running sum with Neumaier compensation, plus the bookkeeping needed for
// a rounding-error estimate. `growth` is the relative error added to each
// successive term by the recurrence that generates it.
template <class Real>
class Accumulator {
public:
    explicit Accumulator(Real growth = Real(4)) : growth_(growth) {}

    void add(const Real& t)
    {
        using std::abs;
        Real s = sum_ + t;
        if (abs(sum_) >= abs(t))
            comp_ += (sum_ - s) + t;
        else
            comp_ += (t - s) + sum_;
        sum_ = s;
        ++count_;
        abs_sum_ += abs(t);
        weighted_ += abs(t) * Real(count_);
    }

    Real value() const { return sum_ + comp_; }
    std::size_t count() const { return count_; }
    Real abs_sum() const { return abs_sum_; }
    Real rounding_error() const { return epsilon<Real>() * (2 * abs_sum_ + growth_ * weighted_); }

private:
    Real sum_ = 0;
    Real comp_ = 0;
    Real abs_sum_ = 0;
    Real weighted_ = 0;
    Real growth_;
    std::size_t count_ = 0;
};

// Sum until the observed term ratio is below 0.9 and the geometric tail
// bound falls under tol * |sum|.
template <class Real, class Next>
NumericValue<Real> sum_geometric(Next&& next, std::size_t max_terms, Real tol, Real growth)
{
    using std::abs;
    Accumulator<Real> acc(growth);
    Real prev = 0;
    bool have_prev = false;
    for (std::size_t k = 0; k < max_terms; ++k) {
        Real t = next();
        acc.add(t);
        if (t == 0 && have_prev && prev == 0) return {acc.value(), acc.rounding_error()};
        if (have_prev && prev != 0) {
            Real rho = abs(t / prev);
            if (rho < Real(0.9)) {
                Real tail = abs(t) * rho / (1 - rho);
                Real s = abs(acc.value());
                if (tail <= tol * s || (s == 0 && tail == 0)) return {acc.value(), tail + acc.rounding_error()};
            }
        }
        prev = t;
        have_prev = true;
    }
    throw NoConvergence("geometric tail bound not reached within " + std::to_string(max_terms) + " terms");
}

// Alternating tail: once terms alternate in sign with decreasing magnitude
// (checked from index `start` on), `levels` rounds of pairwise averaging of
// consecutive partial sums are applied.
template <class Real, class Next>
NumericValue<Real> sum_alternating(Next&& next, std::size_t start, std::size_t levels, std::size_t max_terms,
                                   Real growth)
{
    using std::abs;
    Accumulator<Real> acc(growth);
    std::vector<Real> terms;
    std::vector<Real> partial;
    auto settled = [&](std::size_t j) {
        if (j < 4) return false;
        for (std::size_t i = j - 3; i <= j; ++i) {
            if (!(terms[i] * terms[i - 1] < 0)) return false;
            if (!(abs(terms[i]) < abs(terms[i - 1]))) return false;
        }
        return true;
    };
    std::size_t n = start;
    bool found = false;
    while (terms.size() < max_terms) {
        Real t = next();
        terms.push_back(t);
        acc.add(t);
        partial.push_back(acc.value());
        std::size_t j = terms.size() - 1;
        if (!found) {
            if (j >= n && settled(j)) {
                found = true;
                n = j;
            }
            continue;
        }
        if (j >= n + levels + 1) break;
    }
    if (!found || terms.size() < n + levels + 2)
        throw NoConvergence("alternating series did not settle within " + std::to_string(max_terms) + " terms");
    std::vector<Real> row(partial.begin() + static_cast<std::ptrdiff_t>(n),
                          partial.begin() + static_cast<std::ptrdiff_t>(n + levels + 2));
    for (std::size_t level = 0; level < levels; ++level)
        for (std::size_t i = 0; i + 1 < row.size() - level; ++i) row[i] = (row[i] + row[i + 1]) / 2;
    Real v0 = row[0];
    Real v1 = row[1];
    return {(v0 + v1) / 2, abs(v0 - v1) + acc.rounding_error()};
}

// Terms decaying like k^(-1-s): Richardson extrapolation of the partial sums
// at n0 * 2^j, j = 0..levels, eliminating N^-s, N^-(s+1), ...
template <class Real, class Next>
NumericValue<Real> sum_algebraic(Next&& next, const Real& s, std::size_t n0, std::size_t levels,
                                 std::size_t max_terms, Real growth)
{
    using std::abs;
    using std::pow;
    if (!(s > 0)) throw NoConvergence("non-positive convergence margin");
    std::size_t last = n0 << levels;
    if (last > max_terms) throw NoConvergence("extrapolation needs " + std::to_string(last) + " terms");
    Accumulator<Real> acc(growth);
    std::vector<Real> table;
    std::size_t target = n0;
    while (acc.count() < last) {
        acc.add(next());
        if (acc.count() == target) {
            table.push_back(acc.value());
            target *= 2;
        }
    }
    Real amplification = 1;
    Real prev_best = table.size() > 1 ? table[1] : table[0];
    for (std::size_t i = 0; i < levels; ++i) {
        Real f = pow(Real(2), s + Real(i));
        amplification *= (f + 1) / (f - 1);
        if (i + 1 == levels) prev_best = table[1];
        for (std::size_t j = 0; j + 1 < table.size() - i; ++j) table[j] = (f * table[j + 1] - table[j]) / (f - 1);
    }
    Real value = table[0];
    return {value, abs(value - prev_best) + amplification * acc.rounding_error()};
}

}  // namespace hypeval
