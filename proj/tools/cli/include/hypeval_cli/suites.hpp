#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypeval/numeric.hpp"
#include "hypeval/rational.hpp"
#include "hypeval_cli/report.hpp"

namespace hypeval::cli {

struct VerifyOptions {
    std::optional<std::pair<long, long>> n_range;
    std::optional<int> points;
    std::uint64_t seed = 1;
    std::optional<double> tol;
    std::optional<std::string> kind;
    std::optional<BigRational> param;
    Precision precision = Precision::binary53;
    unsigned threads = 0;
};

inline constexpr std::string_view suite_names[] = {"genkum", "kummer",     "gosper",      "dixon", "certificates",
                                                   "orbit",  "special",    "recurrences", "all"};

// Throws ParseError for an unknown suite and DomainError for option values
// the suite cannot honor (empty range, nonpositive point count, ...).
std::vector<CheckRecord> run_suite(std::string_view suite, const VerifyOptions& opt);

// "lo..hi" with optional signs. Throws ParseError.
std::pair<long, long> parse_range(std::string_view text);

}  // namespace hypeval::cli
