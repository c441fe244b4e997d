#include "hypeval/numeric.hpp"

#include <charconv>

#include "hypeval/errors.hpp"

namespace hypeval {

Precision precision_for_bits(int bits)
{
    if (bits <= 0) throw DomainError("precision must be positive");
    if (bits <= 53) return Precision::binary53;
    if (bits <= 64) return Precision::binary64;
    if (bits <= 113) return Precision::binary113;
    throw DomainError("precision above 113 bits is not supported");
}

namespace {

template <class T>
std::string shortest(const T& x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace

template <>
std::string format_real<double>(const double& x)
{
    return shortest(x);
}

template <>
std::string format_real<long double>(const long double& x)
{
    return shortest(x);
}

}  // namespace hypeval
