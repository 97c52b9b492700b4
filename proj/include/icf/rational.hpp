#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace icf
{
    using BigInt = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    auto binomial(std::uint64_t n, std::uint64_t r) -> BigInt;

    auto ceil_div(const BigInt & num, const BigInt & den) -> BigInt;

    /// "num/den" in lowest terms; integers still carry "/1".
    auto to_fraction_string(const Rational & r) -> std::string;

    /// Inverse of to_fraction_string. Throws InvalidArgument on malformed input.
    auto parse_fraction(const std::string & text) -> Rational;

    auto to_double(const Rational & r) -> double;
    auto to_long_double(const BigInt & i) -> long double;
}
