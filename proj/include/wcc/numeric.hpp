#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace wcc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt power(std::uint64_t base, std::uint64_t exponent);

// "num/den" in lowest terms; integers render as "k/1".
std::string to_fraction_string(const Rational& r);
double approximate(const Rational& r);

}  // namespace wcc
