#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace levrecon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero when k < 0 or k > n (and for n < 0).
BigInt binomial(std::int64_t n, std::int64_t k);

/// Exact integer power base^exp for exp >= 0.
BigInt ipow(std::int64_t base, std::int64_t exp);

std::optional<std::uint64_t> to_u64(const BigInt& v);
double to_double(const BigInt& v);
std::string to_string(const BigInt& v);

}  // namespace levrecon
