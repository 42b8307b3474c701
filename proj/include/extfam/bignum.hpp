#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace extfam {

// Exact integer counts (family sizes, binomial sums) and exact rationals
// (duality weights). No floating point is used anywhere in counting or
// certificate logic.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Subset-counting binomial coefficient: C(a, b) = 0 whenever b < 0, a < 0,
// or b > a, and C(0, 0) = 1.
BigCount binomial(long long a, long long b);

BigCount pow2(long long k);

std::string to_decimal(const BigCount& v);

// Lowest terms; "p/q", or just "p" when the denominator is 1.
std::string to_fraction(const Rational& r);

}  // namespace extfam
