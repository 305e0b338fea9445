#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace freeshift {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Natural log of a positive big integer without overflowing double.
double log_big(const BigInt& n);

double to_double(const Rational& q);

// Largest r with r^k <= n, for n >= 0 and k >= 1.
BigInt integer_root(const BigInt& n, unsigned k);

}  // namespace freeshift
