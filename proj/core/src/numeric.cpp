#include "freeshift/numeric.hpp"

#include <cmath>

#include "freeshift/error.hpp"

namespace freeshift {

double log_big(const BigInt& n) {
  if (n <= 0) throw DomainError("log of a non-positive integer");
  const unsigned bits = boost::multiprecision::msb(n);
  if (bits < 960) return std::log(n.convert_to<double>());
  const unsigned shift = bits - 64;
  const BigInt top = n / (BigInt(1) << shift);
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt integer_root(const BigInt& n, unsigned k) {
  if (k == 0) throw InputError("integer_root needs k >= 1");
  if (n < 0) throw DomainError("integer_root of a negative integer");
  if (n < 2 || k == 1) return n;
  BigInt lo = 1;
  BigInt hi = BigInt(1) << (boost::multiprecision::msb(n) / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, k) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace freeshift
