#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace gbs {

// Arbitrary-precision signed integer used throughout the library.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Divisibility with the convention 0 | x iff x = 0.
inline bool divides(const Int& d, const Int& x) {
  if (d == 0) return x == 0;
  return x % d == 0;
}

// Least non-negative residue of a modulo m, m >= 1.
inline Int mod_floor(const Int& a, const Int& m) {
  if (m < 1) throw std::domain_error("mod_floor: modulus must be positive");
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// base^exp mod m for exp >= 0, m >= 1; base may be negative.
inline Int mod_pow(const Int& base, const Int& exp, const Int& m) {
  if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
  if (m < 1) throw std::domain_error("mod_pow: modulus must be positive");
  if (m == 1) return 0;
  return powm(mod_floor(base, m), exp, m);
}

// n^k for k >= 0.
inline Int int_pow(const Int& n, const Int& k) {
  if (k < 0) throw std::domain_error("int_pow: negative exponent");
  Int result = 1;
  Int b = n;
  Int e = k;
  while (e > 0) {
    if ((e & 1) != 0) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

}  // namespace gbs
