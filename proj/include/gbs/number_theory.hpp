#pragma once

#include <gbs/integer.hpp>
#include <gbs/prime_set.hpp>

#include <utility>
#include <vector>

namespace gbs {

// A pair (r, s) with r > 0, s > 0 and n^r = 1 (mod s) for its group base n.
struct OmegaPair {
  Int r;
  Int s;
  friend bool operator==(const OmegaPair& a, const OmegaPair& b) {
    return a.r == b.r && a.s == b.s;
  }
};

bool is_prime(const Int& x);
Int next_prime_above(const Int& x);

// Prime factorization of x >= 1, sorted by prime; 1 factorizes to the empty
// list.  Trial division for small factors, Brent's rho beyond.
std::vector<std::pair<Int, int>> factorize(const Int& x);

// True iff every prime divisor of |x| lies in the set; x must be nonzero.
bool is_p_number(const Int& x, const PrimeSet& p_set);

// Least r > 0 with n^r = 1 (mod s); requires gcd(n, s) = 1.
Int multiplicative_order(const Int& n, const Int& s);

// n^r = 1 (mod s) with r, s > 0.
bool in_omega(const Int& n, const Int& r, const Int& s);

// Membership of s in Xi(n, P).  A pair (r, s) with r, s both P-numbers and
// n^r = 1 (mod s) exists iff s is a P-number, gcd(n, s) = 1, and the
// multiplicative order of n mod s is a P-number: every admissible r is a
// multiple of the order, and P-numbers are closed under multiplication and
// divisors, so a P-number r exists exactly when the order itself is one.
bool in_xi(const Int& n, const Int& s, const PrimeSet& p_set);

// All (multiplicative_order(n,s), s) with s <= s_max and s in Xi(n, P),
// ascending in s.
std::vector<OmegaPair> enumerate_omega(const Int& n, const PrimeSet& p_set,
                                       const Int& s_max);

// Validating constructor for OmegaPair.
OmegaPair make_omega_pair(const Int& n, const Int& r, const Int& s);

}  // namespace gbs
