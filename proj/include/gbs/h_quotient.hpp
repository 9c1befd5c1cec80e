#pragma once

#include <gbs/bs1n.hpp>
#include <gbs/integer.hpp>
#include <gbs/prime_set.hpp>
#include <gbs/words.hpp>

#include <optional>
#include <vector>

namespace gbs {

// The finite quotient H(n,r,s) = <t, a; t^-1 a t = a^n, t^r = 1, a^s = 1>,
// defined when n^r = 1 (mod s); it has order r*s.
class HGroup {
 public:
  HGroup(Int n, Int r, Int s);

  const Int& n() const { return n_; }
  const Int& r() const { return r_; }
  const Int& s() const { return s_; }
  Int order() const { return r_ * s_; }

  // n^i mod s for 0 <= i < r.
  Int pow_n(const Int& i) const;

 private:
  Int n_, r_, s_;
  std::vector<Int> cache_;  // powers of n mod s when r is small
};

// Residue pair (i mod r, j mod s) standing for t^i a^j.
struct HElement {
  Int i{0};
  Int j{0};
  friend bool operator==(const HElement& x, const HElement& y) {
    return x.i == y.i && x.j == y.j;
  }
  friend bool operator<(const HElement& x, const HElement& y) {
    return x.i != y.i ? x.i < y.i : x.j < y.j;
  }
};

HElement h_element(const HGroup& G, const Int& i, const Int& j);
HElement h_multiply(const HGroup& G, const HElement& x, const HElement& y);
HElement h_inverse(const HGroup& G, const HElement& x);
HElement h_power(const HGroup& G, const HElement& x, const Int& k);
HElement h_from_word(const HGroup& G, const GroupWord& word);

// Image of t^u a^w t^{-v} under the natural homomorphism BS(1,n) -> H(n,r,s).
HElement natural_hom(const Bs1nGroup& g, const HGroup& G, const Bs1nElement& x);

// Conjugacy via the residue criterion: equal t-parts, and j1 n^x = j2 n^y
// (mod gcd(n^u - 1, s)) solvable with x, y in [0, r).
bool h_are_conjugate_criterion(const HGroup& G, const HElement& x,
                               const HElement& y);

// Conjugacy by enumerating all r*s conjugators; requires r*s within bound.
bool h_are_conjugate_bruteforce(const HGroup& G, const HElement& x,
                                const HElement& y,
                                const Int& bound = Int(1000000));

// Smallest-s H(n,r,s) with s <= s_max separating the conjugacy classes of two
// non-conjugate elements; uses H(n,r,1) when the t-exponents differ.  Returns
// nothing when the bounded search fails (fusion pairs make that unavoidable).
std::optional<HGroup> find_separating_quotient(const Bs1nGroup& g,
                                               const Bs1nElement& x,
                                               const Bs1nElement& y,
                                               const PrimeSet& p_set,
                                               const Int& s_max);

}  // namespace gbs
