#include <gbs/h_quotient.hpp>

#include <gbs/number_theory.hpp>

#include <stdexcept>

namespace gbs {

namespace {
constexpr unsigned kPowCacheLimit = 4096;
}

HGroup::HGroup(Int n, Int r, Int s)
    : n_(std::move(n)), r_(std::move(r)), s_(std::move(s)) {
  if (!in_omega(n_, r_, s_))
    throw std::invalid_argument("HGroup: requires r, s > 0 and n^r = 1 (mod s)");
  if (r_ <= kPowCacheLimit) {
    cache_.reserve(static_cast<size_t>(r_));
    Int value = mod_floor(1, s_);
    for (Int i = 0; i < r_; ++i) {
      cache_.push_back(value);
      value = mod_floor(value * n_, s_);
    }
  }
}

Int HGroup::pow_n(const Int& i) const {
  if (!cache_.empty()) return cache_[static_cast<size_t>(i)];
  return mod_pow(n_, i, s_);
}

HElement h_element(const HGroup& G, const Int& i, const Int& j) {
  return {mod_floor(i, G.r()), mod_floor(j, G.s())};
}

HElement h_multiply(const HGroup& G, const HElement& x, const HElement& y) {
  // t^{i1} a^{j1} t^{i2} a^{j2} = t^{i1+i2} a^{j1 n^{i2} + j2}
  return {mod_floor(x.i + y.i, G.r()),
          mod_floor(x.j * G.pow_n(y.i) + y.j, G.s())};
}

HElement h_inverse(const HGroup& G, const HElement& x) {
  Int i = mod_floor(-x.i, G.r());
  return {i, mod_floor(-x.j * G.pow_n(i), G.s())};
}

HElement h_power(const HGroup& G, const HElement& x, const Int& k) {
  if (k < 0) return h_power(G, h_inverse(G, x), -k);
  HElement result;  // identity
  HElement base = x;
  Int e = k;
  while (e > 0) {
    if ((e & 1) != 0) result = h_multiply(G, result, base);
    e >>= 1;
    if (e > 0) base = h_multiply(G, base, base);
  }
  return result;
}

HElement h_from_word(const HGroup& G, const GroupWord& word) {
  HElement acc;
  for (const auto& [gen, exp] : word.terms) {
    HElement base;
    if (gen == "t") {
      base = h_element(G, 1, 0);
    } else if (gen == "a") {
      base = h_element(G, 0, 1);
    } else {
      throw parse_error("H(n,r,s) words use generators t and a only");
    }
    acc = h_multiply(G, acc, h_power(G, base, exp));
  }
  return acc;
}

HElement natural_hom(const Bs1nGroup& g, const HGroup& G,
                     const Bs1nElement& x) {
  if (g.n != G.n())
    throw std::invalid_argument("natural_hom: group bases differ");
  HElement t = h_element(G, 1, 0);
  HElement a = h_element(G, 0, 1);
  HElement image = h_power(G, t, x.u);
  image = h_multiply(G, image, h_power(G, a, x.w));
  return h_multiply(G, image, h_power(G, t, -x.v));
}

namespace {

// gcd(n^u - 1, s) computed from residues; equals s when n^u = 1 (mod s).
Int criterion_modulus(const HGroup& G, const Int& u) {
  Int a = mod_floor(G.pow_n(u) - 1, G.s());
  return gcd(a, G.s());  // gcd(0, s) = s
}

// Whether some j1 n^x = j2 n^y (mod d).  The values j n^x mod d form the
// orbit of j under the invertible map (* n), and two orbits of a group
// action either coincide or are disjoint, so it suffices to test whether j2
// lies on the orbit of j1.
bool orbits_meet(const Int& n, const Int& d, const Int& j1, const Int& j2) {
  Int start = mod_floor(j1, d);
  Int target = mod_floor(j2, d);
  Int value = start;
  while (true) {
    if (value == target) return true;
    value = mod_floor(value * n, d);
    if (value == start) return false;
  }
}

}  // namespace

bool h_are_conjugate_criterion(const HGroup& G, const HElement& x,
                               const HElement& y) {
  if (x.i != y.i) return false;  // images in H/<a> = Z_r differ
  Int d = criterion_modulus(G, x.i);
  return orbits_meet(G.n(), d, x.j, y.j);
}

bool h_are_conjugate_bruteforce(const HGroup& G, const HElement& x,
                                const HElement& y, const Int& bound) {
  if (G.order() > bound)
    throw std::domain_error("h_are_conjugate_bruteforce: group order exceeds bound");
  for (Int i = 0; i < G.r(); ++i) {
    for (Int j = 0; j < G.s(); ++j) {
      HElement c{i, j};
      HElement conj = h_multiply(G, h_multiply(G, h_inverse(G, c), x), c);
      if (conj == y) return true;
    }
  }
  return false;
}

std::optional<HGroup> find_separating_quotient(const Bs1nGroup& g,
                                               const Bs1nElement& x,
                                               const Bs1nElement& y,
                                               const PrimeSet& p_set,
                                               const Int& s_max) {
  if (are_conjugate(g, x, y))
    throw std::invalid_argument("find_separating_quotient: elements are conjugate");

  StandardConjugate sx = to_standard_conjugate(g, x);
  StandardConjugate sy = to_standard_conjugate(g, y);
  if (sx.k != sy.k) {
    // Distinct t-exponents stay distinct in the cyclic quotient H(n,r,1)
    // once r exceeds |k1| + |k2|; r must also be a P-number.
    Int r = abs(sx.k) + abs(sy.k) + 1;
    while (!is_p_number(r, p_set)) ++r;
    return HGroup(g.n, r, 1);
  }

  for (const OmegaPair& pair : enumerate_omega(g.n, p_set, s_max)) {
    HGroup G(g.n, pair.r, pair.s);
    if (!h_are_conjugate_criterion(G, natural_hom(g, G, x),
                                   natural_hom(g, G, y)))
      return G;
  }
  return std::nullopt;
}

}  // namespace gbs
