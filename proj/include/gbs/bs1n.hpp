#pragma once

#include <gbs/integer.hpp>
#include <gbs/words.hpp>

#include <optional>
#include <string>

namespace gbs {

// The group BS(1,n) = <a, t; t^-1 a t = a^n>, n != 0.
struct Bs1nGroup {
  Int n;
  explicit Bs1nGroup(Int base) : n(std::move(base)) {
    if (n == 0) throw std::invalid_argument("Bs1nGroup: n must be nonzero");
  }
};

// Canonical triple (u, w, v) standing for t^u a^w t^{-v} with u, v >= 0 and
// (u = 0 or v = 0 or n does not divide w).  Canonical triples are in
// bijection with group elements.
struct Bs1nElement {
  Int u{0};
  Int w{0};
  Int v{0};
  friend bool operator==(const Bs1nElement& x, const Bs1nElement& y) {
    return x.u == y.u && x.w == y.w && x.v == y.v;
  }
  bool is_identity() const { return u == 0 && w == 0 && v == 0; }
  std::string str() const;  // word form, e.g. "t^2 a^-1 t^-1"
};

// Conjugacy representative t^k a^m.
struct StandardConjugate {
  Int k;
  Int m;
  friend bool operator==(const StandardConjugate& a, const StandardConjugate& b) {
    return a.k == b.k && a.m == b.m;
  }
};

// Canonical element for t^u a^w t^{-v}; u, v >= 0 required.
Bs1nElement make_element(const Bs1nGroup& g, Int u, Int w, Int v);

// Element denoted by t^k a^m, k of either sign.
Bs1nElement from_standard(const Bs1nGroup& g, const Int& k, const Int& m);

// Evaluate a word over {t, a}.
Bs1nElement from_word(const Bs1nGroup& g, const GroupWord& word);

Bs1nElement multiply(const Bs1nGroup& g, const Bs1nElement& x,
                     const Bs1nElement& y);
Bs1nElement inverse(const Bs1nGroup& g, const Bs1nElement& x);

// Conjugating by t^v turns t^u a^w t^{-v} into t^{u-v} a^w.
StandardConjugate to_standard_conjugate(const Bs1nGroup& g,
                                        const Bs1nElement& x);

bool are_conjugate(const Bs1nGroup& g, const Bs1nElement& x,
                   const Bs1nElement& y);

// A conjugator c with c^-1 x c = y, or nothing when x and y are not
// conjugate.
std::optional<Bs1nElement> find_conjugator(const Bs1nGroup& g,
                                           const Bs1nElement& x,
                                           const Bs1nElement& y);

}  // namespace gbs
