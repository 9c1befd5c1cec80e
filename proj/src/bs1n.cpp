#include <gbs/bs1n.hpp>

#include <gbs/number_theory.hpp>

#include <map>

namespace gbs {

std::string Bs1nElement::str() const {
  GroupWord word;
  word.append("t", u);
  word.append("a", w);
  word.append("t", -v);
  return word.str();
}

Bs1nElement make_element(const Bs1nGroup& g, Int u, Int w, Int v) {
  if (u < 0 || v < 0)
    throw std::invalid_argument("Bs1nElement: t-exponents must be >= 0");
  while (u > 0 && v > 0 && w % g.n == 0) {
    --u;
    --v;
    w /= g.n;
  }
  return {std::move(u), std::move(w), std::move(v)};
}

Bs1nElement from_standard(const Bs1nGroup& g, const Int& k, const Int& m) {
  if (k >= 0) return make_element(g, k, m, 0);
  // t^k a^m = a^{m n^{-k}} t^k for k < 0
  return make_element(g, 0, m * int_pow(g.n, -k), -k);
}

Bs1nElement multiply(const Bs1nGroup& g, const Bs1nElement& x,
                     const Bs1nElement& y) {
  // t^{u1} a^{w1} t^{-v1} . t^{u2} a^{w2} t^{-v2}
  if (x.v >= y.u) {
    Int d = x.v - y.u;  // t^{u1} a^{w1} t^{-d} a^{w2} t^{-v2}
    return make_element(g, x.u, x.w + y.w * int_pow(g.n, d), d + y.v);
  }
  Int d = y.u - x.v;  // t^{u1} a^{w1} t^{d} a^{w2} t^{-v2}
  return make_element(g, x.u + d, x.w * int_pow(g.n, d) + y.w, y.v);
}

Bs1nElement inverse(const Bs1nGroup& g, const Bs1nElement& x) {
  return make_element(g, x.v, -x.w, x.u);
}

Bs1nElement from_word(const Bs1nGroup& g, const GroupWord& word) {
  Bs1nElement acc;
  for (const auto& [gen, exp] : word.terms) {
    Bs1nElement term;
    if (gen == "t") {
      term = exp >= 0 ? make_element(g, exp, 0, 0) : make_element(g, 0, 0, -exp);
    } else if (gen == "a") {
      term = make_element(g, 0, exp, 0);
    } else {
      throw parse_error("BS(1,n) words use generators t and a only");
    }
    acc = multiply(g, acc, term);
  }
  return acc;
}

StandardConjugate to_standard_conjugate(const Bs1nGroup& g,
                                        const Bs1nElement& x) {
  (void)g;
  return {x.u - x.v, x.w};
}

namespace {

// Exponent j >= 0 with a = b * n^j, if one exists.
std::optional<Int> power_quotient(const Int& a, const Int& b, const Int& n) {
  if (b == 0) return a == 0 ? std::optional<Int>(0) : std::nullopt;
  if (abs(n) == 1) {
    if (a == b) return 0;
    if (a == b * n) return 1;
    return std::nullopt;
  }
  Int value = b;
  Int j = 0;
  while (abs(value) <= abs(a)) {
    if (value == a) return j;
    value *= n;
    ++j;
  }
  return std::nullopt;
}

// Solves c^-1 (t^u a^m1) c = t^u a^m2 for u >= 0, returning c, via the
// equation m1 n^x - (n^u - 1) z = m2 n^y over x, y >= 0, z in Z.
std::optional<Bs1nElement> conjugate_standard_pair(const Bs1nGroup& g,
                                                   const Int& u, const Int& m1,
                                                   const Int& m2) {
  auto assemble = [&](const Int& x, const Int& z, const Int& y) {
    Bs1nElement c = make_element(g, x, 0, 0);
    c = multiply(g, c, make_element(g, 0, z, 0));
    return multiply(g, c, make_element(g, 0, 0, y));
  };

  Int big_m = int_pow(g.n, u) - 1;
  if (big_m == 0) {
    // Exact equation m1 n^x = m2 n^y (the convention 0 | x iff x = 0).
    if (auto j = power_quotient(m1, m2, g.n)) return assemble(0, 0, *j);
    if (auto j = power_quotient(m2, m1, g.n)) return assemble(*j, 0, 0);
    return std::nullopt;
  }

  // Powers of n mod |M| are periodic with period multiplicative_order(n, |M|),
  // which divides u, so the search space is complete.
  Int mod = abs(big_m);
  Int order = multiplicative_order(g.n, mod);
  std::map<Int, Int> rhs;  // m2 n^y mod |M| -> smallest y
  Int value = mod_floor(m2, mod);
  for (Int y = 0; y < order; ++y) {
    rhs.emplace(value, y);
    value = mod_floor(value * g.n, mod);
  }
  value = mod_floor(m1, mod);
  for (Int x = 0; x < order; ++x) {
    auto it = rhs.find(value);
    if (it != rhs.end()) {
      const Int& y = it->second;
      Int z = (m1 * int_pow(g.n, x) - m2 * int_pow(g.n, y)) / big_m;
      return assemble(x, z, y);
    }
    value = mod_floor(value * g.n, mod);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Bs1nElement> find_conjugator(const Bs1nGroup& g,
                                           const Bs1nElement& x,
                                           const Bs1nElement& y) {
  StandardConjugate sx = to_standard_conjugate(g, x);
  StandardConjugate sy = to_standard_conjugate(g, y);
  // The t-exponent sum is invariant under conjugation.
  if (sx.k != sy.k) return std::nullopt;

  Int u = sx.k, m1 = sx.m, m2 = sy.m;
  if (u < 0) {
    // x ~ y iff x^-1 ~ y^-1, and a conjugator for the inverses conjugates the
    // originals as well.  (t^u a^m)^-1 = t^{-u} a^{-m n^{-u}}.
    Int p = int_pow(g.n, -u);
    m1 = -m1 * p;
    m2 = -m2 * p;
    u = -u;
  }

  auto core = conjugate_standard_pair(g, u, m1, m2);
  if (!core) return std::nullopt;
  // x --t^{v_x}--> standard form --core--> standard form <--t^{v_y}-- y
  Bs1nElement c = make_element(g, x.v, 0, 0);
  c = multiply(g, c, *core);
  return multiply(g, c, make_element(g, 0, 0, y.v));
}

bool are_conjugate(const Bs1nGroup& g, const Bs1nElement& x,
                   const Bs1nElement& y) {
  return find_conjugator(g, x, y).has_value();
}

}  // namespace gbs
