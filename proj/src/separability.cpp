#include <gbs/separability.hpp>

#include <gbs/bs1n.hpp>
#include <gbs/h_quotient.hpp>
#include <gbs/number_theory.hpp>

#include <algorithm>
#include <stdexcept>

namespace gbs {

Verdict Verdict::yes(std::string reason, std::map<std::string, Int> witness) {
  return {Answer::Yes, std::move(reason), std::move(witness), std::nullopt};
}

Verdict Verdict::no(std::string reason, std::map<std::string, Int> witness) {
  return {Answer::No, std::move(reason), std::move(witness), std::nullopt};
}

Verdict Verdict::unknown(std::string reason, Int bound) {
  return {Answer::Unknown, std::move(reason), {}, std::move(bound)};
}

bool meskin_residually_finite(const Int& m, const Int& n) {
  if (m == 0 || n == 0)
    throw std::domain_error("meskin_residually_finite: parameters must be nonzero");
  // BS(m,n), BS(n,m), BS(-m,-n), BS(-n,-m) are isomorphic, so only the
  // normalized pair 0 < m <= |n| matters.
  Int a = abs(m) <= abs(n) ? abs(m) : abs(n);
  Int b = abs(m) <= abs(n) ? abs(n) : abs(m);
  return a == 1 || a == b;
}

bool bs_m_minus_m_residual(const Int& m, const PrimeSet& p_set) {
  if (m < 1) throw std::domain_error("bs_m_minus_m_residual: m must be >= 1");
  return is_p_number(m, p_set) && p_set.contains(2);
}

Verdict bs1n_residual(const Int& n, const PrimeSet& p_set,
                      const Int& search_bound) {
  if (abs(n) < 2)
    throw std::domain_error("bs1n_residual: requires |n| >= 2");
  auto admissible = [&](const Int& p) {
    return n % p != 0 && is_p_number(multiplicative_order(n, p), p_set);
  };
  if (p_set.kind() == PrimeSet::Kind::Finite) {
    for (const Int& p : p_set.primes())
      if (admissible(p)) return Verdict::yes("witness-prime", {{"prime", p}});
    return Verdict::no("no-admissible-prime");
  }
  for (Int p = 2; p <= search_bound; p = next_prime_above(p)) {
    if (p_set.contains(p) && admissible(p))
      return Verdict::yes("witness-prime", {{"prime", p}});
  }
  return Verdict::unknown("prime-search-exhausted", search_bound);
}

namespace {

// Labels of a reduced graph must all be P-numbers; returns an offending
// label if any.
std::optional<Int> non_p_label(const LabeledGraph& graph, const PrimeSet& p_set) {
  for (const LabeledEdge& e : graph.edges) {
    if (!is_p_number(e.label_from, p_set)) return e.label_from;
    if (!is_p_number(e.label_to, p_set)) return e.label_to;
  }
  return std::nullopt;
}

}  // namespace

Verdict residually_c_gbs(const LabeledGraph& graph, const PrimeSet& p_set,
                         const Int& search_bound) {
  auto [reduced, tree] = reduced_positive_form(graph);
  Classification cls = classify(reduced);
  switch (cls.kind) {
    case GbsClass::InfiniteCyclic:
    case GbsClass::Bs11:
      // Z and Z x Z: any nonzero vector survives reduction modulo a large
      // enough P-number.
      return Verdict::yes("free-abelian");
    case GbsClass::Bs1Minus1:
      return p_set.contains(2)
                 ? Verdict::yes("two-admissible", {{"prime", 2}})
                 : Verdict::no("two-required", {{"prime", 2}});
    case GbsClass::SolvableBs1n:
      return bs1n_residual(cls.n, p_set, search_bound);
    case GbsClass::NonSolvable:
      break;
  }

  ModularImage image = modular_image(reduced, tree);
  if (image.classification == ModularClass::Other)
    return Verdict::no("modular-image-obstruction");
  if (auto label = non_p_label(reduced, p_set))
    return Verdict::no("label-not-p-number", {{"label", *label}});
  if (image.classification == ModularClass::PlusMinusOne && !p_set.contains(2))
    return Verdict::no("two-required", {{"prime", 2}});
  return image.classification == ModularClass::PlusMinusOne
             ? Verdict::yes("labels-admissible-two-present")
             : Verdict::yes("labels-admissible");
}

Verdict conjugacy_separable_gbs(const LabeledGraph& graph, const PrimeSet& p_set,
                                const Int& search_bound) {
  auto [reduced, tree] = reduced_positive_form(graph);
  Classification cls = classify(reduced);
  if (cls.kind == GbsClass::SolvableBs1n) {
    if (p_set.is_all()) return Verdict::yes("all-primes-present");
    return Verdict::no("missing-prime",
                       {{"prime", p_set.smallest_missing_prime()}});
  }
  // Elementary and non-solvable groups: conjugacy separability coincides
  // with the residual property.
  return residually_c_gbs(graph, p_set, search_bound);
}

namespace {

// Whether gcd(n^u - 1, s) fails to divide v n^x - w n^y for every x, y >= 0;
// decided via disjointness of the multiply-by-n orbits mod the gcd.
bool modulus_separates(const Int& n, const Int& u, const Int& v, const Int& w,
                       const Int& s) {
  Int d = u == 0 ? s : gcd(mod_floor(mod_pow(n, u, s) - 1, s), s);
  Int start = mod_floor(v, d);
  Int target = mod_floor(w, d);
  Int value = start;
  while (true) {
    if (value == target) return false;
    value = mod_floor(value * n, d);
    if (value == start) return true;
  }
}

std::vector<Int> p_smooth_divisors(const Int& x, const PrimeSet& p_set) {
  std::vector<Int> divisors{1};
  for (const auto& [p, e] : factorize(x)) {
    if (!is_p_number(p, p_set)) continue;
    size_t base = divisors.size();
    Int power = 1;
    for (int i = 1; i <= e; ++i) {
      power *= p;
      for (size_t k = 0; k < base; ++k) divisors.push_back(divisors[k] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace

Verdict condition1_check(const Int& n, const PrimeSet& p_set, const Int& u,
                         const Int& v, const Int& w, const Int& s_max) {
  if (n == 0) throw std::domain_error("condition1_check: n must be nonzero");
  if (u < 0) throw std::domain_error("condition1_check: u must be >= 0");
  if (s_max < 1) throw std::domain_error("condition1_check: s_max must be >= 1");
  Bs1nGroup g(n);
  if (are_conjugate(g, from_standard(g, u, v), from_standard(g, u, w)))
    throw std::invalid_argument("condition1_check: elements are conjugate");

  for (Int s = 1; s <= s_max; ++s) {
    if (!in_xi(n, s, p_set)) continue;
    if (modulus_separates(n, u, v, w, s))
      return Verdict::yes("separating-modulus", {{"s", s}});
  }

  // Only d = gcd(n^u - 1, s) enters the condition, and d itself lies in
  // Xi(n, P) whenever s does (divisor closure), so for a finite prime set
  // the question reduces to the P-smooth divisors of |n^u - 1|.  That
  // argument needs n^u - 1 != 0: every integer divides 0.
  Int big_m = int_pow(n, u) - 1;
  if (p_set.kind() == PrimeSet::Kind::Finite && big_m != 0) {
    bool any = false;
    for (const Int& d : p_smooth_divisors(abs(big_m), p_set)) {
      if (!in_xi(n, d, p_set)) continue;
      if (modulus_separates(n, u, v, w, d)) {
        any = true;
        break;
      }
    }
    if (!any) return Verdict::no("no-admissible-modulus");
  }
  return Verdict::unknown("modulus-search-exhausted", s_max);
}

FusionWitness fusion_witness(const Int& n, const PrimeSet& p_set,
                             const Int& missing_prime) {
  if (abs(n) < 2)
    throw std::domain_error("fusion_witness: requires |n| >= 2");
  if (!is_prime(missing_prime))
    throw std::invalid_argument("fusion_witness: missing_prime must be prime");
  if (p_set.contains(missing_prime))
    throw std::invalid_argument("fusion_witness: prime is not missing from the set");

  Int u = missing_prime * missing_prime;
  Int v = int_pow(n, u) - 1;
  for (const auto& [q, e] : factorize(abs(v))) {
    (void)e;
    if (!in_xi(n, q, p_set)) return {n, u, v, v / q, q};
  }
  throw std::logic_error("fusion_witness: no prime divisor escapes Xi");
}

}  // namespace gbs
