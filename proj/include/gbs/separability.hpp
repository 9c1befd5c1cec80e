#pragma once

#include <gbs/gbs_graph.hpp>
#include <gbs/integer.hpp>
#include <gbs/labeled_graph.hpp>
#include <gbs/prime_set.hpp>

#include <map>
#include <optional>
#include <string>

namespace gbs {

enum class Answer { Yes, No, Unknown };

// Outcome of a separability decision.  `reason` names the criterion that
// fired; `witness` carries its integer payload (a prime, an offending label,
// a separating modulus, ...); `bound` is the exhausted search bound for
// Unknown verdicts.
struct Verdict {
  Answer answer{Answer::Unknown};
  std::string reason;
  std::map<std::string, Int> witness;
  std::optional<Int> bound;

  static Verdict yes(std::string reason, std::map<std::string, Int> witness = {});
  static Verdict no(std::string reason, std::map<std::string, Int> witness = {});
  static Verdict unknown(std::string reason, Int bound);
};

// Pair t^u a^v, t^u a^w with v = n^u - 1 = q w that is non-conjugate in
// BS(1,n) but fuses (becomes conjugate) in every admissible finite quotient.
struct FusionWitness {
  Int n;
  Int u;
  Int v;
  Int w;
  Int q;
};

// Default ceiling for the bounded searches over primes and moduli; the CLI
// lets GBS_SEP_BOUND override it.
inline const Int kDefaultSearchBound = 10000;

// Residual finiteness of BS(m,n) after normalizing to 0 < m <= |n|.
bool meskin_residually_finite(const Int& m, const Int& n);

// BS(m,-m) is residually a C-group iff m is a P-number and 2 is in P.
bool bs_m_minus_m_residual(const Int& m, const PrimeSet& p_set);

// BS(1,n), |n| >= 2: residually a C-group iff some prime p in P avoids n and
// has P-number multiplicative order of n mod p.  The search over cofinite
// sets is bounded, hence the Unknown verdict.
Verdict bs1n_residual(const Int& n, const PrimeSet& p_set,
                      const Int& search_bound = kDefaultSearchBound);

// Residual-C verdict for the GBS group of an arbitrary labeled graph.
Verdict residually_c_gbs(const LabeledGraph& graph, const PrimeSet& p_set,
                         const Int& search_bound = kDefaultSearchBound);

// Conjugacy C-separability verdict: coincides with the residual verdict
// except for BS(1,n) with |n| >= 2, which requires every prime.
Verdict conjugacy_separable_gbs(const LabeledGraph& graph, const PrimeSet& p_set,
                                const Int& search_bound = kDefaultSearchBound);

// Bounded check of the separating-modulus condition for the standard pair
// t^u a^v vs t^u a^w (which must be non-conjugate in BS(1,n)): does some
// s in Xi(n, P) satisfy gcd(n^u - 1, s) never dividing v n^x - w n^y?
Verdict condition1_check(const Int& n, const PrimeSet& p_set, const Int& u,
                         const Int& v, const Int& w, const Int& s_max);

// Constructs the fusion pair from a prime missing from P: u = p^2,
// v = n^u - 1, q a prime divisor of v outside Xi(n, P), w = v / q.
FusionWitness fusion_witness(const Int& n, const PrimeSet& p_set,
                             const Int& missing_prime);

}  // namespace gbs
