#include <gbs/number_theory.hpp>

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace gbs {

namespace {

constexpr unsigned kTrialBound = 100000;  // trial division limit for factorize
constexpr unsigned kMillerRabinRounds = 32;

bool miller_rabin(const Int& x) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  return boost::multiprecision::miller_rabin_test(x, kMillerRabinRounds, rng);
}

// Brent's cycle-finding variant of Pollard's rho; n odd composite with no
// factor below the trial bound.  Returns a non-trivial divisor.
Int pollard_brent(const Int& n, std::mt19937_64& rng) {
  while (true) {
    Int y = Int(rng()) % (n - 1) + 1;
    Int c = Int(rng()) % (n - 1) + 1;
    Int m = 128, g = 1, r = 1, q = 1;
    Int x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int limit = r - k;
        if (limit > m) limit = m;
        for (Int i = 0; i < limit; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      y = ys;
      while (g == 1) {
        y = (y * y + c) % n;
        g = gcd(abs(x - y), n);
      }
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& x, std::map<Int, int>& out, std::mt19937_64& rng) {
  if (x == 1) return;
  if (miller_rabin(x)) {
    out[x] += 1;
    return;
  }
  Int d = pollard_brent(x, rng);
  factor_into(d, out, rng);
  factor_into(x / d, out, rng);
}

}  // namespace

bool is_prime(const Int& x) {
  if (x < 2) return false;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  return miller_rabin(x);
}

Int next_prime_above(const Int& x) {
  Int p = x < 2 ? Int(2) : x + 1;
  if (p > 2 && p % 2 == 0) ++p;
  while (!is_prime(p)) p += 2;
  return p;
}

std::vector<std::pair<Int, int>> factorize(const Int& x) {
  if (x < 1) throw std::domain_error("factorize: argument must be >= 1");
  std::map<Int, int> factors;
  Int rest = x;
  if (rest <= 0x7fffffffffffffffLL) {
    // native fast path for the trial range
    unsigned long long small = rest.convert_to<unsigned long long>();
    for (unsigned long long p = 2; p <= kTrialBound && p * p <= small;
         p += (p == 2 ? 1 : 2)) {
      while (small % p == 0) {
        factors[Int(p)] += 1;
        small /= p;
      }
    }
    rest = small;
  } else {
    for (unsigned p = 2; p <= kTrialBound && rest > 1; p += (p == 2 ? 1 : 2)) {
      if (Int(p) * p > rest) break;
      while (rest % p == 0) {
        factors[Int(p)] += 1;
        rest /= p;
      }
    }
  }
  if (rest > 1) {
    if (rest <= Int(kTrialBound) * kTrialBound) {
      factors[rest] += 1;  // no divisor up to its square root, so prime
    } else {
      std::mt19937_64 rng(0xc0ffee1234567ULL);
      factor_into(rest, factors, rng);
    }
  }
  return {factors.begin(), factors.end()};
}

bool is_p_number(const Int& x, const PrimeSet& p_set) {
  if (x == 0) throw std::domain_error("is_p_number: zero has no prime support");
  switch (p_set.kind()) {
    case PrimeSet::Kind::All:
      return true;
    case PrimeSet::Kind::Finite: {
      Int y = abs(x);
      for (const Int& p : p_set.primes())
        while (y % p == 0) y /= p;
      return y == 1;
    }
    case PrimeSet::Kind::AllExcept: {
      for (const Int& p : p_set.primes())
        if (x % p == 0) return false;
      return true;
    }
  }
  return false;
}

Int multiplicative_order(const Int& n, const Int& s) {
  if (s < 1) throw std::domain_error("multiplicative_order: modulus must be positive");
  if (s == 1) return 1;
  Int base = mod_floor(n, s);
  if (gcd(base, s) != 1)
    throw std::domain_error("multiplicative_order: base and modulus not coprime");
  // Euler totient from the factorization of s, then peel primes off the
  // exponent while the power stays 1.
  Int phi = 1;
  for (const auto& [p, e] : factorize(s)) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  Int order = phi;
  for (const auto& [q, e] : factorize(phi)) {
    (void)e;
    while (order % q == 0 && mod_pow(base, order / q, s) == 1) order /= q;
  }
  return order;
}

bool in_omega(const Int& n, const Int& r, const Int& s) {
  if (r <= 0 || s <= 0) return false;
  return mod_pow(n, r, s) == mod_floor(1, s);
}

bool in_xi(const Int& n, const Int& s, const PrimeSet& p_set) {
  if (s < 1) throw std::domain_error("in_xi: s must be positive");
  if (s == 1) return true;
  if (!is_p_number(s, p_set)) return false;
  if (gcd(mod_floor(n, s), s) != 1) return false;
  return is_p_number(multiplicative_order(n, s), p_set);
}

std::vector<OmegaPair> enumerate_omega(const Int& n, const PrimeSet& p_set,
                                       const Int& s_max) {
  if (s_max < 1) throw std::domain_error("enumerate_omega: s_max must be >= 1");
  std::vector<OmegaPair> pairs;
  for (Int s = 1; s <= s_max; ++s) {
    if (!in_xi(n, s, p_set)) continue;
    pairs.push_back({multiplicative_order(n, s), s});
  }
  return pairs;
}

OmegaPair make_omega_pair(const Int& n, const Int& r, const Int& s) {
  if (!in_omega(n, r, s))
    throw std::invalid_argument("OmegaPair: n^r != 1 (mod s)");
  return {r, s};
}

}  // namespace gbs
