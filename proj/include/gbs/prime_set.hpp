#pragma once

#include <gbs/integer.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace gbs {

// A set of primes given either as a finite list, the complement of a finite
// list, or the set of all primes.  Text grammar (whitespace-free):
//   all | all-{p1,p2,...} | {p1,p2,...}
class PrimeSet {
 public:
  enum class Kind { All, Finite, AllExcept };

  static PrimeSet all();
  static PrimeSet finite(std::vector<Int> primes);
  static PrimeSet all_except(std::vector<Int> primes);
  static PrimeSet parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::vector<Int>& primes() const { return primes_; }

  bool is_all() const { return kind_ == Kind::All; }
  bool contains(const Int& p) const;

  // Smallest prime outside the set; throws for the full set.
  Int smallest_missing_prime() const;

  std::string str() const;

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) {
    return a.kind_ == b.kind_ && a.primes_ == b.primes_;
  }

 private:
  PrimeSet(Kind kind, std::vector<Int> primes);

  Kind kind_;
  std::vector<Int> primes_;  // sorted, duplicate-free; empty iff kind == All
};

}  // namespace gbs
