#include <gbs/prime_set.hpp>

#include <gbs/number_theory.hpp>

#include <algorithm>
#include <stdexcept>

namespace gbs {

PrimeSet::PrimeSet(Kind kind, std::vector<Int> primes)
    : kind_(kind), primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (const Int& p : primes_) {
    if (!is_prime(p))
      throw std::invalid_argument("PrimeSet: " + p.str() + " is not prime");
  }
  if (kind_ == Kind::Finite && primes_.empty())
    throw std::invalid_argument("PrimeSet: finite set must be non-empty");
  if (kind_ == Kind::AllExcept && primes_.empty()) kind_ = Kind::All;
  if (kind_ == Kind::All) primes_.clear();
}

PrimeSet PrimeSet::all() { return PrimeSet(Kind::All, {}); }

PrimeSet PrimeSet::finite(std::vector<Int> primes) {
  return PrimeSet(Kind::Finite, std::move(primes));
}

PrimeSet PrimeSet::all_except(std::vector<Int> primes) {
  return PrimeSet(Kind::AllExcept, std::move(primes));
}

namespace {

std::vector<Int> parse_brace_list(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument("PrimeSet: expected {p1,p2,...}");
  std::vector<Int> primes;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    size_t comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    if (item.empty()) throw std::invalid_argument("PrimeSet: empty list entry");
    for (char c : item)
      if (c < '0' || c > '9')
        throw std::invalid_argument("PrimeSet: bad prime literal");
    primes.emplace_back(std::string(item));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw std::invalid_argument("PrimeSet: trailing comma");
  }
  return primes;
}

}  // namespace

PrimeSet PrimeSet::parse(std::string_view text) {
  if (text == "all") return all();
  if (text.rfind("all-", 0) == 0)
    return all_except(parse_brace_list(text.substr(4)));
  if (!text.empty() && text.front() == '{')
    return finite(parse_brace_list(text));
  throw std::invalid_argument("PrimeSet: cannot parse '" + std::string(text) +
                              "'");
}

bool PrimeSet::contains(const Int& p) const {
  switch (kind_) {
    case Kind::All:
      return true;
    case Kind::Finite:
      return std::binary_search(primes_.begin(), primes_.end(), p);
    case Kind::AllExcept:
      return !std::binary_search(primes_.begin(), primes_.end(), p);
  }
  return false;
}

Int PrimeSet::smallest_missing_prime() const {
  switch (kind_) {
    case Kind::All:
      throw std::domain_error("PrimeSet: full set has no missing prime");
    case Kind::AllExcept:
      return primes_.front();
    case Kind::Finite: {
      Int p = 2;
      while (std::binary_search(primes_.begin(), primes_.end(), p))
        p = next_prime_above(p);
      return p;
    }
  }
  throw std::logic_error("PrimeSet: bad kind");
}

std::string PrimeSet::str() const {
  if (kind_ == Kind::All) return "all";
  std::string out = kind_ == Kind::AllExcept ? "all-{" : "{";
  for (size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) out += ',';
    out += primes_[i].str();
  }
  out += '}';
  return out;
}

}  // namespace gbs
