#pragma once

#include <gbs/integer.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gbs {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word in named generators: a sequence of (generator, exponent) terms with
// nonzero exponents and no two adjacent terms sharing a generator.
struct GroupWord {
  std::vector<std::pair<std::string, Int>> terms;

  GroupWord& append(std::string gen, Int exponent);
  friend GroupWord operator+(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.terms == b.terms;
  }
  std::string str() const;
};

// Grammar: WORD := TERM (('*'|' ') TERM)*, TERM := GEN ('^' INT)?, with
// GEN = 't' | 'a'.  The empty word is the identity.
GroupWord parse_bs_word(std::string_view text);

// Same shape with GEN = 'g' '.' <id> | 't' '.' <id>; ids run to the next
// separator or '^'.
GroupWord parse_gbs_word(std::string_view text);

}  // namespace gbs
