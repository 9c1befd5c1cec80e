#include <gbs/words.hpp>

namespace gbs {

GroupWord& GroupWord::append(std::string gen, Int exponent) {
  if (exponent == 0) return *this;
  if (!terms.empty() && terms.back().first == gen) {
    terms.back().second += exponent;
    if (terms.back().second == 0) terms.pop_back();
    return *this;
  }
  terms.emplace_back(std::move(gen), std::move(exponent));
  return *this;
}

GroupWord operator+(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  for (const auto& [gen, exp] : b.terms) out.append(gen, exp);
  return out;
}

std::string GroupWord::str() const {
  std::string out;
  for (const auto& [gen, exp] : terms) {
    if (!out.empty()) out += ' ';
    out += gen;
    if (exp != 1) out += "^" + exp.str();
  }
  return out;
}

namespace {

bool is_separator(char c) { return c == ' ' || c == '*'; }

Int parse_exponent(std::string_view text, size_t& pos) {
  size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  size_t digits = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == digits) throw parse_error("word: expected integer after '^'");
  return Int(std::string(text.substr(start, pos - start)));
}

GroupWord parse_terms(std::string_view text, bool dotted) {
  GroupWord word;
  size_t pos = 0;
  while (pos < text.size()) {
    if (is_separator(text[pos])) {
      ++pos;
      continue;
    }
    std::string gen;
    if (dotted) {
      char head = text[pos];
      if ((head != 'g' && head != 't') || pos + 1 >= text.size() ||
          text[pos + 1] != '.')
        throw parse_error("word: expected g.<id> or t.<id>");
      size_t id_start = pos + 2;
      size_t id_end = id_start;
      while (id_end < text.size() && !is_separator(text[id_end]) &&
             text[id_end] != '^')
        ++id_end;
      if (id_end == id_start) throw parse_error("word: empty generator id");
      gen = std::string(text.substr(pos, id_end - pos));
      pos = id_end;
    } else {
      char head = text[pos];
      if (head != 't' && head != 'a')
        throw parse_error(std::string("word: unknown generator '") + head +
                          "'");
      gen = std::string(1, head);
      ++pos;
    }
    Int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = parse_exponent(text, pos);
    }
    if (pos < text.size() && !is_separator(text[pos]))
      throw parse_error("word: expected separator");
    word.append(std::move(gen), std::move(exp));
  }
  return word;
}

}  // namespace

GroupWord parse_bs_word(std::string_view text) { return parse_terms(text, false); }

GroupWord parse_gbs_word(std::string_view text) { return parse_terms(text, true); }

}  // namespace gbs
