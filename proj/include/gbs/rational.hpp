#pragma once

#include <gbs/integer.hpp>

#include <ostream>
#include <string>

namespace gbs {

// Exact rational with reduced representation, denominator > 0.
struct Rational {
  Int num{0};
  Int den{1};

  Rational() = default;
  Rational(Int n) : num(std::move(n)), den(1) {}  // NOLINT: implicit from Int
  Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { reduce(); }

  void reduce() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = gcd(abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }

  bool is_integer() const { return den == 1; }

  friend Rational rat_abs(const Rational& a) { return Rational(abs(a.num), a.den); }

  std::string str() const {
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) {
    return os << a.str();
  }
};

// Least positive rational L with L / q_i integral for all inputs.
inline Rational rational_lcm(const Rational& a, const Rational& b) {
  return Rational(lcm(abs(a.num), abs(b.num)), gcd(a.den, b.den));
}

}  // namespace gbs
