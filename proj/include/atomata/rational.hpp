#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "atomata/errors.hpp"

namespace atomata {

// Exact rational with reduced representation, den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }

  // Midpoint; used when a witness strictly between two rationals is needed.
  static Rational between(const Rational& lo, const Rational& hi) {
    return Rational(lo.num * hi.den + hi.num * lo.den, 2 * lo.den * hi.den);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Parses "n" or "p/q"; throws ParseError on malformed text.
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(text));
      std::int64_t p = std::stoll(text.substr(0, slash));
      std::int64_t q = std::stoll(text.substr(slash + 1));
      return Rational(p, q);
    } catch (const std::logic_error&) {
      throw ParseError("malformed rational literal '" + text + "'");
    }
  }
};

}  // namespace atomata
