#pragma once

#include <numeric>
#include <string>

#include "errors.hpp"

namespace heig {

/// Positive rational p/q kept in lowest terms.
struct Rational {
  unsigned long num = 1;
  unsigned long den = 1;

  Rational() = default;
  Rational(unsigned long n, unsigned long d) : num(n), den(d) {
    if (n == 0 || d == 0) throw InvalidConfig("rational must be positive");
    unsigned long g = std::gcd(n, d);
    num = n / g;
    den = d / g;
  }

  std::string to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  bool operator==(const Rational&) const = default;

  /// Parses "p/q" or a bare integer "p"; anything else is rejected so the
  /// value stays exactly rational.
  static Rational parse(const std::string& s);
};

inline Rational Rational::parse(const std::string& s) {
  auto is_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  size_t slash = s.find('/');
  std::string p = slash == std::string::npos ? s : s.substr(0, slash);
  std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_digits(p) || !is_digits(q))
    throw InvalidConfig("expected rational p/q, got '" + s + "'");
  unsigned long pn = std::stoul(p), qn = std::stoul(q);
  if (pn == 0 || qn == 0) throw InvalidConfig("rational must be positive");
  return Rational(pn, qn);
}

}  // namespace heig
