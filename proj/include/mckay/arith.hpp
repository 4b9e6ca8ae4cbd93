#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckay {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (group specs, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computed object failed one of its structural checks.
class VerificationError : public Error {
 public:
  using Error::Error;
};

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Non-negative residue of a modulo m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline Int mod(const Int& a, const Int& m) {
  Int r = a % m;
  return r < 0 ? Int(r + m) : r;
}

/// gcd of all entries, always >= 0; zero vector gives 0.
inline Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  return g;
}

/// Decimal digits of v. Unlike cpp_int::str this ignores the global locale.
inline std::string to_decimal(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return std::to_string(static_cast<std::int64_t>(v));
  const Int chunk(1000000000000000000LL);
  Int a = v < 0 ? Int(-v) : v;
  std::string s;
  while (a >= chunk) {
    std::string part = std::to_string(static_cast<std::int64_t>(a % chunk));
    s = std::string(18 - part.size(), '0') + part + s;
    a /= chunk;
  }
  s = std::to_string(static_cast<std::int64_t>(a)) + s;
  return v < 0 ? "-" + s : s;
}

inline std::int64_t to_i64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw Error("integer does not fit in 64 bits: " + to_decimal(v));
  return static_cast<std::int64_t>(v);
}

/// Rational rendered as "p" or "p/q".
inline std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return to_decimal(numerator(q));
  return to_decimal(numerator(q)) + "/" + to_decimal(denominator(q));
}

}  // namespace mckay
