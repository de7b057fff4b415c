#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace betaword {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }

/// Renders q as "a + b/c" (e.g. "3 + 1/11"); plain "a" for integers.
std::string mixed_fraction(const BigRat& q);

/// Decimal rendering with `digits` fractional digits, round-to-nearest.
std::string rat_to_decimal(const BigRat& q, unsigned digits);

/// Parses decimal/scientific literals ("0.5", "1e-14") into an exact rational.
BigRat rat_from_decimal(const std::string& text);

// Closed interval with rational endpoints. Endpoint arithmetic is exact,
// so there is no rounding direction to worry about.
struct RatInterval {
  BigRat lo{0};
  BigRat hi{0};

  RatInterval() = default;
  RatInterval(const BigRat& point) : lo(point), hi(point) {}
  RatInterval(BigRat l, BigRat h);

  BigRat mid() const { return (lo + hi) / 2; }
  BigRat width() const { return hi - lo; }
  bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
  bool certainly_below(const BigRat& x) const { return hi < x; }
  bool certainly_above(const BigRat& x) const { return lo > x; }

  static RatInterval hull(const RatInterval& a, const RatInterval& b);
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
/// Requires 0 not in b.
RatInterval operator/(const RatInterval& a, const RatInterval& b);
/// a^k for k >= 0.
RatInterval interval_pow(const RatInterval& a, unsigned k);

}  // namespace betaword
