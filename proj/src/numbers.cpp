#include "betaword/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace betaword {

std::string mixed_fraction(const BigRat& q) {
  BigInt num = rat_num(q);
  BigInt den = rat_den(q);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt whole = num / den;
  BigInt rest = num % den;
  std::string out = negative ? "-" : "";
  if (rest == 0) return out + whole.str();
  if (whole == 0) return out + rest.str() + "/" + den.str();
  return out + whole.str() + " + " + rest.str() + "/" + den.str();
}

std::string rat_to_decimal(const BigRat& q, unsigned digits) {
  BigInt num = rat_num(q);
  BigInt den = rat_den(q);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

BigRat rat_from_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  auto fail = [&]() -> BigRat { throw std::invalid_argument("bad decimal literal: " + text); };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool any = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    mantissa = mantissa * 10 + (text[i] - '0');
    any = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      mantissa = mantissa * 10 + (text[i] - '0');
      ++frac_digits;
      any = true;
    }
  }
  if (!any) return fail();
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    if (i >= text.size()) return fail();
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i)
      exponent = exponent * 10 + (text[i] - '0');
    if (eneg) exponent = -exponent;
  }
  if (i != text.size()) return fail();
  long e = exponent - frac_digits;
  BigInt num = mantissa, den = 1;
  if (e >= 0)
    for (long k = 0; k < e; ++k) num *= 10;
  else
    for (long k = 0; k < -e; ++k) den *= 10;
  BigRat q(num, den);
  return negative ? BigRat(-q) : q;
}

RatInterval::RatInterval(BigRat l, BigRat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
}

RatInterval RatInterval::hull(const RatInterval& a, const RatInterval& b) {
  return RatInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo + b.lo, a.hi + b.hi);
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo - b.hi, a.hi - b.lo);
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  BigRat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return RatInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                     std::max(std::max(p1, p2), std::max(p3, p4)));
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division by interval containing zero");
  RatInterval inv(BigRat(1) / b.hi, BigRat(1) / b.lo);
  return a * inv;
}

RatInterval interval_pow(const RatInterval& a, unsigned k) {
  RatInterval out{BigRat(1)};
  RatInterval base = a;
  while (k > 0) {
    if (k & 1u) out = out * base;
    base = base * base;
    k >>= 1u;
  }
  return out;
}

}  // namespace betaword
