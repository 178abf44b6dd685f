#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <string>
#include <string_view>

#include "trackrate/errors.hpp"

namespace trackrate {

// Exact arithmetic used on every certified path. Floating point appears only
// in the power-iteration cross check (matrix.hpp).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int pow_int(Int base, unsigned long exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

// x^e for integer e, e < 0 allowed (requires x != 0).
inline Rat pow_rat(const Rat& x, long e) {
  if (e < 0) {
    if (x == 0) throw ParameterError("pow_rat: zero base with negative exponent");
    Rat inv = Rat(denominator(x), numerator(x));
    return pow_rat(inv, -e);
  }
  Rat r = 1, b = x;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

// "p/q" for non-integers, plain integer string otherwise.
inline std::string rational_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace detail {

inline int decimal_digits(const Int& x) {
  // length of the decimal expansion of |x|
  if (x == 0) return 1;
  Int a = abs(x);
  return static_cast<int>(a.str().size());
}

}  // namespace detail

// Decimal rendering with the requested number of significant digits, rounded
// to nearest. Uses fixed notation for exponents in [-4, digits), scientific
// otherwise, mirroring printf's %g.
inline std::string to_decimal(const Rat& x, int significant_digits) {
  if (significant_digits < 1) throw ParameterError("to_decimal: need at least one digit");
  if (x == 0) return "0";
  const bool neg = x < 0;
  Int num = abs(numerator(x));
  Int den = denominator(x);

  // Scale so the integer quotient carries a couple of guard digits.
  int shift = significant_digits + 2 + detail::decimal_digits(den) - detail::decimal_digits(num);
  Int scaled;
  if (shift >= 0)
    scaled = num * pow_int(10, static_cast<unsigned long>(shift)) / den;
  else
    scaled = num / (den * pow_int(10, static_cast<unsigned long>(-shift)));
  // exponent of the leading digit of x
  int exp10 = detail::decimal_digits(scaled) - 1 - shift;

  // Round to the requested number of digits.
  int drop = detail::decimal_digits(scaled) - significant_digits;
  Int rounded = scaled;
  if (drop > 0) {
    Int p = pow_int(10, static_cast<unsigned long>(drop));
    rounded = (scaled + p / 2) / p;
    if (detail::decimal_digits(rounded) > significant_digits) {
      rounded /= 10;
      ++exp10;
    }
  }
  std::string digits = rounded.str();

  std::string out;
  if (exp10 >= -4 && exp10 < significant_digits) {
    if (exp10 >= 0) {
      if (static_cast<int>(digits.size()) <= exp10) digits.append(exp10 + 1 - digits.size(), '0');
      out = digits.substr(0, exp10 + 1);
      if (digits.size() > static_cast<std::size_t>(exp10 + 1)) out += "." + digits.substr(exp10 + 1);
    } else {
      out = "0." + std::string(-exp10 - 1, '0') + digits;
    }
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::string(exp10 < 0 ? "-" : "+") + std::to_string(std::abs(exp10));
  }
  return neg ? "-" + out : out;
}

// Accepts "p/q", integers, decimals and scientific notation ("1e-12").
inline Rat parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError("cannot parse rational: '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    try {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (den == 0) fail();
      return Rat(num, den);
    } catch (const std::exception&) {
      fail();
    }
  }
  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string int_part, frac_part;
  long exp10 = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_part += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part += s[i++];
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    std::string es;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) es += s[i++];
    if (es.empty()) fail();
    exp10 = std::stol(es) * (eneg ? -1 : 1);
  }
  if (i != s.size() || (int_part.empty() && frac_part.empty())) fail();
  Int num(int_part.empty() ? "0" : int_part);
  num *= pow_int(10, frac_part.size());
  if (!frac_part.empty()) num += Int(frac_part);
  long net = exp10 - static_cast<long>(frac_part.size());
  Rat r(num);
  if (net > 0) r *= pow_int(10, static_cast<unsigned long>(net));
  if (net < 0) r /= pow_int(10, static_cast<unsigned long>(-net));
  return neg ? -r : r;
}

}  // namespace trackrate
