#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trackrate/numeric.hpp"

namespace trackrate {

// Dense univariate polynomial with exact integer coefficients, stored
// constant term first. The zero polynomial has no coefficients; otherwise
// the leading coefficient is nonzero.
class Polynomial {
public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(Int v) { return Polynomial({std::move(v)}); }

  static Polynomial monomial(Int coeff, int degree) {
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1, Int(0));
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Int>& coefficients() const { return c_; }

  const Int& operator[](int i) const {
    static const Int zero{0};
    if (i < 0 || i > degree()) return zero;
    return c_[static_cast<std::size_t>(i)];
  }

  const Int& leading() const {
    if (is_zero()) throw ParameterError("zero polynomial has no leading coefficient");
    return c_.back();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  Polynomial operator-() const {
    std::vector<Int> c = c_;
    for (auto& x : c) x = -x;
    Polynomial p;
    p.c_ = std::move(c);
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Int& s) {
    std::vector<Int> c = a.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(i);
    return Polynomial(std::move(c));
  }

  Rat evaluate(const Rat& x) const {
    // homogeneous integer Horner; exact
    if (is_zero()) return 0;
    const Int& u = numerator(x);
    const Int& v = denominator(x);
    Int acc = c_.back(), vp = 1;
    for (int i = degree() - 1; i >= 0; --i) {
      vp *= v;
      acc = acc * u + c_[static_cast<std::size_t>(i)] * vp;
    }
    return Rat(acc, pow_int(v, static_cast<unsigned long>(degree())));
  }

  int sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    const Int& u = numerator(x);
    const Int& v = denominator(x);
    Int acc = c_.back(), vp = 1;
    for (int i = degree() - 1; i >= 0; --i) {
      vp *= v;
      acc = acc * u + c_[static_cast<std::size_t>(i)] * vp;
    }
    return acc.sign();
  }

  Int content() const {
    Int g = 0;
    for (const Int& x : c_) {
      g = boost::multiprecision::gcd(g, x);
      if (g == 1) break;
    }
    return g;
  }

  // content stripped, sign of the leading coefficient kept
  Polynomial primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    std::vector<Int> c = c_;
    for (auto& x : c) x /= g;
    return Polynomial(std::move(c));
  }

  // Quotient and remainder for a monic divisor; exact over the integers.
  std::pair<Polynomial, Polynomial> divide_by_monic(const Polynomial& d) const {
    if (d.is_zero() || d.leading() != 1) throw ParameterError("divisor must be monic");
    std::vector<Int> rem = c_;
    std::vector<Int> quo(rem.size() > d.c_.size() - 1 ? rem.size() - d.c_.size() + 1 : 0, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= d.degree(); --i) {
      Int f = rem[static_cast<std::size_t>(i)];
      if (f == 0) continue;
      quo[static_cast<std::size_t>(i - d.degree())] = f;
      for (int j = 0; j <= d.degree(); ++j)
        rem[static_cast<std::size_t>(i - d.degree() + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  bool divisible_by(const Polynomial& d) const {
    if (d.is_zero()) return is_zero();
    if (d.leading() == 1) return divide_by_monic(d).second.is_zero();
    // pseudo-division test for non-monic divisors
    Polynomial r = pseudo_remainder(*this, d);
    return r.is_zero();
  }

  // Pseudo-remainder scaled by a positive power of |lc(d)|, so signs agree
  // with the rational remainder up to a positive factor.
  friend Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& d) {
    if (d.is_zero()) throw ParameterError("pseudo-division by zero");
    Polynomial r = a;
    const Int lc_abs = abs(d.leading());
    const int lc_sign = d.leading().sign();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const Int s = r.leading();
      const int shift = r.degree() - d.degree();
      std::vector<Int> c(r.c_.size(), Int(0));
      for (std::size_t i = 0; i < r.c_.size(); ++i) c[i] = r.c_[i] * lc_abs;
      for (int j = 0; j <= d.degree(); ++j)
        c[static_cast<std::size_t>(shift + j)] -= s * lc_sign * d.c_[static_cast<std::size_t>(j)];
      r = Polynomial(std::move(c));
      if (!r.is_zero() && r.degree() >= a.degree()) throw InternalError("pseudo-division stalled");
    }
    return r;
  }

  bool is_palindromic() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return r == c_;
  }

  // Exact deflation by (x - r) for a verified rational root r.
  Polynomial deflate(const Rat& root) const {
    const Int& u = numerator(root);
    const Int& v = denominator(root);
    // self = (v x - u) * q with integer q when root is a root (Gauss)
    std::vector<Int> q(c_.size() - 1, Int(0));
    Int carry = 0;  // running remainder coefficient
    for (int i = static_cast<int>(c_.size()) - 1; i >= 1; --i) {
      Int top = c_[static_cast<std::size_t>(i)] + carry;
      if (top % v != 0) throw InternalError("deflation by a non-root");
      q[static_cast<std::size_t>(i - 1)] = top / v;
      carry = q[static_cast<std::size_t>(i - 1)] * u;
    }
    if (c_[0] + carry != 0) throw InternalError("deflation by a non-root");
    return Polynomial(std::move(q));
  }

  // Coefficient list, constant term first, comma separated.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ',';
      out += c_[i].str();
    }
    return out;
  }

  static Polynomial parse(std::string_view text) {
    std::vector<Int> c;
    std::size_t i = 0;
    while (i <= text.size()) {
      std::size_t j = text.find(',', i);
      if (j == std::string_view::npos) j = text.size();
      std::string token(text.substr(i, j - i));
      token.erase(std::remove_if(token.begin(), token.end(),
                                 [](unsigned char ch) { return std::isspace(ch); }),
                  token.end());
      if (token.empty()) throw ParseError("empty coefficient in polynomial text");
      try {
        c.emplace_back(token);
      } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + token + "'");
      }
      i = j + 1;
      if (j == text.size()) break;
    }
    return Polynomial(std::move(c));
  }

private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

}  // namespace trackrate
