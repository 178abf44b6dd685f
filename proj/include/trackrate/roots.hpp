#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "trackrate/numeric.hpp"
#include "trackrate/polynomial.hpp"

namespace trackrate {

// Certified enclosure of a single real root: exact rational endpoints,
// lo <= hi, equal for an exactly known root.
struct RationalInterval {
  Rat lo, hi;

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  bool degenerate() const { return lo == hi; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }

  // Entirely below the other interval.
  bool strictly_below(const RationalInterval& other) const { return hi < other.lo; }
};

/// Sturm chain with primitive pseudo-remainders. Every element is a positive
/// rational multiple of the classical chain element, so sign variation
/// counts are unchanged while coefficients stay integral.
inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p.primitive_part());
  Polynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive_part());
  while (true) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    Polynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    chain.push_back((-r).primitive_part());
  }
  return chain;
}

namespace detail {

inline int sign_variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

inline int variations_at(const std::vector<Polynomial>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.sign_at(x));
  return sign_variations(signs);
}

// All roots z satisfy |z| < 1 + max|c_i| / |c_n|; rounded up to an integer.
inline Rat cauchy_bound(const Polynomial& p) {
  Int max_abs = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Int a = abs(p[i]);
    if (a > max_abs) max_abs = a;
  }
  Int lc = abs(p.leading());
  Int q = max_abs / lc + (max_abs % lc == 0 ? 0 : 1);
  return Rat(1 + q);
}

inline std::vector<Int> divisors(Int n) {
  std::vector<Int> out;
  n = abs(n);
  if (n == 0) return out;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Rational roots of p by the rational root theorem. Skipped for huge
// constant or leading coefficients; the scan only serves to report exactly
// rational roots as degenerate intervals.
inline std::vector<Rat> rational_roots(const Polynomial& p) {
  std::vector<Rat> out;
  if (p.degree() < 1) return out;
  const Int limit = Int(1000000);
  if (abs(p.leading()) > limit) return out;
  if (p[0] == 0) out.push_back(0);
  if (abs(p[0]) > limit) return out;
  for (const Int& num : divisors(p[0]))
    for (const Int& den : divisors(p.leading()))
      for (int s : {+1, -1}) {
        Rat cand(s * num, den);
        if (p.sign_at(cand) == 0 && std::find(out.begin(), out.end(), cand) == out.end())
          out.push_back(cand);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Number of distinct real roots of p in (a, b], for p nonzero at both
/// endpoints (Sturm's theorem; valid for non-squarefree p as well).
inline int count_roots(const std::vector<Polynomial>& chain, const Rat& a, const Rat& b) {
  return detail::variations_at(chain, a) - detail::variations_at(chain, b);
}

/// Certified enclosure of the largest real root of p in (search_from, oo).
///
/// Exactly rational roots are returned as degenerate intervals. Otherwise
/// the largest root is bracketed through Sturm counts, so it is isolated
/// even when p has several roots above search_from, then refined by exact
/// rational sign bisection to width <= tol. For a simple largest root the
/// returned endpoints carry opposite signs of the deflated polynomial.
inline RationalInterval perron_root(const Polynomial& p, const Rat& search_from, const Rat& tol) {
  if (p.is_zero()) throw ParameterError("perron_root needs a nonzero polynomial");
  if (tol <= 0) throw ParameterError("perron_root needs tol > 0");

  Polynomial q = p.primitive_part();
  std::vector<Rat> exact_roots;  // known exact roots above search_from
  auto note_exact = [&](const Rat& r) {
    if (r > search_from) exact_roots.push_back(r);
    while (q.degree() >= 1 && q.sign_at(r) == 0) q = q.deflate(r);
  };
  for (const Rat& r : detail::rational_roots(q)) note_exact(r);
  // make variation counts at the left endpoint safe
  if (q.degree() >= 1 && q.sign_at(search_from) == 0) note_exact(search_from);

  std::optional<RationalInterval> bracket;
  bool restart = true;
  while (restart && q.degree() >= 1) {
    restart = false;
    std::vector<Polynomial> chain = sturm_chain(q);
    Rat lo = search_from;
    Rat hi = detail::cauchy_bound(q);
    if (hi <= search_from) hi = search_from + 1;
    if (count_roots(chain, lo, hi) <= 0) break;

    // Narrow until the bracket holds exactly one distinct root: the largest.
    while (count_roots(chain, lo, hi) > 1) {
      Rat mid = (lo + hi) / 2;
      if (q.sign_at(mid) == 0) {  // bisection landed on an exact root
        note_exact(mid);
        restart = true;
        break;
      }
      if (count_roots(chain, mid, hi) >= 1)
        lo = mid;
      else
        hi = mid;
    }
    if (restart) continue;

    // Keep known exact roots outside the bracket so the maximum is decided.
    for (const Rat& r : exact_roots) {
      while (r > lo && r < hi) {
        Rat mid = (lo + hi) / 2;
        if (mid == r) mid = (lo + mid) / 2;
        if (q.sign_at(mid) == 0) {
          note_exact(mid);
          restart = true;
          break;
        }
        if (count_roots(chain, mid, hi) >= 1)
          lo = mid;
        else
          hi = mid;
      }
      if (restart) break;
    }
    if (restart) continue;

    // Refine. Sign bisection when the root changes sign, Sturm counts for
    // an even-multiplicity root.
    int sign_lo = q.sign_at(lo);
    int sign_hi = q.sign_at(hi);
    const bool sign_bracket = sign_lo != 0 && sign_hi != 0 && sign_lo != sign_hi;
    while (hi - lo > tol) {
      Rat mid = (lo + hi) / 2;
      int sm = q.sign_at(mid);
      if (sm == 0) {  // the isolated root itself
        lo = hi = mid;
        break;
      }
      if (sign_bracket ? (sm == sign_lo) : (count_roots(chain, mid, hi) >= 1))
        lo = mid;
      else
        hi = mid;
    }
    bracket = RationalInterval{lo, hi};
  }

  std::optional<Rat> best_exact;
  for (const Rat& r : exact_roots)
    if (!best_exact || r > *best_exact) best_exact = r;

  if (bracket) {
    if (best_exact && *best_exact >= bracket->hi) return {*best_exact, *best_exact};
    return *bracket;
  }
  if (best_exact) return {*best_exact, *best_exact};
  throw NoRootError("no real root above the search point");
}

}  // namespace trackrate
