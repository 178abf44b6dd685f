// Acceptance suite: end-to-end checks of the library's headline claims, one
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "trackrate/analysis.hpp"
#include "trackrate/io.hpp"

using namespace trackrate;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool charpoly_identity(std::string& detail) {
  for (int k = 1; k <= 12; ++k) {
    Polynomial from_matrix = char_poly(transition_matrix(brinkmann_family(k).map));
    if (!(from_matrix == closed_form_charpoly(k))) {
      detail = "mismatch at k = " + std::to_string(k);
      return false;
    }
  }
  detail = "k = 1..12 bit-exact";
  return true;
}

bool proof_obligations(std::string& detail) {
  for (int k = 1; k <= 12; ++k) {
    Family f = brinkmann_family(k);
    if (!f.map.validate().ok()) {
      detail = "validation failed at k = " + std::to_string(k);
      return false;
    }
    if (!f.map.is_train_track()) {
      detail = "not a train track map at k = " + std::to_string(k);
      return false;
    }
    if (!is_primitive(transition_matrix(f.map))) {
      detail = "transition matrix not primitive at k = " + std::to_string(k);
      return false;
    }
    if (!verify_sigma_invariance(f.map, *f.boundary).ok) {
      detail = "boundary loop not preserved at k = " + std::to_string(k);
      return false;
    }
  }
  detail = "train track + primitive + boundary invariance, k = 1..12";
  return true;
}

std::vector<GrowthRecord> tabulated_growth() {
  static std::vector<GrowthRecord> cached =
      growth_table({1, 2, 4, 8, 16, 32, 64}, parse_rational("1e-12"));
  return cached;
}

bool convergence(std::string& detail) {
  auto records = tabulated_growth();
  const auto& first = records.front().enclosure;
  if (!(first.lo >= parse_rational("2.01") && first.hi <= parse_rational("2.02"))) {
    detail = "lambda_1 enclosure outside [2.01, 2.02]";
    return false;
  }
  for (const auto& rec : records)
    if (rec.enclosure.width() > parse_rational("1e-12")) {
      detail = "enclosure wider than 1e-12 at k = " + std::to_string(rec.k);
      return false;
    }
  for (std::size_t i = 0; i + 1 < records.size(); ++i)
    if (!records[i + 1].enclosure.strictly_below(records[i].enclosure)) {
      detail = "intervals not strictly decreasing between k = " +
               std::to_string(records[i].k) + " and k = " + std::to_string(records[i + 1].k);
      return false;
    }
  if (!(records.back().enclosure.hi < parse_rational("1.05"))) {
    detail = "lambda_64 not below 1.05";
    return false;
  }
  detail = "k in {1,2,4,8,16,32,64} strictly decreasing; lambda_64 in " +
           interval_string(records.back().enclosure, 8);
  return true;
}

bool residual_and_inequality(std::string& detail) {
  for (const auto& rec : tabulated_growth()) {
    bool sign_change = rec.enclosure.degenerate()
                           ? (rec.eq2_sign_lo == 0)
                           : (rec.eq2_sign_lo * rec.eq2_sign_hi < 0);
    if (!sign_change) {
      detail = "no residual sign change across the enclosure at k = " + std::to_string(rec.k);
      return false;
    }
    if (!rec.ineq3_ok) {
      detail = "growth inequality fails at the lower endpoint for k = " + std::to_string(rec.k);
      return false;
    }
  }
  detail = "residual brackets zero and the inequality holds for every tabulated k";
  return true;
}

bool index_tables(std::string& detail) {
  for (int k = 1; k <= 12; ++k) {
    IndexTable table = singularity_indices(brinkmann_family(k).map);
    int regular = 0, singular = 0;
    for (const auto& row : table.rows) {
      if (row.index == 0)
        ++regular;
      else if (row.index == Rat(1, 2) - k)
        ++singular;
      else {
        detail = "unexpected index " + rational_string(row.index) + " at k = " + std::to_string(k);
        return false;
      }
    }
    if (regular != 1 || singular != 4) {
      detail = "index multiplicities off at k = " + std::to_string(k);
      return false;
    }
    if (!index_sum_check(table, 2 * k)) {
      detail = "index sum differs from 2 - 4k at k = " + std::to_string(k);
      return false;
    }
  }
  detail = "four vertices of index 1/2 - k, one regular, sum 2 - 4k, k = 1..12";
  return true;
}

bool genus_values(std::string& detail) {
  for (int k = 1; k <= 12; ++k) {
    GenusResult r = genus_and_puncture(brinkmann_family(k).map.graph());
    if (!r.genus || *r.genus != 2 * k) {
      detail = "main family genus differs from 2k at k = " + std::to_string(k);
      return false;
    }
  }
  for (int g = 1; g <= 8; ++g) {
    GenusResult r = genus_and_puncture(periodic_family(g).map.graph());
    if (!r.genus || *r.genus != g) {
      detail = "periodic family genus differs from g at g = " + std::to_string(g);
      return false;
    }
  }
  detail = "genus 2k for k = 1..12 and g for g = 1..8";
  return true;
}

bool comparison_families(std::string& detail) {
  RationalInterval previous;
  for (int n = 2; n <= 8; ++n) {
    Family f = pv_family(n);
    Polynomial chi = char_poly(transition_matrix(f.map));
    Polynomial expected = Polynomial::monomial(1, n + 1) - Polynomial({Int(1), Int(1)});
    if (!(chi == expected)) {
      detail = "pv characteristic polynomial differs at n = " + std::to_string(n);
      return false;
    }
    RationalInterval growth = perron_root(chi, 1, parse_rational("1e-12"));
    if (n > 2 && !growth.strictly_below(previous)) {
      detail = "pv growth not strictly decreasing at n = " + std::to_string(n);
      return false;
    }
    previous = growth;
  }
  for (int g = 1; g <= 4; ++g) {
    Family f = periodic_family(g);
    IntMatrix M = transition_matrix(f.map);
    for (int j = 0; j < M.cols(); ++j) {
      Int col = 0, row = 0;
      for (int i = 0; i < M.rows(); ++i) {
        col += M(i, j);
        row += M(j, i);
      }
      if (col != 1 || row != 1) {
        detail = "periodic transition matrix is not a permutation at g = " + std::to_string(g);
        return false;
      }
    }
    RationalInterval growth = perron_root(char_poly(M), Rat(1, 2), parse_rational("1e-12"));
    if (!(growth.lo == 1 && growth.hi == 1)) {
      detail = "periodic growth differs from 1 at g = " + std::to_string(g);
      return false;
    }
    if (!(f.map.iterate(4 * g + 2) == GraphMap::identity(f.map.graph()))) {
      detail = "periodic map order differs from 4g + 2 at g = " + std::to_string(g);
      return false;
    }
  }
  detail = "pv polynomials and decreasing growth, n = 2..8; periodic order 4g + 2, g = 1..4";
  return true;
}

bool property_suites(std::string& detail) {
  // word laws on random input
  AlphabetPtr ab = Alphabet::make({"a", "b", "c", "d", "e"});
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<int> edge(0, ab->size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> length(0, 32);
  auto random_raw = [&] {
    LetterSeq raw;
    int n = length(rng);
    for (int i = 0; i < n; ++i) raw.push_back(Letter{edge(rng), sign(rng) ? 1 : -1});
    return raw;
  };
  for (int trial = 0; trial < 10000; ++trial) {
    LetterSeq raw = random_raw();
    Word w = Word::tighten(ab, raw);
    if (!(Word::tighten(ab, w.letters()) == w)) {
      detail = "tighten is not idempotent";
      return false;
    }
    if (!(w * w.inverse()).empty()) {
      detail = "w * w^-1 does not cancel";
      return false;
    }
    Word u = Word::tighten(ab, random_raw());
    if ((w * u).size() > w.size() + u.size()) {
      detail = "concatenation grew beyond |u| + |v|";
      return false;
    }
  }

  // palindromicity and exact (x-1)^2 divisibility
  Polynomial square({Int(1), Int(-2), Int(1)});
  for (int k = 1; k <= 12; ++k) {
    Polynomial chi = closed_form_charpoly(k);
    if (!chi.is_palindromic()) {
      detail = "characteristic polynomial not palindromic at k = " + std::to_string(k);
      return false;
    }
    auto [quotient, remainder] = chi.divide_by_monic(square);
    if (!remainder.is_zero() || quotient.sign_at(1) == 0) {
      detail = "(x-1)^2 does not divide exactly (or divides thrice) at k = " + std::to_string(k);
      return false;
    }
  }

  // abelianized determinant of every generated map is a unit
  std::vector<GraphMap> generated;
  for (int k = 1; k <= 8; ++k) generated.push_back(brinkmann_family(k).map);
  for (int g = 1; g <= 6; ++g) generated.push_back(periodic_family(g).map);
  for (int n = 2; n <= 8; ++n) generated.push_back(pv_family(n).map);
  for (const auto& map : generated) {
    Int det = determinant(signed_transition_matrix(map));
    if (det != 1 && det != -1) {
      detail = "abelianized determinant " + det.str() + " is not a unit";
      return false;
    }
  }

  // float cross check against the certified enclosures
  for (int k = 1; k <= 12; ++k) {
    IntMatrix M = transition_matrix(brinkmann_family(k).map);
    RationalInterval iv = perron_root(char_poly(M), 1, parse_rational("1e-12"));
    double estimate = power_iteration_estimate(M, 50 * M.rows());
    double mid = std::stod(to_decimal(iv.midpoint(), 17));
    if (std::abs(estimate - mid) >= 1e-6) {
      detail = "power iteration off by " + std::to_string(std::abs(estimate - mid)) +
               " at k = " + std::to_string(k);
      return false;
    }
  }

  detail = "word laws x 10^4, palindromic + (x-1)^2 division, unit determinants, float agreement";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"characteristic polynomial identity", charpoly_identity},
      {"train track, primitivity and boundary invariance", proof_obligations},
      {"certified growth enclosures decrease toward 1", convergence},
      {"residual sign change and growth inequality", residual_and_inequality},
      {"singularity index tables", index_tables},
      {"genus of both graph families", genus_values},
      {"comparison families", comparison_families},
      {"property suites", property_suites},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].name
              << " (" << detail << ") [" << ms << " ms]\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
