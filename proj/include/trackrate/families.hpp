#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trackrate/graph_map.hpp"
#include "trackrate/polynomial.hpp"

namespace trackrate {

struct Family {
  GraphMap map;
  std::optional<CyclicWord> boundary;  // loop crossing each edge twice, when the map carries one
};

// Main sequence: a graph self-map on 4k+4 edges {a, b, c, d, x0..x(2k-1),
// y0..y(2k-1)} whose growth rates decrease toward 1, together with its
// boundary loop sigma_k. The carrier graph is never hard coded; it is forced
// by the image words and the closed boundary loop.
inline Family brinkmann_family(int k) {
  if (k < 1) throw ParameterError("brinkmann family needs k >= 1");
  std::vector<std::string> names = {"a", "b", "c", "d"};
  for (int i = 0; i < 2 * k; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 0; i < 2 * k; ++i) names.push_back("y" + std::to_string(i));
  AlphabetPtr ab = Alphabet::make(std::move(names));

  const int a = 0, b = 1, c = 2, d = 3;
  auto x = [&](int i) { return 4 + i; };
  auto y = [&](int i) { return 4 + 2 * k + i; };
  auto P = [](int e) { return Letter{e, +1}; };
  auto N = [](int e) { return Letter{e, -1}; };

  std::vector<LetterSeq> img(static_cast<std::size_t>(ab->size()));
  img[a] = {P(a), P(x(0)), P(y(0))};
  img[b] = {P(b), N(y(0)), N(x(0))};
  img[c] = {P(d)};
  img[d] = {P(d), P(y(1)), P(x(0))};
  for (int i = 0; i + 1 < 2 * k; ++i) img[static_cast<std::size_t>(x(i))] = {P(x(i + 1))};
  img[static_cast<std::size_t>(x(2 * k - 1))] = {N(a), P(b), N(y(0))};
  for (int i = 0; i + 1 < 2 * k; ++i) img[static_cast<std::size_t>(y(i))] = {P(y(i + 1))};
  img[static_cast<std::size_t>(y(2 * k - 1))] = {N(c), P(b)};

  LetterSeq sigma;
  for (int i = 0; i < 2 * k; ++i) {
    sigma.push_back(P(x(i)));
    sigma.push_back(P(y(i)));
  }
  sigma.insert(sigma.end(), {N(a), P(b), N(y(0)), N(c), P(d)});
  sigma.insert(sigma.end(), {N(x(2 * k - 1)), N(b), P(c)});
  // descending interleaved tail; a single pair x0^-1 y1^-1 at k = 1
  for (int j = 0; j <= 2 * k - 2; ++j) {
    sigma.push_back(N(x(2 * k - 2 - j)));
    sigma.push_back(N(y(2 * k - 1 - j)));
  }
  sigma.insert(sigma.end(), {N(d), P(a)});

  GraphMap map = GraphMap::from_words(ab, std::move(img), {sigma});
  CyclicWord boundary = CyclicWord::from_word(Word::tighten(ab, sigma));
  return {std::move(map), std::move(boundary)};
}

// Periodic comparison family on edges x0..x(2g): the map cyclically
// permutes the edges (with one orientation flip) and has growth rate 1.
inline Family periodic_family(int g) {
  if (g < 1) throw ParameterError("periodic family needs g >= 1");
  std::vector<std::string> names;
  for (int i = 0; i <= 2 * g; ++i) names.push_back("x" + std::to_string(i));
  AlphabetPtr ab = Alphabet::make(std::move(names));

  std::vector<LetterSeq> img(static_cast<std::size_t>(ab->size()));
  for (int i = 0; i < 2 * g; ++i) img[static_cast<std::size_t>(i)] = {Letter{i + 1, +1}};
  img[static_cast<std::size_t>(2 * g)] = {Letter{0, -1}};

  LetterSeq sigma;
  for (int i = 0; i <= 2 * g; ++i) sigma.push_back(Letter{i, +1});
  for (int i = 0; i <= 2 * g; ++i) sigma.push_back(Letter{i, -1});

  GraphMap map = GraphMap::from_words(ab, std::move(img), {sigma});
  CyclicWord boundary = CyclicWord::from_word(Word::tighten(ab, sigma));
  return {std::move(map), std::move(boundary)};
}

// Pisot-style comparison automorphisms on a rose with edges y0..yn. The
// maps are nongeometric; there is no boundary loop.
inline Family pv_family(int n) {
  if (n < 2) throw ParameterError("pv family needs n >= 2");
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("y" + std::to_string(i));
  AlphabetPtr ab = Alphabet::make(std::move(names));

  std::vector<LetterSeq> img(static_cast<std::size_t>(ab->size()));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = {Letter{i + 1, +1}};
  img[static_cast<std::size_t>(n)] = {Letter{0, +1}, Letter{1, +1}};

  GraphMap map = GraphMap::from_words(ab, std::move(img), {});
  return {std::move(map), std::nullopt};
}

// Degree 4k+2 factor of the characteristic polynomial:
// x^(4k+2) - x^(4k+1) - 4 x^(2k+1) - x + 1.
inline Polynomial brinkmann_growth_factor(int k) {
  if (k < 1) throw ParameterError("growth factor needs k >= 1");
  std::vector<Int> c(static_cast<std::size_t>(4 * k + 3), Int(0));
  c[static_cast<std::size_t>(4 * k + 2)] = 1;
  c[static_cast<std::size_t>(4 * k + 1)] = -1;
  c[static_cast<std::size_t>(2 * k + 1)] = -4;
  c[1] = -1;
  c[0] = 1;
  return Polynomial(std::move(c));
}

// (x - 1)^2 * (x^(4k+2) - x^(4k+1) - 4 x^(2k+1) - x + 1), degree 4k+4.
inline Polynomial closed_form_charpoly(int k) {
  Polynomial square_factor({Int(1), Int(-2), Int(1)});  // (x-1)^2
  return square_factor * brinkmann_growth_factor(k);
}

// Exact recognition of the main family: matching edge-name set and images.
// Uses names, so the document's edge order need not match the generator's.
inline std::optional<int> recognize_brinkmann(const GraphMap& map) {
  const int edges = map.graph().edge_count();
  if (edges < 8 || (edges - 4) % 4 != 0) return std::nullopt;
  const int k = (edges - 4) / 4;
  Family reference = brinkmann_family(k);
  const Alphabet& ra = *reference.map.alphabet();
  const Alphabet& ma = *map.alphabet();
  std::vector<int> to_map(static_cast<std::size_t>(edges));
  for (int e = 0; e < edges; ++e) {
    auto idx = ma.index_of(ra.name(e));
    if (!idx) return std::nullopt;
    to_map[static_cast<std::size_t>(e)] = *idx;
  }
  for (int e = 0; e < edges; ++e) {
    const LetterSeq& ref = reference.map.image(e);
    const LetterSeq& got = map.image(to_map[static_cast<std::size_t>(e)]);
    if (ref.size() != got.size()) return std::nullopt;
    for (std::size_t i = 0; i < ref.size(); ++i)
      if (got[i].sign != ref[i].sign ||
          got[i].edge != to_map[static_cast<std::size_t>(ref[i].edge)])
        return std::nullopt;
  }
  return k;
}

}  // namespace trackrate
