#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "trackrate/alphabet.hpp"
#include "trackrate/errors.hpp"

namespace trackrate {

namespace detail {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

private:
  std::vector<int> parent_;
};

// Endpoint symbols: 2e is the initial end of edge e, 2e+1 the terminal end.
inline int start_symbol(Letter l) { return l.sign > 0 ? 2 * l.edge : 2 * l.edge + 1; }
inline int end_symbol(Letter l) { return l.sign > 0 ? 2 * l.edge + 1 : 2 * l.edge; }

}  // namespace detail

// Finite graph over an edge alphabet. Vertices are 0..V-1; the alphabet
// supplies edge identity and order. Valence and connectivity are checked on
// demand, not at construction.
class Graph {
public:
  Graph(AlphabetPtr edges, int vertex_count, std::vector<int> init, std::vector<int> term)
      : edges_(std::move(edges)),
        vertex_count_(vertex_count),
        init_(std::move(init)),
        term_(std::move(term)) {
    if (!edges_) throw ParameterError("graph needs an edge alphabet");
    const auto m = static_cast<std::size_t>(edges_->size());
    if (init_.size() != m || term_.size() != m)
      throw ParameterError("incidence arrays must cover every edge");
    if (vertex_count_ <= 0) throw ParameterError("graph needs at least one vertex");
    for (std::size_t e = 0; e < m; ++e)
      if (init_[e] < 0 || init_[e] >= vertex_count_ || term_[e] < 0 || term_[e] >= vertex_count_)
        throw ParameterError("edge endpoint refers to a missing vertex");
  }

  static Graph rose(AlphabetPtr edges) {
    std::vector<int> zeros(static_cast<std::size_t>(edges->size()), 0);
    return Graph(std::move(edges), 1, zeros, zeros);
  }

  const AlphabetPtr& edges() const { return edges_; }
  int edge_count() const { return edges_->size(); }
  int vertex_count() const { return vertex_count_; }
  int init(int e) const { return init_.at(static_cast<std::size_t>(e)); }
  int term(int e) const { return term_.at(static_cast<std::size_t>(e)); }

  // Directions are oriented edge germs, based at the vertex the oriented
  // edge leaves: 2e for e read forward, 2e+1 for e read backward.
  int direction_count() const { return 2 * edge_count(); }
  static int direction_of(Letter l) { return 2 * l.edge + (l.sign > 0 ? 0 : 1); }
  static Letter letter_of_direction(int d) { return Letter{d / 2, d % 2 == 0 ? +1 : -1}; }
  static int reverse_direction(int d) { return d ^ 1; }

  int vertex_of_direction(int d) const {
    int e = d / 2;
    return d % 2 == 0 ? init(e) : term(e);
  }

  std::vector<int> directions_at(int v) const {
    std::vector<int> out;
    for (int d = 0; d < direction_count(); ++d)
      if (vertex_of_direction(d) == v) out.push_back(d);
    return out;
  }

  int valence(int v) const { return static_cast<int>(directions_at(v).size()); }

  std::vector<int> valence_multiset() const {
    std::vector<int> vals(static_cast<std::size_t>(vertex_count_), 0);
    for (int e = 0; e < edge_count(); ++e) {
      ++vals[static_cast<std::size_t>(init(e))];
      ++vals[static_cast<std::size_t>(term(e))];
    }
    std::sort(vals.begin(), vals.end());
    return vals;
  }

  bool connected() const {
    detail::UnionFind uf(vertex_count_);
    for (int e = 0; e < edge_count(); ++e) uf.unite(init(e), term(e));
    int root = uf.find(0);
    for (int v = 1; v < vertex_count_; ++v)
      if (uf.find(v) != root) return false;
    return true;
  }

  // rank of the fundamental group: E - V + 1 for a connected graph
  int rank() const { return edge_count() - vertex_count_ + 1; }

  bool is_path(const LetterSeq& w) const {
    check_letters(*edges_, w);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (endpoint(detail::end_symbol(w[i])) != endpoint(detail::start_symbol(w[i + 1]))) return false;
    return true;
  }

  bool is_closed_path(const LetterSeq& w) const {
    if (w.empty()) return true;
    return is_path(w) &&
           endpoint(detail::end_symbol(w.back())) == endpoint(detail::start_symbol(w.front()));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return same_alphabet(a.edges_, b.edges_) && a.vertex_count_ == b.vertex_count_ &&
           a.init_ == b.init_ && a.term_ == b.term_;
  }

private:
  int endpoint(int symbol) const {
    int e = symbol / 2;
    return symbol % 2 == 0 ? init(e) : term(e);
  }

  AlphabetPtr edges_;
  int vertex_count_;
  std::vector<int> init_, term_;
};

struct PathConstraint {
  LetterSeq letters;
  bool closed = false;
};

// Vertex set as the quotient of the 2E endpoint symbols by the finest
// equivalence that makes every constraint word a continuous edge path
// (closed where flagged). Unification only merges, so no constraint set is
// contradictory. Vertices are numbered by first appearance in symbol order.
inline Graph infer_graph(AlphabetPtr edges, const std::vector<PathConstraint>& constraints) {
  if (!edges || edges->size() == 0) throw ParameterError("infer_graph needs a nonempty edge list");
  const int symbols = 2 * edges->size();
  detail::UnionFind uf(symbols);
  for (const auto& c : constraints) {
    check_letters(*edges, c.letters);
    for (std::size_t i = 0; i + 1 < c.letters.size(); ++i)
      uf.unite(detail::end_symbol(c.letters[i]), detail::start_symbol(c.letters[i + 1]));
    if (c.closed && !c.letters.empty())
      uf.unite(detail::end_symbol(c.letters.back()), detail::start_symbol(c.letters.front()));
  }
  std::vector<int> id(static_cast<std::size_t>(symbols), -1);
  int next = 0;
  for (int s = 0; s < symbols; ++s) {
    int r = uf.find(s);
    if (id[static_cast<std::size_t>(r)] == -1) id[static_cast<std::size_t>(r)] = next++;
    id[static_cast<std::size_t>(s)] = id[static_cast<std::size_t>(r)];
  }
  std::vector<int> init, term;
  for (int e = 0; e < edges->size(); ++e) {
    init.push_back(id[static_cast<std::size_t>(2 * e)]);
    term.push_back(id[static_cast<std::size_t>(2 * e + 1)]);
  }
  return Graph(std::move(edges), next, std::move(init), std::move(term));
}

}  // namespace trackrate
