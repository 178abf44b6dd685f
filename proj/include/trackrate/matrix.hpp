#pragma once

#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "trackrate/graph_map.hpp"
#include "trackrate/polynomial.hpp"

namespace trackrate {

// Dense square-or-rectangular matrix; used with exact integers on every
// certified path.
template <class T>
class Matrix {
public:
  Matrix(int rows, int cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows <= 0 || cols <= 0) throw ParameterError("matrix needs positive dimensions");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ParameterError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix pow(unsigned long e) const {
    if (!square()) throw ParameterError("matrix power needs a square matrix");
    Matrix r = identity(rows_);
    Matrix b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool entrywise_positive() const {
    for (const T& x : data_)
      if (!(x > T(0))) return false;
    return true;
  }

  bool nonnegative() const {
    for (const T& x : data_)
      if (x < T(0)) return false;
    return true;
  }

  std::vector<T> column_sums() const {
    std::vector<T> s(static_cast<std::size_t>(cols_), T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) s[static_cast<std::size_t>(j)] += (*this)(i, j);
    return s;
  }

private:
  int rows_, cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;

// Entry (i, j): number of times the image of edge j crosses edge i,
// regardless of orientation. Column sums equal image word lengths.
inline IntMatrix transition_matrix(const GraphMap& map) {
  const int m = map.graph().edge_count();
  IntMatrix M(m, m);
  for (int j = 0; j < m; ++j)
    for (Letter l : map.image(j)) M(l.edge, j) += 1;
  return M;
}

// Orientation-weighted crossing counts; the abelianization of the map.
inline IntMatrix signed_transition_matrix(const GraphMap& map) {
  const int m = map.graph().edge_count();
  IntMatrix M(m, m);
  for (int j = 0; j < m; ++j)
    for (Letter l : map.image(j)) M(l.edge, j) += l.sign;
  return M;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& a) {
  if (!a.square()) throw ParameterError("determinant needs a square matrix");
  const int n = a.rows();
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot == -1) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

namespace detail {

// Strongly connected component count of the digraph with an arc j -> i for
// every positive entry M(i, j), plus cycle-length gcd (the period).
struct DigraphStructure {
  bool strongly_connected = false;
  unsigned long period = 0;  // gcd of cycle lengths; 0 when there is no cycle
};

inline DigraphStructure digraph_structure(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) > 0) {
        out[static_cast<std::size_t>(j)].push_back(i);
        in[static_cast<std::size_t>(i)].push_back(j);
      }
  auto reach = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    for (char s : seen)
      if (!s) return false;
    return true;
  };
  DigraphStructure res;
  res.strongly_connected = reach(out) && reach(in);
  if (!res.strongly_connected) return res;

  // BFS levels from node 0; period = gcd over arcs of level(u) + 1 - level(v).
  std::vector<long> level(static_cast<std::size_t>(n), -1);
  std::vector<int> queue{0};
  level[0] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int v : out[static_cast<std::size_t>(u)])
      if (level[static_cast<std::size_t>(v)] == -1) {
        level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  unsigned long g = 0;
  for (int u = 0; u < n; ++u)
    for (int v : out[static_cast<std::size_t>(u)]) {
      long diff = level[static_cast<std::size_t>(u)] + 1 - level[static_cast<std::size_t>(v)];
      g = std::gcd(g, static_cast<unsigned long>(diff < 0 ? -diff : diff));
    }
  res.period = g;
  return res;
}

}  // namespace detail

// Irreducible: for every (i, j) some power has positive (i, j) entry,
// equivalently the associated digraph is strongly connected. A 1x1 zero
// matrix is reducible.
inline bool is_irreducible(const IntMatrix& m) {
  if (!m.square()) throw ParameterError("irreducibility needs a square matrix");
  if (!m.nonnegative()) throw ParameterError("irreducibility needs a nonnegative matrix");
  if (m.rows() == 1) return m(0, 0) > 0;
  return detail::digraph_structure(m).strongly_connected;
}

// Primitive: irreducible with cycle-length gcd 1; equivalently every
// positive power is irreducible.
inline bool is_primitive(const IntMatrix& m) {
  if (!m.square()) throw ParameterError("primitivity needs a square matrix");
  if (!m.nonnegative()) throw ParameterError("primitivity needs a nonnegative matrix");
  if (m.rows() == 1) return m(0, 0) > 0;
  auto s = detail::digraph_structure(m);
  return s.strongly_connected && s.period == 1;
}

// Wielandt bound: M is primitive iff M^(n^2 - 2n + 2) is entrywise positive.
// Used as an independent cross check on small matrices.
inline bool wielandt_primitive(const IntMatrix& m) {
  if (!m.square()) throw ParameterError("primitivity needs a square matrix");
  const unsigned long n = static_cast<unsigned long>(m.rows());
  return m.pow(n * n - 2 * n + 2).entrywise_positive();
}

// Characteristic polynomial det(xI - M) by the Berkowitz algorithm:
// division free, exact, monic of degree n.
inline Polynomial char_poly(const IntMatrix& m) {
  if (!m.square()) throw ParameterError("characteristic polynomial needs a square matrix");
  const int n = m.rows();
  // coefficients stored highest power first during the sweep
  std::vector<Int> p{Int(1)};
  for (int r = 1; r <= n; ++r) {
    // Toeplitz column for the r-th leading principal block
    std::vector<Int> q(static_cast<std::size_t>(r) + 1);
    q[0] = 1;
    q[1] = -m(r - 1, r - 1);
    if (r >= 2) {
      std::vector<Int> w(static_cast<std::size_t>(r - 1));
      for (int i = 0; i < r - 1; ++i) w[static_cast<std::size_t>(i)] = m(i, r - 1);
      for (int j = 2; j <= r; ++j) {
        Int dot = 0;
        for (int i = 0; i < r - 1; ++i) dot += m(r - 1, i) * w[static_cast<std::size_t>(i)];
        q[static_cast<std::size_t>(j)] = -dot;
        if (j < r) {
          std::vector<Int> w2(static_cast<std::size_t>(r - 1), Int(0));
          for (int i = 0; i < r - 1; ++i) {
            if (w[static_cast<std::size_t>(i)] == 0) continue;
            for (int k = 0; k < r - 1; ++k)
              w2[static_cast<std::size_t>(k)] += m(k, i) * w[static_cast<std::size_t>(i)];
          }
          w.swap(w2);
        }
      }
    }
    std::vector<Int> next(static_cast<std::size_t>(r) + 1, Int(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j <= i && j < q.size(); ++j)
        if (i - j < p.size()) next[i] += q[j] * p[i - j];
    p.swap(next);
  }
  std::vector<Int> ascending(p.rbegin(), p.rend());
  return Polynomial(std::move(ascending));
}

// Column-sum bracket for the Perron-Frobenius eigenvalue of an irreducible
// nonnegative matrix.
inline std::pair<Int, Int> pf_bounds(const IntMatrix& m) {
  if (!is_irreducible(m)) throw PreconditionError("pf_bounds needs an irreducible matrix");
  auto sums = m.column_sums();
  auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
  return {*lo, *hi};
}

// Floating-point cross check of the dominant eigenvalue; the only
// non-exact computation in the library.
inline double power_iteration_estimate(const IntMatrix& m, int iterations) {
  const int n = m.rows();
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        static_cast<double>(m(i, j));
  std::vector<double> v(static_cast<std::size_t>(n), 1.0);
  double estimate = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        w[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                          v[static_cast<std::size_t>(j)];
    double norm_w = 0.0, norm_v = 0.0;
    for (int i = 0; i < n; ++i) {
      norm_w += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
      norm_v += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    }
    estimate = std::sqrt(norm_w / norm_v);
    double scale = std::sqrt(norm_w);
    if (scale == 0.0) return 0.0;
    for (auto& x : w) x /= scale;
    v.swap(w);
  }
  return estimate;
}

}  // namespace trackrate
