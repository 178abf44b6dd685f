#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trackrate/graph.hpp"
#include "trackrate/word.hpp"

namespace trackrate {

// Unordered pair of directions at a common vertex. Degenerate when the two
// directions coincide.
struct Turn {
  int a = 0, b = 0;

  Turn() = default;
  Turn(int d1, int d2) : a(std::min(d1, d2)), b(std::max(d1, d2)) {}

  bool degenerate() const { return a == b; }

  friend auto operator<=>(const Turn&, const Turn&) = default;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct TrainTrackFailure {
  int edge = 0;       // edge whose iterated image backtracks
  int iterate = 0;    // smallest n with a backtrack in the n-th image
  Turn turn;          // the degenerate turn
};

struct TakenTurn {
  Turn turn;
  Turn image;           // turn after one application of the derivative map
  bool periodic = false;
};

struct TrainTrackCertificate {
  bool ok = false;
  std::optional<TrainTrackFailure> failure;
  std::vector<TakenTurn> taken_closure;  // all turns crossed by any iterated image
};

// Graph self-map given by edge images. Images are stored exactly as
// provided; free reduction of every image is a validation check, not a
// construction-time rewrite, so maps with back-tracking images can be
// represented and rejected by the train track test.
class GraphMap {
public:
  GraphMap(Graph graph, std::vector<LetterSeq> images)
      : graph_(std::move(graph)), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(graph_.edge_count()))
      throw ParameterError("graph map needs one image per edge");
    for (const auto& img : images_) check_letters(*graph_.edges(), img);
  }

  // Builds the carrier graph from the images (plus closed loops) alone:
  // endpoint unification first, then the extra merges that make the induced
  // vertex map well defined.
  static GraphMap from_words(AlphabetPtr edges, std::vector<LetterSeq> images,
                             const std::vector<LetterSeq>& closed_loops) {
    if (!edges || edges->size() == 0) throw ParameterError("from_words needs a nonempty edge list");
    if (images.size() != static_cast<std::size_t>(edges->size()))
      throw ParameterError("from_words needs one image per edge");
    const int symbols = 2 * edges->size();
    detail::UnionFind uf(symbols);
    auto add_path = [&](const LetterSeq& w, bool closed) {
      check_letters(*edges, w);
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        uf.unite(detail::end_symbol(w[i]), detail::start_symbol(w[i + 1]));
      if (closed && !w.empty())
        uf.unite(detail::end_symbol(w.back()), detail::start_symbol(w.front()));
    };
    for (const auto& img : images) add_path(img, false);
    for (const auto& loop : closed_loops) add_path(loop, true);

    // Congruence closure: if two endpoint symbols are identified, their
    // images under the induced vertex map must be identified as well.
    bool have_h = true;
    std::vector<int> h(static_cast<std::size_t>(symbols), 0);
    for (int e = 0; e < edges->size() && have_h; ++e) {
      if (images[static_cast<std::size_t>(e)].empty()) {
        have_h = false;  // vertex map not derivable; validate reports it
        break;
      }
      h[static_cast<std::size_t>(2 * e)] = detail::start_symbol(images[static_cast<std::size_t>(e)].front());
      h[static_cast<std::size_t>(2 * e + 1)] = detail::end_symbol(images[static_cast<std::size_t>(e)].back());
    }
    if (have_h) {
      bool changed = true;
      while (changed) {
        changed = false;
        std::map<int, int> image_of_class;
        for (int s = 0; s < symbols; ++s) {
          int r = uf.find(s);
          int hr = uf.find(h[static_cast<std::size_t>(s)]);
          auto [it, inserted] = image_of_class.emplace(r, hr);
          if (!inserted && uf.find(it->second) != hr) {
            uf.unite(it->second, hr);
            changed = true;
          }
        }
      }
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
    Graph graph(edges, next, std::move(init), std::move(term));
    return GraphMap(std::move(graph), std::move(images));
  }

  const Graph& graph() const { return graph_; }
  const AlphabetPtr& alphabet() const { return graph_.edges(); }
  const LetterSeq& image(int edge) const { return images_.at(static_cast<std::size_t>(edge)); }
  const std::vector<LetterSeq>& images() const { return images_; }

  EdgeMorphism morphism() const {
    std::vector<std::optional<Word>> imgs;
    imgs.reserve(images_.size());
    for (const auto& img : images_) imgs.push_back(Word::tighten(alphabet(), img));
    return EdgeMorphism(alphabet(), std::move(imgs));
  }

  static GraphMap identity(Graph graph) {
    std::vector<LetterSeq> images;
    for (int e = 0; e < graph.edge_count(); ++e) images.push_back({Letter{e, +1}});
    return GraphMap(std::move(graph), std::move(images));
  }

  // Induced vertex map, or nullopt when it is not well defined (or an image
  // is empty).
  std::optional<std::vector<int>> vertex_images() const {
    std::vector<int> vmap(static_cast<std::size_t>(graph_.vertex_count()), -1);
    for (int e = 0; e < graph_.edge_count(); ++e) {
      const auto& img = images_[static_cast<std::size_t>(e)];
      if (img.empty()) return std::nullopt;
      int from_init = endpoint_vertex(detail::start_symbol(img.front()));
      int from_term = endpoint_vertex(detail::end_symbol(img.back()));
      if (!assign(vmap, graph_.init(e), from_init)) return std::nullopt;
      if (!assign(vmap, graph_.term(e), from_term)) return std::nullopt;
    }
    for (int v : vmap)
      if (v == -1) return std::nullopt;  // isolated vertex; cannot happen with valence checks
    return vmap;
  }

  ValidationReport validate() const {
    ValidationReport report;
    bool nonempty = true, reduced = true, paths = true;
    std::string detail_nonempty, detail_reduced, detail_paths;
    for (int e = 0; e < graph_.edge_count(); ++e) {
      const auto& img = images_[static_cast<std::size_t>(e)];
      if (img.empty()) {
        nonempty = false;
        append(detail_nonempty, alphabet()->name(e));
        continue;
      }
      if (!freely_reduced(img)) {
        reduced = false;
        append(detail_reduced, alphabet()->name(e));
      }
      if (!graph_.is_path(img)) {
        paths = false;
        append(detail_paths, alphabet()->name(e));
      }
    }
    report.checks.push_back({"nonempty images", nonempty,
                             nonempty ? "" : "empty image for: " + detail_nonempty});
    report.checks.push_back({"freely reduced images", reduced,
                             reduced ? "" : "unreduced image for: " + detail_reduced});
    report.checks.push_back({"images are edge paths", paths,
                             paths ? "" : "discontinuous image for: " + detail_paths});

    bool vertex_ok = nonempty && paths && vertex_images().has_value();
    report.checks.push_back({"vertex map well defined", vertex_ok,
                             vertex_ok ? "" : "edge images disagree on some vertex image"});

    bool valence_ok = true;
    std::string low;
    std::vector<int> vals(static_cast<std::size_t>(graph_.vertex_count()), 0);
    for (int e = 0; e < graph_.edge_count(); ++e) {
      ++vals[static_cast<std::size_t>(graph_.init(e))];
      ++vals[static_cast<std::size_t>(graph_.term(e))];
    }
    for (int v = 0; v < graph_.vertex_count(); ++v)
      if (vals[static_cast<std::size_t>(v)] < 3) {
        valence_ok = false;
        append(low, std::to_string(v));
      }
    report.checks.push_back({"valence >= 3", valence_ok,
                             valence_ok ? "" : "low-valence vertices: " + low});

    bool conn = graph_.connected();
    report.checks.push_back({"connected", conn, conn ? "" : "graph is disconnected"});
    return report;
  }

  // Derivative map on directions: a direction goes to the initial direction
  // of its image path.
  std::vector<int> derivative() const {
    std::vector<int> d(static_cast<std::size_t>(graph_.direction_count()), 0);
    for (int e = 0; e < graph_.edge_count(); ++e) {
      const auto& img = images_[static_cast<std::size_t>(e)];
      if (img.empty()) throw PreconditionError("derivative needs nonempty edge images");
      d[static_cast<std::size_t>(2 * e)] = Graph::direction_of(img.front());
      d[static_cast<std::size_t>(2 * e + 1)] = Graph::direction_of(inverse(img.back()));
    }
    return d;
  }

  // Train track test: every image must be an immersed path, and every turn
  // crossed by an image must stay nondegenerate under all iterates of the
  // derivative map. The turn state space is finite, so each orbit is
  // followed until it repeats.
  TrainTrackCertificate train_track_certificate() const {
    TrainTrackCertificate cert;
    for (int e = 0; e < graph_.edge_count(); ++e)
      if (images_[static_cast<std::size_t>(e)].empty())
        throw PreconditionError("train track test needs nonempty edge images");

    // Backtracks in the images themselves: degenerate turn crossed at n = 1.
    for (int e = 0; e < graph_.edge_count(); ++e) {
      const auto& img = images_[static_cast<std::size_t>(e)];
      for (std::size_t i = 0; i + 1 < img.size(); ++i) {
        Turn t(Graph::direction_of(inverse(img[i])), Graph::direction_of(img[i + 1]));
        if (t.degenerate()) {
          cert.failure = TrainTrackFailure{e, 1, t};
          return cert;
        }
      }
    }

    const std::vector<int> d = derivative();
    auto step = [&](Turn t) {
      return Turn(d[static_cast<std::size_t>(t.a)], d[static_cast<std::size_t>(t.b)]);
    };
    const std::int64_t cap =
        2 * static_cast<std::int64_t>(graph_.direction_count()) * graph_.direction_count();

    std::map<Turn, Turn> closure;  // turn -> image, for every reached turn
    std::set<Turn> legal;
    for (int e = 0; e < graph_.edge_count(); ++e) {
      const auto& img = images_[static_cast<std::size_t>(e)];
      for (std::size_t i = 0; i + 1 < img.size(); ++i) {
        Turn t0(Graph::direction_of(inverse(img[i])), Graph::direction_of(img[i + 1]));
        std::vector<Turn> path;
        Turn t = t0;
        std::int64_t steps = 0;
        while (true) {
          if (t.degenerate()) {
            cert.failure = TrainTrackFailure{e, static_cast<int>(path.size()) + 1, t};
            return cert;
          }
          if (legal.count(t)) break;
          bool seen_in_path = false;
          for (const Turn& p : path)
            if (p == t) {
              seen_in_path = true;
              break;
            }
          if (seen_in_path) break;
          path.push_back(t);
          Turn next = step(t);
          closure.emplace(t, next);
          t = next;
          if (++steps > cap)
            throw InternalError("turn orbit exceeded the pair state space bound");
        }
        for (const Turn& p : path) legal.insert(p);
      }
    }

    // Mark turns on periodic orbits of the closure's functional graph.
    std::set<Turn> periodic;
    for (const auto& [t0, unused] : closure) {
      (void)unused;
      std::map<Turn, int> when;
      Turn t = t0;
      int n = 0;
      while (!when.count(t)) {
        when[t] = n++;
        auto it = closure.find(t);
        if (it == closure.end()) break;  // orbit left via an already-legal turn
        t = it->second;
        if (periodic.count(t)) break;
      }
      if (auto it = when.find(t); it != when.end())
        for (const auto& [s, idx] : when)
          if (idx >= it->second) periodic.insert(s);
    }

    cert.ok = true;
    for (const auto& [t, img] : closure)
      cert.taken_closure.push_back({t, img, periodic.count(t) > 0});
    return cert;
  }

  bool is_train_track() const { return train_track_certificate().ok; }

  // Partition of the directions at v: two directions lie in the same gate
  // exactly when some iterate of the derivative map identifies them.
  std::vector<std::vector<int>> gates(int v) const {
    if (!is_train_track())
      throw PreconditionError("gates are only defined for train track maps");
    return gates_unchecked(derivative(), v);
  }

  std::vector<std::vector<int>> gates_unchecked(const std::vector<int>& d, int v) const {
    std::vector<int> dirs = graph_.directions_at(v);
    const int n = static_cast<int>(dirs.size());
    detail::UnionFind uf(n);
    const std::int64_t cap =
        2 * static_cast<std::int64_t>(graph_.direction_count()) * graph_.direction_count();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        int u = dirs[static_cast<std::size_t>(i)], w = dirs[static_cast<std::size_t>(j)];
        std::set<std::pair<int, int>> seen;
        std::int64_t steps = 0;
        bool same = false;
        while (true) {
          if (u == w) {
            same = true;
            break;
          }
          if (!seen.emplace(u, w).second) break;
          u = d[static_cast<std::size_t>(u)];
          w = d[static_cast<std::size_t>(w)];
          if (++steps > cap) throw InternalError("gate orbit exceeded the pair state space bound");
        }
        if (same) uf.unite(i, j);
      }
    }
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < n; ++i) classes[uf.find(i)].push_back(dirs[static_cast<std::size_t>(i)]);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : classes) out.push_back(std::move(members));
    return out;
  }

  // n-fold composition with tightened images; n = 0 gives the identity map
  // on the same graph.
  GraphMap iterate(int n) const {
    if (n < 0) throw ParameterError("iterate needs n >= 0");
    if (n == 0) return identity(graph_);
    EdgeMorphism f = morphism();
    EdgeMorphism acc = f;
    for (int i = 1; i < n; ++i) acc = f.compose_after(acc);
    std::vector<LetterSeq> images;
    for (int e = 0; e < graph_.edge_count(); ++e) images.push_back(acc.image(e).letters());
    return GraphMap(graph_, std::move(images));
  }

  friend bool operator==(const GraphMap& a, const GraphMap& b) {
    return a.graph_ == b.graph_ && a.images_ == b.images_;
  }

private:
  int endpoint_vertex(int symbol) const {
    int e = symbol / 2;
    return symbol % 2 == 0 ? graph_.init(e) : graph_.term(e);
  }

  static bool assign(std::vector<int>& vmap, int v, int target) {
    int& slot = vmap.at(static_cast<std::size_t>(v));
    if (slot == -1) {
      slot = target;
      return true;
    }
    return slot == target;
  }

  static void append(std::string& list, const std::string& item) {
    if (!list.empty()) list += ", ";
    list += item;
  }

  Graph graph_;
  std::vector<LetterSeq> images_;
};

}  // namespace trackrate
