#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "trackrate/families.hpp"
#include "trackrate/graph_map.hpp"

#include "test_util.hpp"

using namespace trackrate;

namespace {

Letter P(int e) { return Letter{e, +1}; }
Letter N(int e) { return Letter{e, -1}; }

}  // namespace

TEST_CASE("inferred carrier graph of the main family") {
  for (int k : {1, 2, 3}) {
    Family f = brinkmann_family(k);
    const Graph& g = f.map.graph();
    CHECK(g.edge_count() == 4 * k + 4);
    CHECK(g.vertex_count() == 5);
    std::vector<int> expected = {4, 2 * k + 1, 2 * k + 1, 2 * k + 1, 2 * k + 1};
    std::sort(expected.begin(), expected.end());
    CHECK(g.valence_multiset() == expected);
    CHECK(g.connected());
    CHECK(g.rank() == 4 * k);
  }
}

TEST_CASE("inferred carrier graph of the periodic family") {
  Family f = periodic_family(2);
  const Graph& g = f.map.graph();
  CHECK(g.edge_count() == 5);
  CHECK(g.vertex_count() == 2);
  for (int e = 0; e < g.edge_count(); ++e) CHECK(g.init(e) != g.term(e));
}

TEST_CASE("endpoint unification alone does not build the rose") {
  // Images of the pv family only relate two endpoint symbols; the rose
  // appears once the induced vertex map is forced to be well defined.
  int n = 4;
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("y" + std::to_string(i));
  auto ab = Alphabet::make(names);
  std::vector<PathConstraint> constraints;
  std::vector<LetterSeq> images(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = {P(i + 1)};
  images[static_cast<std::size_t>(n)] = {P(0), P(1)};
  for (const auto& img : images) constraints.push_back({img, false});

  Graph unified = infer_graph(ab, constraints);
  CHECK(unified.vertex_count() == 2 * n + 1);

  GraphMap closed = GraphMap::from_words(ab, images, {});
  CHECK(closed.graph().vertex_count() == 1);
}

TEST_CASE("infer_graph rejects an empty edge list") {
  CHECK_THROWS_AS(infer_graph(nullptr, {}), ParameterError);
}

TEST_CASE("validation of generated families") {
  for (int k : {1, 2, 3, 4}) CHECK(brinkmann_family(k).map.validate().ok());
  for (int g : {1, 2, 3}) CHECK(periodic_family(g).map.validate().ok());
  for (int n : {2, 3, 4}) CHECK(pv_family(n).map.validate().ok());
}

TEST_CASE("validation failures are reported by name") {
  Family f1 = brinkmann_family(1);
  SECTION("empty image") {
    auto images = f1.map.images();
    images[0].clear();
    GraphMap broken(f1.map.graph(), images);
    ValidationReport report = broken.validate();
    CHECK_FALSE(report.ok());
    REQUIRE(report.find("nonempty images") != nullptr);
    CHECK_FALSE(report.find("nonempty images")->passed);
  }
  SECTION("discontinuous image") {
    auto images = f1.map.images();
    images[0] = {P(0), P(4), P(7)};  // a x0 y1 is not a path
    GraphMap broken(f1.map.graph(), images);
    ValidationReport report = broken.validate();
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.find("images are edge paths")->passed);
  }
  SECTION("swap map on a two-petal rose passes") {
    auto ab = Alphabet::make({"a", "b"});
    GraphMap swap(Graph::rose(ab), {{P(1)}, {P(0)}});
    CHECK(swap.validate().ok());
  }
}

TEST_CASE("derivative map on directions") {
  Family f1 = brinkmann_family(1);
  std::vector<int> d = f1.map.derivative();
  const Alphabet& ab = *f1.map.alphabet();
  auto dir = [&](const char* name, int sign) {
    return 2 * *ab.index_of(name) + (sign > 0 ? 0 : 1);
  };
  CHECK(d[static_cast<std::size_t>(dir("a", +1))] == dir("a", +1));
  CHECK(d[static_cast<std::size_t>(dir("c", +1))] == dir("d", +1));
  CHECK(d[static_cast<std::size_t>(dir("a", -1))] == dir("y0", -1));

  GraphMap id = GraphMap::identity(f1.map.graph());
  std::vector<int> di = id.derivative();
  for (int i = 0; i < f1.map.graph().direction_count(); ++i)
    CHECK(di[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("derivative commutes with iteration") {
  for (int k : {1, 2}) {
    Family f = brinkmann_family(k);
    std::vector<int> d = f.map.derivative();
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> dn = f.map.iterate(n).derivative();
      for (int dir = 0; dir < f.map.graph().direction_count(); ++dir) {
        int expect = dir;
        for (int s = 0; s < n; ++s) expect = d[static_cast<std::size_t>(expect)];
        CHECK(dn[static_cast<std::size_t>(dir)] == expect);
      }
    }
  }
}

TEST_CASE("train track certificate") {
  SECTION("a raw backtracking image fails at the first iterate") {
    auto ab = Alphabet::make({"a"});
    GraphMap rose(Graph::rose(ab), {{P(0), N(0), P(0)}});
    TrainTrackCertificate cert = rose.train_track_certificate();
    CHECK_FALSE(cert.ok);
    REQUIRE(cert.failure.has_value());
    CHECK(cert.failure->edge == 0);
    CHECK(cert.failure->iterate == 1);
  }
  SECTION("the main family is a train track family") {
    for (int k : {1, 2, 3, 4}) {
      TrainTrackCertificate cert = brinkmann_family(k).map.train_track_certificate();
      CHECK(cert.ok);
      CHECK_FALSE(cert.taken_closure.empty());
      // the closure is closed under the derivative map
      std::set<Turn> turns;
      for (const auto& t : cert.taken_closure) turns.insert(t.turn);
      for (const auto& t : cert.taken_closure) CHECK(turns.count(t.image) == 1);
    }
  }
  SECTION("edge permutations take no turns") {
    for (int g : {1, 2, 3}) {
      TrainTrackCertificate cert = periodic_family(g).map.train_track_certificate();
      CHECK(cert.ok);
      CHECK(cert.taken_closure.empty());
    }
  }
  SECTION("powers of a train track map stay train track") {
    for (int k : {1, 2}) {
      GraphMap map = brinkmann_family(k).map;
      for (int n = 1; n <= 3; ++n) CHECK(map.iterate(n).is_train_track());
    }
  }
  SECTION("a perturbed image breaks the certificate") {
    Family f1 = brinkmann_family(1);
    auto images = f1.map.images();
    // y1 -> c^-1 d crosses the turn {c+, d+}, which the derivative map
    // degenerates in one step
    images[7] = {N(2), P(3)};
    GraphMap broken(f1.map.graph(), images);
    TrainTrackCertificate cert = broken.train_track_certificate();
    CHECK_FALSE(cert.ok);
    REQUIRE(cert.failure.has_value());
    CHECK(cert.failure->iterate == 2);
  }
}

TEST_CASE("gates of the main family") {
  Family f1 = brinkmann_family(1);
  const Graph& g = f1.map.graph();
  // the valence-4 vertex is the central one
  int central = -1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.valence(v) == 4) central = v;
  REQUIRE(central != -1);

  // D fixes the a and b directions and folds c onto d, so the central
  // vertex has three gates, one of them {c+, d+}.
  auto central_gates = f1.map.gates(central);
  CHECK(central_gates.size() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& gate : central_gates) sizes.push_back(gate.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2});

  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == central) continue;
    CHECK(f1.map.gates(v).size() == 3);
  }
}

TEST_CASE("gates partition directions and map into gates") {
  for (int k : {1, 2}) {
    Family f = brinkmann_family(k);
    const Graph& g = f.map.graph();
    std::vector<int> d = f.map.derivative();
    auto vmap = f.map.vertex_images();
    REQUIRE(vmap.has_value());
    std::vector<int> gate_of(static_cast<std::size_t>(g.direction_count()), -1);
    std::vector<std::vector<std::vector<int>>> all_gates;
    for (int v = 0; v < g.vertex_count(); ++v) {
      auto gates = f.map.gates(v);
      int count = 0;
      for (std::size_t i = 0; i < gates.size(); ++i)
        for (int dir : gates[i]) {
          CHECK(gate_of[static_cast<std::size_t>(dir)] == -1);
          gate_of[static_cast<std::size_t>(dir)] = static_cast<int>(all_gates.size() * 100 + i);
          ++count;
        }
      CHECK(count == g.valence(v));
      all_gates.push_back(gates);
    }
    // the derivative maps each gate into a single gate at the image vertex
    for (int v = 0; v < g.vertex_count(); ++v)
      for (const auto& gate : all_gates[static_cast<std::size_t>(v)]) {
        std::set<int> targets;
        for (int dir : gate) {
          int image_dir = d[static_cast<std::size_t>(dir)];
          CHECK(g.vertex_of_direction(image_dir) == (*vmap)[static_cast<std::size_t>(v)]);
          targets.insert(gate_of[static_cast<std::size_t>(image_dir)]);
        }
        CHECK(targets.size() == 1);
      }
  }
}

TEST_CASE("gates of the identity map are singletons") {
  Family f1 = brinkmann_family(1);
  GraphMap id = GraphMap::identity(f1.map.graph());
  for (int v = 0; v < id.graph().vertex_count(); ++v) {
    auto gates = id.gates(v);
    CHECK(static_cast<int>(gates.size()) == id.graph().valence(v));
  }
}

TEST_CASE("gates require a train track map") {
  auto ab = Alphabet::make({"a"});
  GraphMap rose(Graph::rose(ab), {{P(0), N(0), P(0)}});
  CHECK_THROWS_AS(rose.gates(0), PreconditionError);
}

TEST_CASE("iteration") {
  SECTION("the periodic family has finite order") {
    Family f = periodic_family(1);
    GraphMap id = GraphMap::identity(f.map.graph());
    CHECK(f.map.iterate(6) == id);
    CHECK_FALSE(f.map.iterate(3) == id);
  }
  SECTION("n = 1 reproduces the map, n = 0 the identity") {
    Family f = brinkmann_family(1);
    CHECK(f.map.iterate(1) == f.map);
    CHECK(f.map.iterate(0) == GraphMap::identity(f.map.graph()));
  }
  SECTION("second iterate of c") {
    Family f = brinkmann_family(1);
    GraphMap square = f.map.iterate(2);
    CHECK(Word::tighten(f.map.alphabet(), square.image(2)) ==
          Word::parse(f.map.alphabet(), "d y1 x0"));
  }
}

TEST_CASE("vertex images are derived and consistent") {
  for (int k : {1, 2}) {
    Family f = brinkmann_family(k);
    auto vmap = f.map.vertex_images();
    REQUIRE(vmap.has_value());
    const Graph& g = f.map.graph();
    for (int e = 0; e < g.edge_count(); ++e) {
      const LetterSeq& img = f.map.image(e);
      Letter first = img.front(), last = img.back();
      int init_image = first.sign > 0 ? g.init(first.edge) : g.term(first.edge);
      int term_image = last.sign > 0 ? g.term(last.edge) : g.init(last.edge);
      CHECK((*vmap)[static_cast<std::size_t>(g.init(e))] == init_image);
      CHECK((*vmap)[static_cast<std::size_t>(g.term(e))] == term_image);
    }
  }
}
