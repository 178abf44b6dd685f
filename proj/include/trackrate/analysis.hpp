#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trackrate/families.hpp"
#include "trackrate/matrix.hpp"
#include "trackrate/roots.hpp"

namespace trackrate {

struct SigmaInvarianceWitness {
  bool ok = false;
  int rotation = 0;    // rotation aligning the image with sigma
  bool inverted = false;
  int image_length = 0;
};

// Does the map preserve the free homotopy class of the loop (up to
// inversion)? The image is tightened, cyclically reduced and compared as a
// cyclic word.
inline SigmaInvarianceWitness verify_sigma_invariance(const GraphMap& map, const CyclicWord& sigma) {
  if (!same_alphabet(sigma.alphabet(), map.alphabet()))
    throw AlphabetMismatchError("loop over a different alphabet");
  if (!map.graph().is_closed_path(sigma.letters()))
    throw PreconditionError("loop is not a closed path in the map's graph");
  Word image = map.morphism().apply(sigma.word());
  CyclicDecomposition dec = CyclicWord::reduce(image);
  auto match = CyclicWord::match(sigma, dec.core, /*up_to_inversion=*/true);
  return {match.equal, match.rotation, match.inverted, dec.core.size()};
}

struct GenusResult {
  int rank = 0;                 // E - V + 1
  std::optional<int> genus;     // rank / 2 when the rank is even
};

// Euler characteristic bookkeeping for a once-punctured orientable carrier:
// rank = E - V + 1 and genus = rank / 2. Odd rank is reported, not fatal.
inline GenusResult genus_and_puncture(const Graph& graph) {
  if (!graph.connected()) throw PreconditionError("genus needs a connected graph");
  GenusResult res;
  res.rank = graph.rank();
  if (res.rank % 2 == 0) res.genus = res.rank / 2;
  return res;
}

// Local structure of the gates at a vertex, read off the closed set of
// taken turns: the simple graph on gates with an edge for every taken turn.
enum class LocalShape {
  polygon,   // single cycle through all gates: p-pronged singularity
  tree,      // spanning tree: leaves flow through, no singularity
  isolated,  // no taken turns at the vertex
  other,     // anything else; reported, never corrected
};

inline const char* to_string(LocalShape s) {
  switch (s) {
    case LocalShape::polygon: return "polygon";
    case LocalShape::tree: return "tree";
    case LocalShape::isolated: return "isolated";
    case LocalShape::other: return "other";
  }
  return "?";
}

struct VertexIndexEntry {
  int vertex = 0;
  int valence = 0;
  int gate_count = 0;
  int prongs = 0;
  LocalShape shape = LocalShape::isolated;
  Rat index;       // 1 - prongs/2
  bool singular = false;
};

struct IndexTable {
  std::vector<VertexIndexEntry> rows;

  Rat index_sum() const {
    Rat s = 0;
    for (const auto& r : rows) s += r.index;
    return s;
  }
};

// Per-vertex singularity indices of the invariant foliations carried by a
// train track map. A vertex whose taken-turn graph is a polygon through all
// gates carries a singularity with one prong per gate; a spanning tree of
// taken turns is a regular (flow-through) point. With no taken turns at all
// every gate contributes a prong.
inline IndexTable singularity_indices(const GraphMap& map) {
  TrainTrackCertificate cert = map.train_track_certificate();
  if (!cert.ok) throw PreconditionError("singularity indices need a train track map");
  const Graph& graph = map.graph();
  const std::vector<int> d = map.derivative();

  IndexTable table;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    std::vector<std::vector<int>> gates = map.gates_unchecked(d, v);
    std::map<int, int> gate_of;
    for (std::size_t g = 0; g < gates.size(); ++g)
      for (int dir : gates[g]) gate_of[dir] = static_cast<int>(g);

    std::set<std::pair<int, int>> lw_edges;
    for (const TakenTurn& t : cert.taken_closure) {
      if (graph.vertex_of_direction(t.turn.a) != v) continue;
      int ga = gate_of.at(t.turn.a), gb = gate_of.at(t.turn.b);
      if (ga != gb) lw_edges.emplace(std::min(ga, gb), std::max(ga, gb));
    }

    const int g = static_cast<int>(gates.size());
    const int e = static_cast<int>(lw_edges.size());
    detail::UnionFind uf(g);
    std::vector<int> degree(static_cast<std::size_t>(g), 0);
    for (auto [x, y] : lw_edges) {
      uf.unite(x, y);
      ++degree[static_cast<std::size_t>(x)];
      ++degree[static_cast<std::size_t>(y)];
    }
    int components = 0;
    for (int i = 0; i < g; ++i)
      if (uf.find(i) == i) ++components;
    bool connected = components == 1;
    bool all_degree_two = true;
    for (int deg : degree) all_degree_two = all_degree_two && deg == 2;

    LocalShape shape;
    int prongs;
    if (e == 0) {
      shape = LocalShape::isolated;
      prongs = g;
    } else if (connected && e == g && all_degree_two) {
      shape = LocalShape::polygon;
      prongs = g;
    } else if (connected && e == g - 1) {
      shape = LocalShape::tree;
      prongs = 2;
    } else {
      shape = LocalShape::other;
      prongs = g;
    }
    Rat index = Rat(1) - Rat(prongs, 2);
    table.rows.push_back({v, graph.valence(v), g, prongs, shape, index, index != 0});
  }
  return table;
}

// Indices over a closed surface sum to its Euler characteristic.
inline bool index_sum_check(const IndexTable& table, int genus) {
  return table.index_sum() == Rat(2 - 2 * genus);
}

struct GrowthRecord {
  long k = 0;
  RationalInterval enclosure;
  Rat eq2_residual;        // |x - 1 - x^(4k+2) + x^(4k+1) + 4 x^(2k+1)| at the midpoint
  int eq2_sign_lo = 0;     // sign of the defining factor at each endpoint
  int eq2_sign_hi = 0;
  bool ineq3_ok = false;   // 1/x >= 1 - x^-(4k+1) - 4 x^-(2k+1) at the lower endpoint
};

// 1/x >= 1 - x^-(4k+1) - 4 x^-(2k+1), evaluated exactly.
inline bool growth_inequality_holds(const Rat& x, long k) {
  if (x <= 0) return false;
  Rat lhs = pow_rat(x, -1);
  Rat rhs = Rat(1) - pow_rat(x, -(4 * k + 1)) - Rat(4) * pow_rat(x, -(2 * k + 1));
  return lhs >= rhs;
}

// Certified growth rate for one parameter. For k <= 12 the closed-form
// polynomial is checked against the transition matrix of the generated map
// before use; beyond that the two are identical by the same induction.
inline GrowthRecord growth_record(long k, const Rat& tol) {
  if (k < 1) throw ParameterError("growth table needs k >= 1");
  if (tol <= 0) throw ParameterError("growth table needs tol > 0");
  Polynomial factor = brinkmann_growth_factor(static_cast<int>(k));
  if (k <= 12) {
    Polynomial from_matrix = char_poly(transition_matrix(brinkmann_family(static_cast<int>(k)).map));
    if (!(closed_form_charpoly(static_cast<int>(k)) == from_matrix))
      throw InternalError("closed-form characteristic polynomial mismatch at k = " +
                          std::to_string(k));
  }
  GrowthRecord rec;
  rec.k = k;
  // factor(1) = -4, so the open bracket above 1 is valid
  rec.enclosure = perron_root(factor, Rat(1), tol);
  rec.eq2_residual = abs(factor.evaluate(rec.enclosure.midpoint()));
  rec.eq2_sign_lo = factor.sign_at(rec.enclosure.lo);
  rec.eq2_sign_hi = factor.sign_at(rec.enclosure.hi);
  rec.ineq3_ok = growth_inequality_holds(rec.enclosure.lo, k);
  return rec;
}

inline std::vector<GrowthRecord> growth_table(const std::vector<long>& ks, const Rat& tol) {
  if (ks.empty()) throw ParameterError("growth table needs a nonempty parameter list");
  std::vector<GrowthRecord> out;
  out.reserve(ks.size());
  for (long k : ks) out.push_back(growth_record(k, tol));
  return out;
}

inline std::vector<GrowthRecord> growth_table_range(long k_lo, long k_hi, const Rat& tol) {
  if (k_lo < 1 || k_hi < k_lo) throw ParameterError("growth table needs 1 <= A <= B");
  std::vector<long> ks;
  for (long k = k_lo; k <= k_hi; ++k) ks.push_back(k);
  return growth_table(ks, tol);
}

// ---------------------------------------------------------------------------
// Verification suites over a loaded map document.

enum class Suite { all, traintrack, primitive, sigma, indices, charpoly };

inline std::optional<Suite> parse_suite(std::string_view s) {
  if (s == "all") return Suite::all;
  if (s == "traintrack") return Suite::traintrack;
  if (s == "primitive") return Suite::primitive;
  if (s == "sigma") return Suite::sigma;
  if (s == "indices") return Suite::indices;
  if (s == "charpoly") return Suite::charpoly;
  return std::nullopt;
}

enum class CheckStatus { passed, failed, skipped };

struct SuiteCheck {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct VerificationReport {
  std::vector<SuiteCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::failed) return false;
    return true;
  }
};

// Runs the selected checks against a map and its named loops. Surface-only
// checks (palindromicity, genus, indices, the closed-form comparison) are
// skipped for documents without loops or without a recognized family
// structure, and reported as such.
inline VerificationReport verify_map(const GraphMap& map,
                                     const std::map<std::string, LetterSeq>& loops, Suite suite) {
  VerificationReport report;
  auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
  auto add = [&](std::string name, CheckStatus st, std::string detail) {
    report.checks.push_back({std::move(name), st, std::move(detail)});
  };

  ValidationReport base = map.validate();
  bool base_ok = base.ok();
  if (want(Suite::traintrack) || want(Suite::indices) || want(Suite::sigma)) {
    std::string failures;
    for (const auto& c : base.checks)
      if (!c.passed) {
        if (!failures.empty()) failures += "; ";
        failures += c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
      }
    add("validate", base_ok ? CheckStatus::passed : CheckStatus::failed, failures);
  }

  std::optional<TrainTrackCertificate> cert;
  if (base_ok) cert = map.train_track_certificate();

  if (want(Suite::traintrack)) {
    if (!base_ok)
      add("train_track", CheckStatus::skipped, "validation failed");
    else if (cert->ok)
      add("train_track", CheckStatus::passed,
          "taken turns: " + std::to_string(cert->taken_closure.size()));
    else {
      const auto& f = *cert->failure;
      add("train_track", CheckStatus::failed,
          "image of '" + map.alphabet()->name(f.edge) + "' backtracks at iterate " +
              std::to_string(f.iterate));
    }
  }

  if (want(Suite::primitive)) {
    IntMatrix M = transition_matrix(map);
    bool prim = is_primitive(M);
    add("primitive", prim ? CheckStatus::passed : CheckStatus::failed,
        prim ? "" : (is_irreducible(M) ? "irreducible but periodic" : "reducible"));
  }

  if (want(Suite::sigma)) {
    if (loops.empty())
      add("sigma_invariant", CheckStatus::skipped, "no loops in document");
    else
      for (const auto& [name, letters] : loops) {
        std::string check = "sigma_invariant[" + name + "]";
        if (!base_ok) {
          add(check, CheckStatus::skipped, "validation failed");
          continue;
        }
        Word loop_word = Word::tighten(map.alphabet(), letters);
        if (!map.graph().is_closed_path(letters)) {
          add(check, CheckStatus::failed, "loop is not a closed path");
          continue;
        }
        CyclicDecomposition dec = CyclicWord::reduce(loop_word);
        auto witness = verify_sigma_invariance(map, dec.core);
        add(check, witness.ok ? CheckStatus::passed : CheckStatus::failed,
            witness.ok ? ("rotation " + std::to_string(witness.rotation) +
                          (witness.inverted ? ", inverted" : ""))
                       : "image not cyclically equal (length " +
                             std::to_string(witness.image_length) + ")");
      }
  }

  std::optional<int> family_k = recognize_brinkmann(map);

  if (want(Suite::charpoly)) {
    IntMatrix S = signed_transition_matrix(map);
    Int det = determinant(S);
    bool unit = det == 1 || det == -1;
    add("abelianization_det", unit ? CheckStatus::passed : CheckStatus::failed,
        "det = " + det.str());

    Polynomial chi = char_poly(transition_matrix(map));
    if (family_k)
      add("palindromic", chi.is_palindromic() ? CheckStatus::passed : CheckStatus::failed, "");
    else
      add("palindromic", CheckStatus::skipped,
          std::string("asserted only for the main family; observed: ") +
              (chi.is_palindromic() ? "yes" : "no"));

    if (family_k)
      add("charpoly_closed_form",
          chi == closed_form_charpoly(*family_k) ? CheckStatus::passed : CheckStatus::failed,
          "k = " + std::to_string(*family_k));
    else
      add("charpoly_closed_form", CheckStatus::skipped, "map not recognized as the main family");
  }

  if (want(Suite::indices)) {
    if (!base_ok || !cert || !cert->ok) {
      add("indices", CheckStatus::skipped, "needs a valid train track map");
    } else {
      IndexTable table = singularity_indices(map);
      GenusResult genus = genus_and_puncture(map.graph());
      std::string detail = "index sum " + rational_string(table.index_sum());
      if (loops.empty()) {
        add("indices", CheckStatus::skipped, "no boundary loop; " + detail);
      } else if (!genus.genus) {
        add("indices", CheckStatus::failed, "odd rank " + std::to_string(genus.rank));
      } else {
        bool sum_ok = index_sum_check(table, *genus.genus);
        add("indices", sum_ok ? CheckStatus::passed : CheckStatus::failed,
            detail + " vs 2 - 2*" + std::to_string(*genus.genus));
      }
    }
  }

  return report;
}

}  // namespace trackrate
