#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "trackrate/analysis.hpp"

using namespace trackrate;

TEST_CASE("boundary loop invariance") {
  for (int k : {1, 2, 3, 4}) {
    Family f = brinkmann_family(k);
    auto witness = verify_sigma_invariance(f.map, *f.boundary);
    CHECK(witness.ok);
    CHECK(witness.image_length == 8 * k + 8);
  }
  for (int g : {1, 2, 3, 6}) {
    Family f = periodic_family(g);
    auto witness = verify_sigma_invariance(f.map, *f.boundary);
    CHECK(witness.ok);
  }
  SECTION("identity map preserves any loop") {
    Family f = brinkmann_family(1);
    GraphMap id = GraphMap::identity(f.map.graph());
    auto witness = verify_sigma_invariance(id, *f.boundary);
    CHECK(witness.ok);
    CHECK(witness.rotation == 0);
    CHECK_FALSE(witness.inverted);
  }
  SECTION("a non-closed loop is rejected") {
    Family f = brinkmann_family(1);
    CyclicWord open_path =
        CyclicWord::from_word(Word::parse(f.map.alphabet(), "a x0"));
    CHECK_THROWS_AS(verify_sigma_invariance(f.map, open_path), PreconditionError);
  }
  SECTION("a perturbed map loses invariance") {
    Family f = brinkmann_family(1);
    auto images = f.map.images();
    std::swap(images[*f.map.alphabet()->index_of("x0")],
              images[*f.map.alphabet()->index_of("y0")]);
    GraphMap broken = GraphMap::from_words(f.map.alphabet(), images, {f.boundary->letters()});
    auto witness = verify_sigma_invariance(broken, *f.boundary);
    CHECK_FALSE(witness.ok);
  }
}

TEST_CASE("genus bookkeeping") {
  for (int k : {1, 2, 3, 6}) {
    GenusResult r = genus_and_puncture(brinkmann_family(k).map.graph());
    CHECK(r.rank == 4 * k);
    REQUIRE(r.genus.has_value());
    CHECK(*r.genus == 2 * k);
  }
  for (int g : {1, 2, 5, 8}) {
    GenusResult r = genus_and_puncture(periodic_family(g).map.graph());
    CHECK(r.rank == 2 * g);
    REQUIRE(r.genus.has_value());
    CHECK(*r.genus == g);
  }
  SECTION("odd rank is reported without a genus") {
    auto ab = Alphabet::make({"a", "b", "c"});
    GenusResult r = genus_and_puncture(Graph::rose(ab));
    CHECK(r.rank == 3);
    CHECK_FALSE(r.genus.has_value());
  }
}

TEST_CASE("singularity index table of the main family") {
  for (int k : {1, 2, 3}) {
    Family f = brinkmann_family(k);
    IndexTable table = singularity_indices(f.map);
    REQUIRE(table.rows.size() == 5);
    int regular = 0, singular = 0;
    for (const auto& row : table.rows) {
      if (row.index == 0) {
        ++regular;
        CHECK(row.shape == LocalShape::tree);
        CHECK(row.prongs == 2);
        CHECK_FALSE(row.singular);
      } else {
        ++singular;
        CHECK(row.index == Rat(1, 2) - k);
        CHECK(row.shape == LocalShape::polygon);
        CHECK(row.gate_count == 2 * k + 1);
        CHECK(row.prongs == 2 * k + 1);
        CHECK(row.singular);
      }
    }
    CHECK(regular == 1);
    CHECK(singular == 4);
    CHECK(table.index_sum() == Rat(2 - 4 * k));
    CHECK(index_sum_check(table, 2 * k));
    CHECK_FALSE(index_sum_check(table, 2 * k + 1));
  }
}

TEST_CASE("index of the identity map counts valence") {
  Family f = brinkmann_family(1);
  GraphMap id = GraphMap::identity(f.map.graph());
  IndexTable table = singularity_indices(id);
  for (const auto& row : table.rows) {
    CHECK(row.shape == LocalShape::isolated);
    CHECK(row.gate_count == row.valence);
    CHECK(row.index == Rat(1) - Rat(row.valence, 2));
  }
}

TEST_CASE("index table needs a train track map") {
  auto ab = Alphabet::make({"a"});
  GraphMap rose(Graph::rose(ab), {{Letter{0, +1}, Letter{0, -1}, Letter{0, +1}}});
  CHECK_THROWS_AS(singularity_indices(rose), PreconditionError);
}

TEST_CASE("empty index table fails the sum check") {
  CHECK_FALSE(index_sum_check(IndexTable{}, 1));
}

TEST_CASE("growth records") {
  Rat tol = parse_rational("1e-12");
  SECTION("k = 1 bracket") {
    GrowthRecord rec = growth_record(1, tol);
    CHECK(rec.enclosure.lo >= parse_rational("2.01"));
    CHECK(rec.enclosure.hi <= parse_rational("2.02"));
    CHECK(rec.enclosure.width() <= tol);
    CHECK(rec.eq2_sign_lo * rec.eq2_sign_hi < 0);
    CHECK(rec.ineq3_ok);
    CHECK(rec.eq2_residual >= 0);
  }
  SECTION("residual vanishes with the tolerance") {
    GrowthRecord coarse = growth_record(1, parse_rational("1e-4"));
    GrowthRecord fine = growth_record(1, parse_rational("1e-10"));
    CHECK(fine.eq2_residual < coarse.eq2_residual);
  }
  SECTION("table over a range") {
    auto records = growth_table_range(1, 4, parse_rational("1e-9"));
    REQUIRE(records.size() == 4);
    for (std::size_t i = 0; i + 1 < records.size(); ++i)
      CHECK(records[i + 1].enclosure.strictly_below(records[i].enclosure));
  }
  SECTION("parameter validation") {
    CHECK_THROWS_AS(growth_table_range(0, 2, tol), ParameterError);
    CHECK_THROWS_AS(growth_table_range(3, 2, tol), ParameterError);
    CHECK_THROWS_AS(growth_table({}, tol), ParameterError);
    CHECK_THROWS_AS(growth_record(1, 0), ParameterError);
  }
}

TEST_CASE("growth inequality evaluates exactly") {
  CHECK(growth_inequality_holds(Rat(2), 1));
  // at 1 the right side is -4 + 1 = ... always below 1, holds trivially
  CHECK(growth_inequality_holds(Rat(1), 1));
  CHECK_FALSE(growth_inequality_holds(Rat(-1), 1));
}

TEST_CASE("verification suites") {
  SECTION("main family passes everything") {
    Family f = brinkmann_family(2);
    std::map<std::string, LetterSeq> loops{{"sigma", f.boundary->letters()}};
    VerificationReport report = verify_map(f.map, loops, Suite::all);
    CHECK(report.ok());
    for (const auto& check : report.checks) CHECK(check.status != CheckStatus::skipped);
  }
  SECTION("pv family passes with surface checks skipped") {
    Family f = pv_family(3);
    VerificationReport report = verify_map(f.map, {}, Suite::all);
    CHECK(report.ok());
    bool saw_skip = false;
    for (const auto& check : report.checks)
      saw_skip = saw_skip || check.status == CheckStatus::skipped;
    CHECK(saw_skip);
  }
  SECTION("periodic family fails the primitivity obligation") {
    Family f = periodic_family(1);
    std::map<std::string, LetterSeq> loops{{"sigma", f.boundary->letters()}};
    VerificationReport report = verify_map(f.map, loops, Suite::primitive);
    CHECK_FALSE(report.ok());
    report = verify_map(f.map, loops, Suite::sigma);
    CHECK(report.ok());
  }
  SECTION("suite names parse") {
    CHECK(parse_suite("all") == Suite::all);
    CHECK(parse_suite("traintrack") == Suite::traintrack);
    CHECK_FALSE(parse_suite("everything").has_value());
  }
}
