// trackrate: generate, verify and measure the library's train track map
// families from the command line. Exit codes: 0 success, 1 verification
// failure, 2 input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "trackrate/analysis.hpp"
#include "trackrate/families.hpp"
#include "trackrate/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

trackrate::Family make_family(const std::string& family, int param) {
  if (family == "brinkmann") return trackrate::brinkmann_family(param);
  if (family == "periodic") return trackrate::periodic_family(param);
  if (family == "pv") return trackrate::pv_family(param);
  throw trackrate::ParameterError("unknown family '" + family + "'");
}

trackrate::MapDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw trackrate::ParseError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw trackrate::ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return trackrate::document_from_json(j);
}

std::pair<long, long> parse_k_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      long k = std::stol(text);
      return {k, k};
    }
    return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
  } catch (const std::exception&) {
    throw trackrate::ParameterError("bad k range '" + text + "'");
  }
}

const char* status_tag(trackrate::CheckStatus s) {
  switch (s) {
    case trackrate::CheckStatus::passed: return "[PASS]";
    case trackrate::CheckStatus::failed: return "[FAIL]";
    case trackrate::CheckStatus::skipped: return "[SKIP]";
  }
  return "[????]";
}

int run(int argc, char** argv) {
  if (const char* version = std::getenv("TRACKRATE_FORMAT_VERSION");
      version && std::string(version) != "1") {
    std::cerr << "unsupported TRACKRATE_FORMAT_VERSION '" << version << "' (only \"1\")\n";
    return kExitUsage;
  }

  CLI::App app{"exact verification toolkit for train track maps"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "write a family member as a JSON document");
  std::string gen_family;
  int gen_param = 0;
  std::string gen_out;
  gen->add_option("--family", gen_family, "brinkmann|periodic|pv")->required();
  gen->add_option("--param", gen_param, "family parameter")->required();
  gen->add_option("--out", gen_out, "output path (default: stdout)");

  auto* ver = app.add_subcommand("verify", "run verification suites on a JSON document");
  std::string ver_path, ver_suite = "all";
  ver->add_option("path", ver_path, "GraphMap JSON document")->required();
  ver->add_option("--suite", ver_suite, "all|traintrack|primitive|sigma|indices|charpoly");

  auto* chp = app.add_subcommand("charpoly", "characteristic polynomial of the transition matrix");
  std::string chp_path;
  chp->add_option("path", chp_path, "GraphMap JSON document")->required();

  auto* grw = app.add_subcommand("growth", "certified growth rate table for the main family");
  std::string grw_range, grw_tol = "1e-12", grw_format = "csv";
  grw->add_option("--k-range", grw_range, "A..B with 1 <= A <= B")->required();
  grw->add_option("--tol", grw_tol, "enclosure width (default 1e-12)");
  grw->add_option("--format", grw_format, "csv|json");

  auto* idx = app.add_subcommand("indices", "singularity index table of a train track map");
  std::string idx_path, idx_format = "text";
  idx->add_option("path", idx_path, "GraphMap JSON document")->required();
  idx->add_option("--format", idx_format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (gen->parsed()) {
    trackrate::Family family = make_family(gen_family, gen_param);
    std::map<std::string, trackrate::LetterSeq> loops;
    if (family.boundary) loops["sigma"] = family.boundary->letters();
    std::string text =
        trackrate::canonical_dump(trackrate::document_to_json(family.map, loops));
    if (gen_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(gen_out, std::ios::binary);
      if (!out) throw trackrate::ParseError("cannot write '" + gen_out + "'");
      out << text;
    }
    return kExitOk;
  }

  if (ver->parsed()) {
    auto suite = trackrate::parse_suite(ver_suite);
    if (!suite) throw trackrate::ParameterError("unknown suite '" + ver_suite + "'");
    trackrate::MapDocument doc = load_document(ver_path);
    trackrate::VerificationReport report = trackrate::verify_map(doc.map, doc.loops, *suite);
    for (const auto& check : report.checks) {
      std::cout << status_tag(check.status) << " " << check.name;
      if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
      std::cout << "\n";
    }
    return report.ok() ? kExitOk : kExitVerificationFailure;
  }

  if (chp->parsed()) {
    trackrate::MapDocument doc = load_document(chp_path);
    std::cout << trackrate::char_poly(trackrate::transition_matrix(doc.map)).str() << "\n";
    return kExitOk;
  }

  if (grw->parsed()) {
    auto [k_lo, k_hi] = parse_k_range(grw_range);
    trackrate::Rat tol = trackrate::parse_rational(grw_tol);
    auto records = trackrate::growth_table_range(k_lo, k_hi, tol);
    if (grw_format == "csv")
      std::cout << trackrate::growth_csv(records);
    else if (grw_format == "json")
      std::cout << trackrate::growth_json(records).dump(2) << "\n";
    else
      throw trackrate::ParameterError("unknown format '" + grw_format + "'");
    return kExitOk;
  }

  if (idx->parsed()) {
    trackrate::MapDocument doc = load_document(idx_path);
    if (!doc.map.validate().ok()) {
      std::cerr << "map fails validation\n";
      return kExitVerificationFailure;
    }
    if (!doc.map.is_train_track()) {
      std::cerr << "map is not a train track map; indices are undefined\n";
      return kExitVerificationFailure;
    }
    trackrate::IndexTable table = trackrate::singularity_indices(doc.map);
    trackrate::GenusResult genus = trackrate::genus_and_puncture(doc.map.graph());
    if (idx_format == "json") {
      nlohmann::json j;
      j["vertices"] = nlohmann::json::array();
      for (const auto& row : table.rows)
        j["vertices"].push_back({{"vertex", row.vertex},
                                 {"valence", row.valence},
                                 {"gates", row.gate_count},
                                 {"prongs", row.prongs},
                                 {"shape", trackrate::to_string(row.shape)},
                                 {"index", trackrate::rational_string(row.index)},
                                 {"singular", row.singular}});
      j["index_sum"] = trackrate::rational_string(table.index_sum());
      j["rank"] = genus.rank;
      if (genus.genus) j["genus"] = *genus.genus;
      std::cout << j.dump(2) << "\n";
    } else if (idx_format == "text") {
      std::cout << "vertex  valence  gates  prongs  shape     index  singular\n";
      for (const auto& row : table.rows) {
        std::ostringstream line;
        line << row.vertex << "\t" << row.valence << "\t" << row.gate_count << "\t" << row.prongs
             << "\t" << trackrate::to_string(row.shape) << "\t"
             << trackrate::rational_string(row.index) << "\t" << (row.singular ? "yes" : "no");
        std::cout << line.str() << "\n";
      }
      std::cout << "index sum: " << trackrate::rational_string(table.index_sum()) << "\n";
      std::cout << "rank: " << genus.rank;
      if (genus.genus)
        std::cout << "  genus: " << *genus.genus << "  (2 - 2*genus = " << 2 - 2 * *genus.genus
                  << ")";
      std::cout << "\n";
    } else {
      throw trackrate::ParameterError("unknown format '" + idx_format + "'");
    }
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const trackrate::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const trackrate::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const trackrate::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
