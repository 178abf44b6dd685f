#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "trackrate/analysis.hpp"
#include "trackrate/graph_map.hpp"

namespace trackrate {

// A graph map plus its named loops, as carried by the JSON document format:
//   {"edges": [...], "images": {...}, "loops": {...}, "vertices": {...}}
// "vertices" is optional; without it the carrier graph is inferred from the
// images together with the loops (read as closed paths).
struct MapDocument {
  GraphMap map;
  std::map<std::string, LetterSeq> loops;
  bool explicit_vertices = false;
};

inline MapDocument document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "edges" && key != "images" && key != "loops" && key != "vertices")
      throw ParseError("unknown document key '" + key + "'");
  }
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("document needs an \"edges\" array");
  std::vector<std::string> names;
  for (const auto& e : j["edges"]) {
    if (!e.is_string()) throw ParseError("edge names must be strings");
    names.push_back(e.get<std::string>());
  }
  AlphabetPtr alphabet = Alphabet::make(std::move(names));

  if (!j.contains("images") || !j["images"].is_object())
    throw ParseError("document needs an \"images\" object");
  std::vector<LetterSeq> images(static_cast<std::size_t>(alphabet->size()));
  std::vector<bool> seen(static_cast<std::size_t>(alphabet->size()), false);
  for (const auto& [name, value] : j["images"].items()) {
    auto idx = alphabet->index_of(name);
    if (!idx) throw ParseError("image for unknown edge '" + name + "'");
    if (!value.is_string()) throw ParseError("image words must be strings");
    images[static_cast<std::size_t>(*idx)] = parse_letters(*alphabet, value.get<std::string>());
    seen[static_cast<std::size_t>(*idx)] = true;
  }
  for (int e = 0; e < alphabet->size(); ++e)
    if (!seen[static_cast<std::size_t>(e)])
      throw ParseError("missing image for edge '" + alphabet->name(e) + "'");

  std::map<std::string, LetterSeq> loops;
  if (j.contains("loops")) {
    if (!j["loops"].is_object()) throw ParseError("\"loops\" must be an object");
    for (const auto& [name, value] : j["loops"].items()) {
      if (!value.is_string()) throw ParseError("loop words must be strings");
      loops[name] = parse_letters(*alphabet, value.get<std::string>());
    }
  }

  if (j.contains("vertices")) {
    const auto& jv = j["vertices"];
    if (!jv.is_object() || !jv.contains("incidence") || !jv["incidence"].is_object())
      throw ParseError("\"vertices\" needs an \"incidence\" object");
    std::vector<int> init(static_cast<std::size_t>(alphabet->size()), -1);
    std::vector<int> term(static_cast<std::size_t>(alphabet->size()), -1);
    int max_vertex = -1;
    for (const auto& [name, value] : jv["incidence"].items()) {
      auto idx = alphabet->index_of(name);
      if (!idx) throw ParseError("incidence for unknown edge '" + name + "'");
      if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
          !value[1].is_number_integer())
        throw ParseError("incidence entries must be [init, term] integer pairs");
      init[static_cast<std::size_t>(*idx)] = value[0].get<int>();
      term[static_cast<std::size_t>(*idx)] = value[1].get<int>();
      max_vertex = std::max({max_vertex, init[static_cast<std::size_t>(*idx)],
                             term[static_cast<std::size_t>(*idx)]});
    }
    for (int e = 0; e < alphabet->size(); ++e)
      if (init[static_cast<std::size_t>(e)] < 0 || term[static_cast<std::size_t>(e)] < 0)
        throw ParseError("missing incidence for edge '" + alphabet->name(e) + "'");
    std::vector<bool> used(static_cast<std::size_t>(max_vertex) + 1, false);
    for (int e = 0; e < alphabet->size(); ++e) {
      used[static_cast<std::size_t>(init[static_cast<std::size_t>(e)])] = true;
      used[static_cast<std::size_t>(term[static_cast<std::size_t>(e)])] = true;
    }
    for (bool u : used)
      if (!u) throw ParseError("vertex ids must be contiguous from 0");
    Graph graph(alphabet, max_vertex + 1, std::move(init), std::move(term));
    return {GraphMap(std::move(graph), std::move(images)), std::move(loops), true};
  }

  std::vector<LetterSeq> closed;
  for (const auto& [name, letters] : loops) {
    (void)name;
    closed.push_back(letters);
  }
  GraphMap map = GraphMap::from_words(alphabet, std::move(images), closed);
  return {std::move(map), std::move(loops), false};
}

inline nlohmann::json document_to_json(const GraphMap& map,
                                       const std::map<std::string, LetterSeq>& loops) {
  const Alphabet& alphabet = *map.alphabet();
  nlohmann::json j;
  j["edges"] = nlohmann::json::array();
  for (int e = 0; e < alphabet.size(); ++e) j["edges"].push_back(alphabet.name(e));
  j["images"] = nlohmann::json::object();
  for (int e = 0; e < alphabet.size(); ++e)
    j["images"][alphabet.name(e)] = format_letters(alphabet, map.image(e));
  if (!loops.empty()) {
    j["loops"] = nlohmann::json::object();
    for (const auto& [name, letters] : loops) j["loops"][name] = format_letters(alphabet, letters);
  }
  j["vertices"]["incidence"] = nlohmann::json::object();
  for (int e = 0; e < alphabet.size(); ++e)
    j["vertices"]["incidence"][alphabet.name(e)] =
        nlohmann::json::array({map.graph().init(e), map.graph().term(e)});
  return j;
}

// Sorted keys, two-space indent, trailing newline. generate -> parse ->
// serialize is byte identical.
inline std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline std::string interval_string(const RationalInterval& iv, int digits = 15) {
  return "[" + to_decimal(iv.lo, digits) + ", " + to_decimal(iv.hi, digits) + "] exact [" +
         rational_string(iv.lo) + ", " + rational_string(iv.hi) + "]";
}

inline std::string growth_csv(const std::vector<GrowthRecord>& records) {
  std::string out = "k,lambda_lo,lambda_hi,eq2_residual,ineq3_ok\n";
  for (const auto& r : records) {
    out += std::to_string(r.k) + "," + to_decimal(r.enclosure.lo, 15) + "," +
           to_decimal(r.enclosure.hi, 15) + "," + to_decimal(r.eq2_residual, 15) + "," +
           (r.ineq3_ok ? "true" : "false") + "\n";
  }
  return out;
}

inline nlohmann::json growth_json(const std::vector<GrowthRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json row;
    row["k"] = r.k;
    row["lambda_lo"] = {{"decimal", to_decimal(r.enclosure.lo, 15)},
                        {"rational", rational_string(r.enclosure.lo)}};
    row["lambda_hi"] = {{"decimal", to_decimal(r.enclosure.hi, 15)},
                        {"rational", rational_string(r.enclosure.hi)}};
    row["eq2_residual"] = {{"decimal", to_decimal(r.eq2_residual, 15)},
                           {"rational", rational_string(r.eq2_residual)}};
    row["eq2_sign_lo"] = r.eq2_sign_lo;
    row["eq2_sign_hi"] = r.eq2_sign_hi;
    row["ineq3_ok"] = r.ineq3_ok;
    out.push_back(row);
  }
  return out;
}

}  // namespace trackrate
