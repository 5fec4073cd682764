#include "posetkit/io.hpp"

#include <fstream>

namespace posetkit {

namespace {

std::vector<std::string> string_array(const Json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw input_error(std::string(what) + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Json poset_to_json(const Poset& poset) {
  Json j;
  Json elements = Json::array();
  for (int i = 0; i < poset.size(); ++i) elements.push_back(poset.label(i));
  Json le = Json::array();
  for (const auto& [lo, hi] : poset.cover_pairs())
    le.push_back(Json::array({poset.label(lo), poset.label(hi)}));
  j["elements"] = std::move(elements);
  j["le"] = std::move(le);
  return j;
}

Poset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements"))
    throw input_error("poset document must be an object with an \"elements\" array");
  const auto labels = string_array(j.at("elements"), "\"elements\"");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("le")) {
    const auto& le = j.at("le");
    if (!le.is_array()) throw input_error("\"le\" must be an array of pairs");
    for (const auto& pair : le) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        throw input_error("\"le\" entries must be [lower, upper] label pairs");
      pairs.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  return Poset::from_pairs(labels, pairs);
}

Json subset_to_json(const Poset& poset, Subset s) {
  Json out = Json::array();
  s.for_each([&](int p) { out.push_back(poset.label(p)); });
  return out;
}

Subset subset_from_json(const Poset& poset, const Json& j) {
  Subset out;
  for (const auto& label : string_array(j, "subset"))
    out.add(poset.require_index(label));
  return out;
}

Json spec_to_json(const JoinSpecification& spec) {
  Json sets = Json::array();
  for (Subset s : spec.sets())
    if (s.count() >= 2) sets.push_back(subset_to_json(spec.poset(), s));
  Json j;
  j["sets"] = std::move(sets);
  return j;
}

JoinSpecification spec_from_json(const Poset& poset, const Json& j) {
  if (!j.is_object() || !j.contains("sets"))
    throw input_error("specification document must be an object with a \"sets\" array");
  const auto& sets = j.at("sets");
  if (!sets.is_array()) throw input_error("\"sets\" must be an array");
  std::vector<Subset> parsed;
  for (const auto& s : sets) parsed.push_back(subset_from_json(poset, s));
  return JoinSpecification(poset, parsed);
}

Json family_to_json(const ClosureFamily& family) {
  Json closed = Json::array();
  for (Subset s : family.closed_sets()) closed.push_back(subset_to_json(family.poset(), s));
  Json j;
  j["closed"] = std::move(closed);
  return j;
}

ClosureFamily family_from_json(const Poset& poset, const Json& j) {
  if (!j.is_object() || !j.contains("closed"))
    throw input_error("closure family document must be an object with a \"closed\" array");
  const auto& closed = j.at("closed");
  if (!closed.is_array()) throw input_error("\"closed\" must be an array");
  std::vector<Subset> sets;
  for (const auto& s : closed) sets.push_back(subset_from_json(poset, s));
  return ClosureFamily(poset, sets);
}

Json cardinal_to_json(Cardinal c) {
  if (c.is_omega()) return Json("omega");
  return Json(c.value());
}

Cardinal cardinal_from_json(const Json& j) {
  if (j.is_string()) return cardinal_from_string(j.get<std::string>());
  if (j.is_number_unsigned() || j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw input_error("cardinal cannot be negative");
    return Cardinal::finite(static_cast<std::uint32_t>(v));
  }
  throw input_error("cardinal must be a number or \"omega\"");
}

Cardinal cardinal_from_string(const std::string& text) {
  if (text == "omega" || text == "w") return Cardinal::omega();
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return Cardinal::finite(static_cast<std::uint32_t>(v));
  } catch (const std::exception&) {
    throw input_error("cannot parse cardinal: " + text);
  }
}

Json representation_to_json(const Representation& rep) {
  Json j;
  j["ground"] = rep.ground;
  Json map = Json::object();
  for (std::size_t i = 0; i < rep.elements.size(); ++i) {
    Json points = Json::array();
    for (std::size_t g = 0; g < rep.ground.size(); ++g)
      if (rep.image[i] >> g & 1) points.push_back(rep.ground[g]);
    map[rep.elements[i]] = std::move(points);
  }
  j["map"] = std::move(map);
  j["m"] = cardinal_to_json(rep.meet_bound);
  j["n"] = cardinal_to_json(rep.join_bound);
  return j;
}

Representation representation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("map"))
    throw input_error("representation document must contain \"ground\" and \"map\"");
  Representation rep;
  rep.ground = string_array(j.at("ground"), "\"ground\"");
  if (rep.ground.size() > 64) throw input_error("ground sets above 64 points are unsupported");

  std::unordered_map<std::string, std::size_t> ground_index;
  for (std::size_t g = 0; g < rep.ground.size(); ++g)
    if (!ground_index.emplace(rep.ground[g], g).second)
      throw input_error("duplicate ground point: " + rep.ground[g]);

  const auto& map = j.at("map");
  if (!map.is_object()) throw input_error("\"map\" must be an object");
  for (const auto& [label, points] : map.items()) {
    std::uint64_t mask = 0;
    for (const auto& point : string_array(points, "map entry")) {
      const auto it = ground_index.find(point);
      if (it == ground_index.end()) throw input_error("unknown ground point: " + point);
      mask |= std::uint64_t{1} << it->second;
    }
    rep.elements.push_back(label);
    rep.image.push_back(mask);
  }
  rep.meet_bound = j.contains("m") ? cardinal_from_json(j.at("m")) : Cardinal::omega();
  rep.join_bound = j.contains("n") ? cardinal_from_json(j.at("n")) : Cardinal::omega();
  return rep;
}

Json frame_report_to_json(const CompletionLattice& lattice, const FrameReport& report) {
  Json j;
  j["frame"] = report.frame;
  if (report.witness) {
    const auto& w = *report.witness;
    Json witness;
    witness["x"] = subset_to_json(lattice.base(), lattice.element(w.x));
    Json parts = Json::array();
    for (std::size_t y : w.parts) parts.push_back(subset_to_json(lattice.base(), lattice.element(y)));
    witness["y"] = std::move(parts);
    witness["lhs"] = subset_to_json(lattice.base(), lattice.element(w.lhs));
    witness["rhs"] = subset_to_json(lattice.base(), lattice.element(w.rhs));
    j["witness"] = std::move(witness);
  } else {
    j["witness"] = nullptr;
  }
  j["sigma_checked"] = report.sigma_checked;
  return j;
}

Json equivalence_verdict_to_json(const Poset& poset, const CompletionLattice& lattice,
                                 const FrameEquivalenceVerdict& verdict) {
  Json j;
  j["phi_eq_upsilon"] = verdict.closure_eq_saturation;
  j["frame"] = verdict.frame.frame;
  if (verdict.discrepancy) {
    Json w;
    w["s"] = subset_to_json(poset, *verdict.discrepancy);
    w["closure"] = subset_to_json(poset, verdict.closure_value);
    w["saturation"] = subset_to_json(poset, verdict.saturation_value);
    j["witness"] = std::move(w);
  } else if (verdict.frame.witness) {
    j["witness"] = frame_report_to_json(lattice, verdict.frame)["witness"];
  } else {
    j["witness"] = nullptr;
  }
  j["exhaustive"] = verdict.exhaustive;
  j["subsets_checked"] = verdict.subsets_checked;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("parse error in " + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

Poset load_poset(const std::string& path) { return poset_from_json(load_json_file(path)); }

}  // namespace posetkit
