#pragma once

#include <string>

#include <json.hpp>

#include "posetkit/closure.hpp"
#include "posetkit/frame_equivalence.hpp"
#include "posetkit/join_spec.hpp"
#include "posetkit/poset.hpp"
#include "posetkit/representation.hpp"

namespace posetkit {

// Stable field order in every emitted document.
using Json = nlohmann::ordered_json;

// {"elements": [...], "le": [["a","b"], ...]} — pairs generate the order;
// emitted pairs are the transitive reduction.
Json poset_to_json(const Poset& poset);
Poset poset_from_json(const Json& j);

// {"sets": [["x","y"], ...]} relative to a poset; singletons implicit.
Json spec_to_json(const JoinSpecification& spec);
JoinSpecification spec_from_json(const Poset& poset, const Json& j);

// {"closed": [["a"], [], ...]}.
Json family_to_json(const ClosureFamily& family);
ClosureFamily family_from_json(const Poset& poset, const Json& j);

// {"ground": [...], "map": {"x": ["g1"]}, "m": "omega"|int, "n": ...}.
Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json cardinal_to_json(Cardinal c);
Cardinal cardinal_from_json(const Json& j);
Cardinal cardinal_from_string(const std::string& text);

Json subset_to_json(const Poset& poset, Subset s);
Subset subset_from_json(const Poset& poset, const Json& j);

// {"frame": bool, "witness": {...}|null, "sigma_checked": int}.
Json frame_report_to_json(const CompletionLattice& lattice, const FrameReport& report);

// {"phi_eq_upsilon": bool, "frame": bool, "witness": {...}|null}.
Json equivalence_verdict_to_json(const Poset& poset, const CompletionLattice& lattice,
                                 const FrameEquivalenceVerdict& verdict);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
Poset load_poset(const std::string& path);

}  // namespace posetkit
