#include <doctest.h>

#include "oracles.hpp"
#include "posetkit/fixtures.hpp"
#include "posetkit/io.hpp"

using namespace posetkit;
using oracle::named;

namespace {
const std::string kFixtureDir = POSETKIT_FIXTURE_DIR;
}

TEST_CASE("poset files round-trip through the generator-pair format") {
  const Poset vee = load_poset(kFixtureDir + "/vee5.json");
  CHECK(vee.same_structure(fixtures::vee5()));

  const Poset again = poset_from_json(poset_to_json(vee));
  CHECK(again.same_structure(vee));

  for (const char* name : {"antichain3", "hmgap4", "m3", "n5", "chain_3", "chain_4",
                           "boolean_2", "boolean_3"}) {
    const Poset p = load_poset(kFixtureDir + "/" + name + ".json");
    CHECK(poset_from_json(poset_to_json(p)).same_structure(p));
  }
  CHECK(load_poset(kFixtureDir + "/hmgap4.json").same_structure(fixtures::hmgap4()));
  CHECK(load_poset(kFixtureDir + "/boolean_3.json").same_structure(fixtures::boolean_algebra(3)));
}

TEST_CASE("malformed poset documents are rejected") {
  CHECK_THROWS_AS(load_poset(kFixtureDir + "/does_not_exist.json"), input_error);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a", "a"]})")), input_error);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a"], "le": [["a","b"]]})")),
                  input_error);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"le": []})")), input_error);
  CHECK_THROWS_AS(
      poset_from_json(Json::parse(R"({"elements": ["a","b"], "le": [["a","b"],["b","a"]]})")),
      input_error);
}

TEST_CASE("specification documents") {
  const Poset vee = fixtures::vee5();
  const JoinSpecification spec =
      spec_from_json(vee, load_json_file(kFixtureDir + "/vee5_spec.json"));
  CHECK(spec.contains(named(vee, {"x", "y"})));
  CHECK(spec.sets().size() == 6);

  // singletons are implicit on output
  const Json j = spec_to_json(spec);
  CHECK(j.at("sets").size() == 1);
  CHECK(spec_from_json(vee, j) == spec);

  CHECK_THROWS_AS(spec_from_json(vee, Json::parse(R"({"sets": [["a"]]})")), input_error);
  CHECK_THROWS_AS(spec_from_json(vee, Json::parse(R"({"sets": [[]]})")), input_error);
}

TEST_CASE("closure family documents") {
  const Poset anti = fixtures::antichain(3);
  const Json doc = Json::parse(R"({"closed": [[], ["a"], ["b"], ["c"], ["a","b","c"]]})");
  const ClosureFamily family = family_from_json(anti, doc);
  CHECK(family.size() == 5);
  CHECK(family_from_json(anti, family_to_json(family)) == family);
  CHECK_THROWS_AS(family_from_json(anti, Json::parse(R"({"closed": [["a"]]})")), input_error);
}

TEST_CASE("representation documents") {
  const Poset chain = fixtures::chain(3);
  const Representation rep = build_representation(chain, Cardinal::finite(3));
  const Json j = representation_to_json(rep);
  CHECK(j.at("m") == Json("omega"));
  CHECK(j.at("n") == Json(3));

  const Representation back = representation_from_json(j);
  CHECK(verify_representation(chain, back).ok());
  CHECK(back.ground == rep.ground);

  CHECK_THROWS_AS(representation_from_json(Json::parse(R"({"ground": ["g1","g1"], "map": {}})")),
                  input_error);
  CHECK_THROWS_AS(
      representation_from_json(Json::parse(R"({"ground": ["g1"], "map": {"x": ["g9"]}})")),
      input_error);
}

TEST_CASE("cardinals") {
  CHECK(cardinal_from_string("omega").is_omega());
  CHECK(cardinal_from_string("3") == Cardinal::finite(3));
  CHECK_THROWS_AS(cardinal_from_string("three"), input_error);
  CHECK(cardinal_from_json(cardinal_to_json(Cardinal::omega())).is_omega());
  CHECK(cardinal_from_json(cardinal_to_json(Cardinal::finite(7))) == Cardinal::finite(7));
  CHECK(Cardinal::finite(5) < Cardinal::omega());
  CHECK(Cardinal::finite(5) < Cardinal::finite(6));
  CHECK(Cardinal::omega().admits(1000000));
  CHECK_FALSE(Cardinal::finite(3).admits(3));
  CHECK(Cardinal::finite(3).admits(2));
}

TEST_CASE("frame reports serialize with the pinned fields") {
  const Poset anti = fixtures::antichain(3);
  const ClosureFamily family(anti, {Subset{}, named(anti, {"a"}), named(anti, {"b"}),
                                    named(anti, {"c"}), anti.universe()});
  const CompletionLattice lattice(family);
  const Json j = frame_report_to_json(lattice, is_frame(lattice));
  CHECK(j.contains("frame"));
  CHECK(j.contains("witness"));
  CHECK(j.contains("sigma_checked"));
  CHECK(j.at("frame") == Json(false));
  CHECK(j.at("witness").at("x") == Json::array({"a"}));
}
