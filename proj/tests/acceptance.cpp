// Acceptance suite: reproduces the worked examples exactly and runs the
// property sweeps at full scale. One PASS/FAIL line per criterion; exit
// status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "posetkit/campaign.hpp"
#include "posetkit/enumerate.hpp"
#include "posetkit/fixtures.hpp"
#include "posetkit/io.hpp"

using namespace posetkit;

namespace {

const std::string kFixtureDir = POSETKIT_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& msg) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
  void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
};

Subset named(const Poset& p, std::initializer_list<const char*> labels) {
  Subset s;
  for (const char* l : labels) s.add(p.require_index(l));
  return s;
}

// criterion 1: the antichain family, its preserved spec, and the two
// closure operators it separates
Outcome criterion1() {
  Outcome out;
  const Poset anti = load_poset(kFixtureDir + "/antichain3.json");
  const ClosureFamily family(anti, {Subset{}, named(anti, {"a"}), named(anti, {"b"}),
                                    named(anti, {"c"}), anti.universe()});

  const JoinSpecification preserved = preserved_spec(family);
  std::vector<Subset> expected = {named(anti, {"a"}), named(anti, {"b"}), named(anti, {"c"})};
  out.require(preserved.sets() == expected, "preserved spec is not exactly the singletons");

  const ClosureFamily induced = ideal_family(preserved);
  out.require(induced.size() == 8, "induced ideals are not the full powerset");
  out.require(induced.closed_sets() == anti.all_downsets(), "induced ideals differ from downsets");

  out.require(family.apply(named(anti, {"a", "b"})) == anti.universe(),
              "original closure of {a,b} is not {a,b,c}");
  out.require(spec_closure(preserved, named(anti, {"a", "b"})).value == named(anti, {"a", "b"}),
              "induced closure of {a,b} is not {a,b}");
  return out;
}

// criterion 2: the preserved specification strictly extends the input one
Outcome criterion2() {
  Outcome out;
  const Poset vee = load_poset(kFixtureDir + "/vee5.json");
  const JoinSpecification spec =
      spec_from_json(vee, load_json_file(kFixtureDir + "/vee5_spec.json"));
  const JoinSpecification preserved = preserved_spec(ideal_family(spec));
  out.require(preserved.contains(named(vee, {"x'", "y'"})), "{x',y'} is not preserved");
  out.require(!spec.contains(named(vee, {"x'", "y'"})), "{x',y'} is already specified");
  return out;
}

// criterion 3: the four-element gap poset
Outcome criterion3() {
  Outcome out;
  const Poset gap = load_poset(kFixtureDir + "/hmgap4.json");

  const auto md = meet_distributive(gap, Cardinal::finite(3));
  out.require(!md.holds, "hmgap4 should fail meet-distributivity at 3");
  if (md.witness) {
    out.require(gap.label(md.witness->element) == "a", "witness element is not a");
    out.require(md.witness->joined == named(gap, {"b", "c"}), "witness set is not {b,c}");
  } else {
    out.fail("no witness returned");
  }

  out.require(one_step_closure_check(gap, Cardinal::finite(3)).holds, "one-step fails at 3");
  out.require(one_step_closure_check(gap, Cardinal::omega()).holds, "one-step fails at omega");
  out.require(classify_triples(gap).cls == TripleClass::indeterminate,
              "class is not indeterminate");
  return out;
}

// criterion 4: closure-equals-saturation iff frame, exhaustively over all
// small posets and every specification behaviour, plus seeded random
// instances at sizes 6..8
Outcome criterion4(std::vector<std::pair<Poset, std::vector<Subset>>>& non_frames) {
  Outcome out;
  std::uint64_t checked = 0;
  for (int n = 1; n <= 5 && out.pass; ++n) {
    for (const Poset& p : all_posets_up_to_iso(n)) {
      for_each_constraint_spec(p, [&](const JoinSpecification& spec) {
        if (!out.pass) return;
        ++checked;
        const auto verdict = check_frame_equivalence(spec);
        if (!verdict.biconditional_ok())
          out.fail("biconditional violated on " + std::to_string(n) + "-element poset");
        if (!verdict.frame.frame) {
          std::vector<Subset> keep;
          for (Subset s : spec.sets())
            if (s.count() >= 2) keep.push_back(s);
          non_frames.emplace_back(p, std::move(keep));
        }
      });
      if (!out.pass) break;
    }
  }

  std::mt19937_64 rng(20260811);
  for (int i = 0; i < 1000 && out.pass; ++i) {
    const Poset p = random_poset(rng, 6 + static_cast<int>(rng() % 3));
    const JoinSpecification spec = random_spec(rng, p);
    ++checked;
    const auto verdict = check_frame_equivalence(spec);
    if (!verdict.biconditional_ok()) out.fail("biconditional violated on a random instance");
    if (!verdict.frame.frame) {
      std::vector<Subset> keep;
      for (Subset s : spec.sets())
        if (s.count() >= 2) keep.push_back(s);
      non_frames.emplace_back(p, std::move(keep));
    }
  }
  out.detail = std::to_string(checked) + " instances, " + std::to_string(non_frames.size()) +
               " non-frames";
  return out;
}

// criterion 5: every non-frame instance yields a verified distributivity
// failure witness below the radius
Outcome criterion5(const std::vector<std::pair<Poset, std::vector<Subset>>>& non_frames) {
  Outcome out;
  std::size_t verified = 0;
  for (const auto& [poset, sets] : non_frames) {
    if (!out.pass) break;
    const JoinSpecification spec(poset, sets);
    const auto witness = frame_failure_witness(spec);
    if (!witness) {
      out.fail("non-frame instance produced no witness");
      break;
    }
    const auto& w = *witness;
    if (!spec.contains(w.joined_set)) out.fail("witness set outside the specification");
    if (!spec.radius().admits(w.joined_set.count())) out.fail("witness set not below the radius");
    const auto j = poset.join_of(w.joined_set);
    if (!j || !poset.leq(w.element, *j)) out.fail("witness element not below the join");
    const ClosureFamily family = ideal_family(spec);
    const Subset lhs = poset.down_of(w.element);
    const Subset rhs = family.apply(poset.down_closure(w.joined_set) & poset.down_of(w.element));
    if (lhs == rhs) out.fail("witness does not violate distributivity");
    if (rhs.contains(w.element)) out.fail("witness element not missing from the right side");
    ++verified;
  }
  out.detail = std::to_string(verified) + " witnesses verified";
  return out;
}

// criterion 6: representations for every meet-distributive poset in the
// exhaustive sweep and for 500 random meet-distributive instances
Outcome criterion6() {
  Outcome out;
  std::uint64_t built = 0;

  auto attempt = [&](const Poset& p, Cardinal bound) {
    if (!out.pass) return;
    if (!meet_distributive(p, bound).holds) return;
    try {
      const Representation rep = build_representation(p, bound);
      const auto report = verify_representation(p, rep);
      if (!report.ok()) out.fail("verification failed at bound " + bound.str());
      if (!(rep.meet_bound == Cardinal::omega())) out.fail("meet bound is not omega");
      ++built;
    } catch (const error& e) {
      out.fail(std::string("construction failed: ") + e.what());
    }
  };

  for (int n = 1; n <= 5 && out.pass; ++n)
    for (const Poset& p : all_posets_up_to_iso(n))
      for (Cardinal bound :
           {Cardinal::finite(3), Cardinal::finite(4), Cardinal::finite(5), Cardinal::omega()})
        attempt(p, bound);

  std::mt19937_64 rng(77002);
  std::uint64_t random_instances = 0;
  for (int tries = 0; random_instances < 500 && tries < 50000 && out.pass; ++tries) {
    const Poset p = random_poset_up_to(rng, 6);
    const Cardinal bound = (rng() & 1) ? Cardinal::finite(3) : Cardinal::omega();
    if (!meet_distributive(p, bound).holds) continue;
    ++random_instances;
    attempt(p, bound);
  }
  if (random_instances < 500) out.fail("could not gather 500 random meet-distributive instances");
  out.detail = std::to_string(built) + " representations built and verified";
  return out;
}

// criterion 7: the adjunction suite at 1000 seeded instances per property
Outcome criterion7() {
  Outcome out;
  CampaignConfig config;
  config.seed = 424242;
  config.max_size = 6;
  config.samples = 1000;
  config.checks = {"galois", "crelate", "lfix", "lequiv", "lsub",
                   "ldist",  "ptrans",  "pmorph"};
  const CampaignResult result = run_campaign(config);
  std::uint64_t instances = 0;
  for (const auto& r : result.results) {
    instances += r.instances;
    if (!r.violations.empty())
      out.fail(r.name + ": " + std::to_string(r.violations.size()) + " violations");
  }
  out.detail = std::to_string(instances) + " instances across " +
               std::to_string(result.results.size()) + " properties";
  return out;
}

// criterion 8: the implication chain between meet-distributivity and the
// one-step property, and the smallest-witness search
Outcome criterion8() {
  Outcome out;

  std::uint64_t corpus = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : all_posets_up_to_iso(n)) {
      ++corpus;
      if (meet_distributive(p, Cardinal::omega()).holds &&
          !one_step_closure_check(p, Cardinal::omega()).holds)
        out.fail("meet-distributive poset without the one-step property at size " +
                 std::to_string(n));
    }

  const Poset gap = fixtures::hmgap4();
  out.require(one_step_closure_check(gap, Cardinal::omega()).holds &&
                  !meet_distributive(gap, Cardinal::omega()).holds,
              "hmgap4 is not a one-step-but-not-distributive instance");

  const SearchResult search = run_search("hm_not_lmd", 4);
  out.require(search.found_size.has_value(), "search found no instance");

  // As stated, the acceptance checklist expects the four-element instance
  // to be minimal, with sizes up to three exhaustively clear. The scan
  // refutes that: a < t, b < t is one-step, yet a ^ (b v t) = a is defined
  // while a ^ b is not. The assertion is kept as written and reports the
  // counterexample instead of being weakened.
  if (search.found_size && *search.found_size != 4) {
    std::string inst = search.instances.empty() ? "?" : search.instances.front().dump();
    out.fail("expected no instance below four elements; exhaustive search found one at size " +
             std::to_string(*search.found_size) + ": " + inst);
  }
  if (out.detail.empty()) out.detail = std::to_string(corpus) + " corpus posets checked";
  return out;
}

// criterion 9: triple classification consistency
Outcome criterion9() {
  Outcome out;
  const Poset m3 = load_poset(kFixtureDir + "/m3.json");
  out.require(classify_triples(m3).cls == TripleClass::split, "m3 is not in the split class");
  out.require(!decide_representable(m3, Cardinal::finite(3), Cardinal::finite(3), 4)
                   .found.has_value(),
              "m3 should have no bounded representation");

  for (const char* name : {"boolean_2", "boolean_3"}) {
    const Poset b = load_poset(kFixtureDir + "/" + name + ".json");
    out.require(classify_triples(b).cls == TripleClass::distributive,
                std::string(name) + " is not in the distributive class");
    const Representation rep = build_representation(b, Cardinal::finite(3));
    out.require(verify_representation(b, rep).ok(), std::string(name) + " fails verification");
  }

  std::uint64_t split = 0, indeterminate = 0, distributive = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : all_posets_up_to_iso(n)) {
      const auto cls = classify_triples(p);
      switch (cls.cls) {
        case TripleClass::split: ++split; break;
        case TripleClass::indeterminate: ++indeterminate; break;
        case TripleClass::distributive: ++distributive; break;
      }
      if (cls.split && cls.cls != TripleClass::split) out.fail("split class mismatch");
      if (!cls.split && cls.indeterminate && cls.cls != TripleClass::indeterminate)
        out.fail("indeterminate class mismatch");
      if ((cls.cls == TripleClass::distributive) !=
          meet_distributive(p, Cardinal::finite(3)).holds)
        out.fail("distributive class does not match meet-distributivity");
    }
  out.detail = "classes over the corpus: split " + std::to_string(split) + ", indeterminate " +
               std::to_string(indeterminate) + ", distributive " + std::to_string(distributive);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
  };

  std::vector<std::pair<Poset, std::vector<Subset>>> non_frames;
  const std::vector<Criterion> criteria = {
      {1, "antichain closure family reproduction", criterion1},
      {2, "preserved specification strictly grows", criterion2},
      {3, "four-element gap poset reproduction", criterion3},
      {4, "closure/saturation-frame equivalence sweep",
       [&] { return criterion4(non_frames); }},
      {5, "distributivity failure witnesses", [&] { return criterion5(non_frames); }},
      {6, "representations for meet-distributive posets", criterion6},
      {7, "adjunction property suite", criterion7},
      {8, "one-step versus meet-distributivity chain", criterion8},
      {9, "triple classification consistency", criterion9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] criterion %d: %s (%lld ms)%s%s\n", outcome.pass ? "PASS" : "FAIL",
                c.number, c.title, static_cast<long long>(ms),
                outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
