#include "posetkit/campaign.hpp"

#include <algorithm>

namespace posetkit {

namespace {

std::string set_str(const Poset& p, Subset s) { return p.set_to_string(s); }

// ---- individual checks ----------------------------------------------------

std::optional<std::string> check_main_theorem_inst(const Instance& in) {
  const auto v = check_frame_equivalence(*in.spec);
  if (v.biconditional_ok()) return std::nullopt;
  return "closure/saturation agreement is " + std::to_string(v.closure_eq_saturation) +
         " but frame is " + std::to_string(v.frame.frame);
}

std::optional<std::string> check_lsub(const Instance& in) {
  const SaturationOperator sat(*in.spec);
  const Poset& p = in.poset;
  for (Subset d : p.all_downsets())
    if (!sat.family().apply(d).includes(sat.value(d)))
      return "saturation escapes the closure at " + set_str(p, d);
  return std::nullopt;
}

std::optional<std::string> check_ldist(const Instance& in) {
  const SaturationOperator sat(*in.spec);
  const Poset& p = in.poset;
  const auto& closed = sat.family().closed_sets();
  const std::size_t n = closed.size();
  const std::size_t cap = 24;  // keep the pairwise sweep bounded
  for (std::size_t ii = 0; ii < std::min(n, cap); ++ii)
    for (std::size_t a = 0; a < std::min(n, cap); ++a)
      for (std::size_t b = a; b < std::min(n, cap); ++b) {
        const Subset i_set = closed[ii];
        const Subset k_union = closed[a] | closed[b];
        const Subset lhs = i_set & sat.value(k_union);
        const Subset rhs =
            sat.family().apply(p.down_closure((i_set & closed[a]) | (i_set & closed[b])));
        if (!rhs.includes(lhs))
          return "intersection with a saturated union escapes at I=" + set_str(p, i_set) +
                 ", K=" + set_str(p, closed[a]) + "," + set_str(p, closed[b]);
      }
  return std::nullopt;
}

std::optional<std::string> check_lfix(const Instance& in) {
  const Poset& p = in.poset;
  if (p.size() > 12) return std::nullopt;
  const SaturationOperator sat(*in.spec);
  for (std::uint64_t m = 1; m <= p.universe().bits(); ++m) {
    const Subset s = Subset::of_bits(m);
    const Subset closed = sat.family().apply(p.down_closure(s));
    for (int q = 0; q < p.size(); ++q)
      if (closed == p.down_of(q)) {
        const auto j = p.join_of(s);
        if (!j || *j != q)
          return "closure of " + set_str(p, s) + " is principal at " + p.label(q) +
                 " but that is not its join";
      }
    const auto j = p.join_of(s);
    if (j && closed.contains(*j) && !sat.preserved().contains(s))
      return "join of " + set_str(p, s) + " lands in its closure but the set is not preserved";
  }
  return std::nullopt;
}

std::optional<std::string> check_lequiv(const Instance& in) {
  const Poset& p = in.poset;
  if (p.size() > 12) return std::nullopt;
  const ClosureFamily& f = *in.family;
  const JoinSpecification preserved = preserved_spec(f);
  for (std::uint64_t m = 1; m <= p.universe().bits(); ++m) {
    const Subset s = Subset::of_bits(m);
    const auto j = p.join_of(s);
    const bool via_embedding = j && f.apply(p.down_closure(s)) == p.down_of(*j);
    if (via_embedding != preserved.contains(s))
      return "the two preservation characterizations disagree on " + set_str(p, s);
  }
  return std::nullopt;
}

std::optional<std::string> check_ptrans(const Instance& in) {
  const Poset& p = in.poset;
  if (p.size() > 12) return std::nullopt;
  const ClosureFamily family = ideal_family(*in.spec);
  for (std::uint64_t m = 0; m <= p.universe().bits(); ++m) {
    const Subset s = Subset::of_bits(m);
    // independent route: intersect every ideal containing s
    Subset inter = p.universe();
    for (Subset c : family.closed_sets())
      if (c.includes(s)) inter = inter & c;
    const Subset iterated = spec_closure(*in.spec, s).value;
    if (iterated != inter)
      return "iterated closure of " + set_str(p, s) + " differs from the smallest ideal";
    if (family.apply(s) != inter)
      return "family lookup of " + set_str(p, s) + " differs from the smallest ideal";
  }
  return std::nullopt;
}

std::optional<std::string> check_pmorph(const Instance& in) {
  const CompletionLattice lattice(ideal_family(*in.spec));
  const auto report = phi_preservation_report(lattice, *in.spec);
  if (report.ok()) return std::nullopt;
  std::string detail = "embedding preservation fails:";
  for (const auto& v : report.meet_violations) detail += " " + v;
  for (const auto& v : report.join_violations) detail += " " + v;
  return detail;
}

std::optional<std::string> check_galois(const Instance& in) {
  const auto g = galois_check(*in.spec, *in.family);
  if (g.consistent()) return std::nullopt;
  return std::string("adjunction sides disagree: closure_below=") +
         (g.closure_below ? "true" : "false") +
         ", spec_contained=" + (g.spec_contained ? "true" : "false");
}

std::optional<std::string> check_crelate(const Instance& in) {
  const Poset& p = in.poset;
  const ClosureFamily& f = *in.family;
  const JoinSpecification& u = *in.spec;

  const ClosureFamily from_preserved = ideal_family(preserved_spec(f));
  for (Subset d : p.all_downsets())
    if (!f.apply(d).includes(from_preserved.apply(d)))
      return "closure induced by the preserved spec is not below the family at " + set_str(p, d);

  const ClosureFamily u_ideals = ideal_family(u);
  const JoinSpecification u_preserved = preserved_spec(u_ideals);
  for (Subset s : u.sets())
    if (!u_preserved.contains(s))
      return "specification member " + set_str(p, s) + " is not preserved by its own ideals";

  if (!(ideal_family(u_preserved) == u_ideals))
    return "re-deriving the specification changes the ideal family";

  if (!(preserved_spec(from_preserved) == preserved_spec(f)))
    return "re-deriving the family changes the preserved specification";
  return std::nullopt;
}

std::optional<std::string> check_largest_completion(const Instance& in) {
  const Poset& p = in.poset;
  const ClosureFamily& f = *in.family;
  const JoinSpecification& u = *in.spec;
  const auto& sets = u.sets();
  const auto& joins = u.joins();
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!f.apply(sets[i]).contains(joins[i])) return std::nullopt;  // family does not preserve u
  for (Subset c : f.closed_sets())
    if (!is_ideal(u, c))
      return "family preserves the specification but member " + set_str(p, c) +
             " is not an ideal of it";
  return std::nullopt;
}

std::optional<std::string> check_dual_roundtrip(const Instance& in) {
  const Poset& p = in.poset;
  const ClosureFamily& f = *in.family;
  const CompletionLattice lattice(f);
  // Pull each lattice element back along the embedding and re-collect the
  // closed sets; this must reproduce the family.
  std::vector<Subset> recovered;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    Subset preimage;
    for (int q = 0; q < p.size(); ++q)
      if (lattice.leq(lattice.phi(q), i)) preimage.add(q);
    recovered.push_back(preimage);
  }
  const ClosureFamily rebuilt = ClosureFamily::unchecked(f.poset_ptr(), std::move(recovered));
  if (!(rebuilt == f)) return "principal preimages do not recover the closure family";
  return std::nullopt;
}

std::optional<std::string> check_lmd_implies_frame(const Instance& in) {
  for (Cardinal bound : {Cardinal::finite(3), Cardinal::omega()}) {
    const auto verdict = meet_distributive_frame_check(in.poset, bound);
    if (!verdict.consistent())
      return "meet-distributive at " + bound.str() + " but the completion is not a frame";
  }
  return std::nullopt;
}

std::optional<std::string> check_hm_chain(const Instance& in) {
  const Poset& p = in.poset;
  const bool dist = meet_distributive(p, Cardinal::omega()).holds;
  const bool one_step = one_step_closure_check(p, Cardinal::omega()).holds;
  if (dist && !one_step) return "meet-distributive poset fails the one-step closure property";
  if (one_step) {
    const auto rep =
        completion_representation(p, bounded_spec(p, Cardinal::omega()), Cardinal::omega());
    if (!rep) return "one-step poset has a non-frame completion";
    if (!verify_representation(p, *rep).ok())
      return "representation derived from a one-step poset fails verification";
  }
  return std::nullopt;
}

std::optional<std::string> check_classify(const Instance& in) {
  const Poset& p = in.poset;
  const auto cls = classify_triples(p);
  if (cls.split && cls.cls != TripleClass::split) return "split triple but class is not split";
  if (!cls.split && cls.indeterminate && cls.cls != TripleClass::indeterminate)
    return "indeterminate triple without split but class differs";
  const bool dist3 = meet_distributive(p, Cardinal::finite(3)).holds;
  if (dist3 != (cls.cls == TripleClass::distributive))
    return "triple class disagrees with meet-distributivity at 3";
  if (cls.cls == TripleClass::distributive) {
    const auto rep = build_representation(p, Cardinal::finite(3));
    if (!verify_representation(p, rep).ok())
      return "distributive-class poset yields a representation that fails verification";
  }
  return std::nullopt;
}

std::optional<std::string> check_representation(const Instance& in) {
  const Poset& p = in.poset;
  for (Cardinal bound : {Cardinal::finite(3), Cardinal::omega()}) {
    if (!meet_distributive(p, bound).holds) continue;
    const auto rep = build_representation(p, bound);
    const auto report = verify_representation(p, rep);
    if (!report.ok())
      return "representation at bound " + bound.str() + " fails verification";
  }
  return std::nullopt;
}

std::optional<std::string> check_cbound(const Instance& in) {
  const Poset& p = in.poset;
  const JoinSpecification& spec = *in.spec;
  const auto witness = frame_failure_witness(spec);
  if (!witness) return std::nullopt;  // frame: nothing to certify
  const auto& w = *witness;
  if (!spec.contains(w.joined_set)) return "witness set is not a member of the specification";
  if (!spec.radius().admits(w.joined_set.count()))
    return "witness set is not smaller than the radius";
  const auto j = p.join_of(w.joined_set);
  if (!j || !p.leq(w.element, *j)) return "witness element is not below the join";
  const ClosureFamily family = ideal_family(spec);
  const Subset lhs = p.down_of(w.element);
  const Subset rhs = family.apply(p.down_closure(w.joined_set) & p.down_of(w.element));
  if (lhs == rhs) return "witness does not actually violate distributivity";
  return std::nullopt;
}

struct CheckDef {
  const char* name;
  bool wants_spec;
  bool wants_family;
  std::optional<std::string> (*eval)(const Instance&);
};

const CheckDef kChecks[] = {
    {"main_theorem", true, false, check_main_theorem_inst},
    {"lsub", true, false, check_lsub},
    {"ldist", true, false, check_ldist},
    {"lfix", true, false, check_lfix},
    {"lequiv", false, true, check_lequiv},
    {"ptrans", true, false, check_ptrans},
    {"pmorph", true, false, check_pmorph},
    {"galois", true, true, check_galois},
    {"crelate", true, true, check_crelate},
    {"largest_completion", true, true, check_largest_completion},
    {"dual_roundtrip", false, true, check_dual_roundtrip},
    {"lmd_implies_frame", false, false, check_lmd_implies_frame},
    {"hm_chain", false, false, check_hm_chain},
    {"classify", false, false, check_classify},
    {"representation", false, false, check_representation},
    {"cbound", true, false, check_cbound},
};

const CheckDef* find_check(const std::string& name) {
  for (const auto& c : kChecks)
    if (name == c.name) return &c;
  return nullptr;
}

}  // namespace

Json Instance::to_json() const {
  Json j;
  j["poset"] = poset_to_json(poset);
  if (spec) j["spec"] = spec_to_json(*spec);
  if (family) j["family"] = family_to_json(*family);
  return j;
}

const std::vector<std::string>& campaign_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : kChecks) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

std::optional<std::string> evaluate_check(const std::string& name, const Instance& instance) {
  const CheckDef* def = find_check(name);
  if (!def) throw input_error("unknown check: " + name);
  if (def->wants_spec && !instance.spec) throw input_error(name + " requires a specification");
  if (def->wants_family && !instance.family) throw input_error(name + " requires a family");
  return def->eval(instance);
}

std::optional<Instance> restrict_instance(const Instance& instance, int removed) {
  const Poset& p = instance.poset;
  const int n = p.size();
  if (n <= 1) return std::nullopt;

  std::vector<int> remap(n, -1);
  std::vector<std::string> labels;
  for (int i = 0, next = 0; i < n; ++i)
    if (i != removed) {
      remap[i] = next++;
      labels.push_back(p.label(i));
    }
  auto restrict_set = [&](Subset s) {
    Subset out;
    s.for_each([&](int e) {
      if (e != removed) out.add(remap[e]);
    });
    return out;
  };

  std::vector<Subset> up(n - 1);
  for (int i = 0; i < n; ++i)
    if (i != removed) up[remap[i]] = restrict_set(p.up_of(i));
  Instance out{Poset::from_up_sets(std::move(labels), std::move(up)), std::nullopt, std::nullopt};
  const auto shared = std::make_shared<Poset>(out.poset);

  if (instance.spec) {
    std::vector<Subset> sets;
    for (Subset s : instance.spec->sets()) {
      if (s.contains(removed)) continue;
      const Subset r = restrict_set(s);
      if (!r.empty() && out.poset.join_of(r)) sets.push_back(r);
    }
    out.spec = JoinSpecification(shared, sets);
  }
  if (instance.family) {
    std::vector<Subset> sets;
    for (Subset s : instance.family->closed_sets()) sets.push_back(restrict_set(s));
    out.family = ClosureFamily::unchecked(shared, std::move(sets));
  }
  return out;
}

Instance shrink_instance(const std::string& check, Instance instance) {
  bool reduced = true;
  while (reduced && instance.poset.size() > 1) {
    reduced = false;
    for (int e = 0; e < instance.poset.size(); ++e) {
      auto candidate = restrict_instance(instance, e);
      if (!candidate) continue;
      try {
        if (evaluate_check(check, *candidate)) {
          instance = std::move(*candidate);
          reduced = true;
          break;
        }
      } catch (const error&) {
        // restriction left this check inapplicable; keep the larger instance
      }
    }
  }
  return instance;
}

namespace {

Instance make_instance(std::mt19937_64& rng, const CheckDef& def, int max_size) {
  Instance out{random_poset_up_to(rng, max_size), std::nullopt, std::nullopt};
  if (def.wants_spec) out.spec = random_spec(rng, out.poset);
  if (def.wants_family) out.family = random_standard_family(rng, out.poset);
  return out;
}

void record_violation(CheckResult& result, const std::string& check, Instance instance,
                      const std::string& detail) {
  Instance small = shrink_instance(check, std::move(instance));
  result.violations.push_back({detail, small.to_json()});
}

CheckResult run_one_check(const CheckDef& def, const CampaignConfig& config,
                          std::uint64_t check_index) {
  CheckResult result;
  result.name = def.name;

  if (config.exhaustive) {
    std::mt19937_64 aux_rng(config.seed * 0x9e3779b97f4a7c15ull + check_index);
    for (int n = 1; n <= config.max_size; ++n) {
      for (const Poset& p : all_posets_up_to_iso(n)) {
        auto visit = [&](Instance inst) {
          ++result.instances;
          if (auto detail = def.eval(inst))
            record_violation(result, def.name, std::move(inst), *detail);
        };
        if (def.wants_spec) {
          for_each_constraint_spec(p, [&](const JoinSpecification& spec) {
            Instance inst{p, spec, std::nullopt};
            if (def.wants_family) inst.family = random_standard_family(aux_rng, p);
            visit(std::move(inst));
          });
        } else if (def.wants_family) {
          Instance inst{p, std::nullopt, random_standard_family(aux_rng, p)};
          visit(std::move(inst));
        } else {
          visit(Instance{p, std::nullopt, std::nullopt});
        }
      }
    }
    return result;
  }

  std::mt19937_64 rng(config.seed * 0x9e3779b97f4a7c15ull + check_index);
  for (int i = 0; i < config.samples; ++i) {
    Instance inst = make_instance(rng, def, config.max_size);
    ++result.instances;
    if (auto detail = def.eval(inst))
      record_violation(result, def.name, std::move(inst), *detail);
  }
  return result;
}

}  // namespace

bool CampaignResult::ok() const {
  for (const auto& r : results)
    if (!r.violations.empty()) return false;
  return true;
}

Json CampaignResult::to_json() const {
  Json j;
  j["seed"] = config.seed;
  j["max_size"] = config.max_size;
  j["samples"] = config.samples;
  j["exhaustive"] = config.exhaustive;
  Json checks = Json::array();
  for (const auto& r : results) {
    Json c;
    c["check"] = r.name;
    c["instances"] = r.instances;
    Json violations = Json::array();
    for (const auto& v : r.violations) {
      Json item;
      item["detail"] = v.detail;
      item["instance"] = v.instance;
      violations.push_back(std::move(item));
    }
    c["violations"] = std::move(violations);
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["ok"] = ok();
  return j;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  std::vector<std::string> selected =
      config.checks.empty() ? campaign_check_names() : config.checks;
  CampaignResult out;
  out.config = config;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const CheckDef* def = find_check(selected[i]);
    if (!def) throw input_error("unknown check: " + selected[i]);
    out.results.push_back(run_one_check(*def, config, i + 1));
  }
  return out;
}

// ---- search ----------------------------------------------------------------

const std::vector<std::string>& search_target_names() {
  static const std::vector<std::string> names = {"hm_not_lmd", "frame_fail_sigma", "split_triple",
                                                 "indeterminate_no_split"};
  return names;
}

SearchResult run_search(const std::string& target, int max_size, int max_results,
                        int spec_radius) {
  const auto& names = search_target_names();
  if (std::find(names.begin(), names.end(), target) == names.end())
    throw input_error("unknown search target: " + target);
  if (max_size < 1) throw input_error("search size must be at least 1");

  SearchResult out;
  out.target = target;
  out.max_size = max_size;

  for (int n = 1; n <= max_size && !out.found_size; ++n) {
    std::vector<Json> hits;
    for (const Poset& p : all_posets_up_to_iso(n)) {
      if (target == "hm_not_lmd") {
        if (one_step_closure_check(p, Cardinal::omega()).holds &&
            !meet_distributive(p, Cardinal::omega()).holds)
          hits.push_back(Instance{p, std::nullopt, std::nullopt}.to_json());
      } else if (target == "split_triple") {
        if (classify_triples(p).cls == TripleClass::split)
          hits.push_back(Instance{p, std::nullopt, std::nullopt}.to_json());
      } else if (target == "indeterminate_no_split") {
        if (classify_triples(p).cls == TripleClass::indeterminate)
          hits.push_back(Instance{p, std::nullopt, std::nullopt}.to_json());
      } else {  // frame_fail_sigma
        for_each_constraint_spec(p, [&](const JoinSpecification& spec) {
          if (static_cast<int>(hits.size()) >= max_results) return;
          if (spec.radius() > Cardinal::finite(spec_radius)) return;
          const CompletionLattice lattice(ideal_family(spec));
          if (!is_frame(lattice).frame)
            hits.push_back(Instance{p, spec, std::nullopt}.to_json());
        });
      }
      if (static_cast<int>(hits.size()) >= max_results) break;
    }
    if (!hits.empty()) {
      out.found_size = n;
      out.instances = std::move(hits);
      if (static_cast<int>(out.instances.size()) > max_results)
        out.instances.resize(max_results);
    } else {
      out.exhausted_sizes.push_back(n);
    }
  }
  return out;
}

Json SearchResult::to_json() const {
  Json j;
  j["target"] = target;
  j["max_size"] = max_size;
  j["found_size"] = found_size ? Json(*found_size) : Json(nullptr);
  j["exhausted_sizes"] = exhausted_sizes;
  j["instances"] = instances;
  return j;
}

}  // namespace posetkit
