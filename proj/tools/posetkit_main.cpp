#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "posetkit/campaign.hpp"
#include "posetkit/fixtures.hpp"
#include "posetkit/io.hpp"

namespace {

using posetkit::Cardinal;
using posetkit::Json;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    posetkit::save_json_file(out_path, j);
}

Json analyze(const posetkit::Poset& poset, const posetkit::JoinSpecification& spec) {
  using namespace posetkit;

  Json report;
  report["poset"] = poset_to_json(poset);
  report["spec"] = spec_to_json(spec);
  report["radius"] = cardinal_to_json(spec.radius());

  const ClosureFamily family = ideal_family(spec);
  const CompletionLattice lattice(family);
  Json completion;
  completion["size"] = lattice.size();
  Json elements = Json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i)
    elements.push_back(subset_to_json(poset, lattice.element(i)));
  completion["elements"] = std::move(elements);
  report["completion"] = std::move(completion);

  report["frame"] = frame_report_to_json(lattice, is_frame(lattice));
  report["main_theorem"] =
      equivalence_verdict_to_json(poset, lattice, check_frame_equivalence(spec));

  if (const auto witness = frame_failure_witness(spec)) {
    Json w;
    w["t"] = subset_to_json(poset, witness->joined_set);
    w["p"] = poset.label(witness->element);
    w["lhs"] = subset_to_json(poset, witness->lhs);
    w["rhs"] = subset_to_json(poset, witness->rhs);
    report["distributivity_failure"] = std::move(w);
  } else {
    report["distributivity_failure"] = nullptr;
  }

  Json meet_dist;
  for (Cardinal bound : {Cardinal::finite(3), Cardinal::omega()}) {
    const auto md = meet_distributive(poset, bound);
    Json entry;
    entry["holds"] = md.holds;
    if (md.witness) {
      Json w;
      w["a"] = poset.label(md.witness->element);
      w["x"] = subset_to_json(poset, md.witness->joined);
      entry["witness"] = std::move(w);
    } else {
      entry["witness"] = nullptr;
    }
    meet_dist[bound.str()] = std::move(entry);
  }
  report["meet_distributive"] = std::move(meet_dist);

  const auto cls = classify_triples(poset);
  Json triples;
  triples["class"] = triple_class_name(cls.cls);
  auto triple_json = [&](const std::optional<TripleWitness>& t) -> Json {
    if (!t) return nullptr;
    return Json::array({poset.label(t->a), poset.label(t->b), poset.label(t->c)});
  };
  triples["split"] = triple_json(cls.split);
  triples["indeterminate"] = triple_json(cls.indeterminate);
  report["triples"] = std::move(triples);

  Json one_step;
  for (Cardinal bound : {Cardinal::finite(3), Cardinal::omega()})
    one_step[bound.str()] = one_step_closure_check(poset, bound).holds;
  report["one_step_closure"] = std::move(one_step);

  if (const auto radius = minimal_radius(family))
    report["minimal_radius"] = cardinal_to_json(*radius);
  else
    report["minimal_radius"] = "not join-spec generated";

  return report;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    if (end > start) out.push_back(text.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite poset toolkit: closure operators, frames, representations"};
  app.require_subcommand(1);

  std::string poset_path, spec_path, gamma_text = "omega", out_path;
  auto* cmd_analyze = app.add_subcommand("analyze", "report on a poset and a specification");
  cmd_analyze->add_option("poset", poset_path, "poset JSON file")->required();
  cmd_analyze->add_option("--spec", spec_path, "specification JSON file");
  cmd_analyze->add_option("--gamma", gamma_text,
                          "size bound when no spec file is given (N or omega)");
  cmd_analyze->add_option("--out", out_path, "write the report here instead of stdout");

  std::string n_text;
  auto* cmd_represent = app.add_subcommand("represent", "build a powerset representation");
  cmd_represent->add_option("poset", poset_path, "poset JSON file")->required();
  cmd_represent->add_option("--n", n_text, "join size bound (N or omega)")->required();
  cmd_represent->add_option("--out", out_path, "write the representation here");

  posetkit::CampaignConfig config;
  std::string checks_text;
  auto* cmd_campaign = app.add_subcommand("campaign", "run randomized property suites");
  cmd_campaign->add_option("--seed", config.seed, "random seed");
  cmd_campaign->add_option("--max-size", config.max_size, "largest generated poset");
  cmd_campaign->add_option("--samples", config.samples, "instances per check");
  cmd_campaign->add_flag("--exhaustive", config.exhaustive,
                         "sweep all small posets instead of sampling");
  cmd_campaign->add_option("--checks", checks_text, "comma-separated check names");
  cmd_campaign->add_option("--out", out_path, "write the report here");

  std::string target;
  int search_size = 5, search_radius = 3, search_results = 5;
  auto* cmd_search = app.add_subcommand("search", "hunt for the smallest gap witnesses");
  cmd_search->add_option("target", target, "one of: hm_not_lmd, frame_fail_sigma, split_triple, "
                                           "indeterminate_no_split")
      ->required();
  cmd_search->add_option("--max-size", search_size, "largest size to scan");
  cmd_search->add_option("--radius", search_radius, "spec radius for frame_fail_sigma");
  cmd_search->add_option("--max-results", search_results, "instances to report");
  cmd_search->add_option("--out", out_path, "write the report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_analyze->parsed()) {
      const posetkit::Poset poset = posetkit::load_poset(poset_path);
      const posetkit::JoinSpecification spec =
          spec_path.empty()
              ? posetkit::bounded_spec(poset, posetkit::cardinal_from_string(gamma_text))
              : posetkit::spec_from_json(poset, posetkit::load_json_file(spec_path));
      emit(analyze(poset, spec), out_path);
      return 0;
    }
    if (cmd_represent->parsed()) {
      const posetkit::Poset poset = posetkit::load_poset(poset_path);
      const Cardinal bound = posetkit::cardinal_from_string(n_text);
      try {
        const auto rep = posetkit::build_representation(poset, bound);
        emit(posetkit::representation_to_json(rep), out_path);
        return 0;
      } catch (const posetkit::meet_distributivity_error& e) {
        Json refusal;
        refusal["refused"] = true;
        refusal["reason"] = e.what();
        Json w;
        w["a"] = poset.label(e.witness.element);
        w["x"] = posetkit::subset_to_json(poset, e.witness.joined);
        refusal["witness"] = std::move(w);
        emit(refusal, out_path);
        return 1;
      }
    }
    if (cmd_campaign->parsed()) {
      config.checks = split_csv(checks_text);
      const auto result = posetkit::run_campaign(config);
      emit(result.to_json(), out_path);
      return result.ok() ? 0 : 1;
    }
    if (cmd_search->parsed()) {
      const auto result =
          posetkit::run_search(target, search_size, search_results, search_radius);
      emit(result.to_json(), out_path);
      return 0;
    }
  } catch (const posetkit::input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const posetkit::size_guard_error& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return 2;
  } catch (const posetkit::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
