#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetkit/enumerate.hpp"
#include "posetkit/io.hpp"
#include "posetkit/representation.hpp"

namespace posetkit {

struct CampaignConfig {
  std::uint64_t seed = 1;
  int max_size = 6;
  int samples = 200;
  bool exhaustive = false;  // sweep all small posets (and specs) instead of sampling
  std::vector<std::string> checks;  // empty = every known check
};

// One generated test subject. Checks use whichever parts they need.
struct Instance {
  Poset poset;
  std::optional<JoinSpecification> spec;
  std::optional<ClosureFamily> family;
  Json to_json() const;
};

struct Violation {
  std::string detail;
  Json instance;
};

struct CheckResult {
  std::string name;
  std::uint64_t instances = 0;
  std::vector<Violation> violations;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<CheckResult> results;
  bool ok() const;
  Json to_json() const;
};

const std::vector<std::string>& campaign_check_names();
CampaignResult run_campaign(const CampaignConfig& config);

// Runs one named check against one instance; nullopt means it holds.
std::optional<std::string> evaluate_check(const std::string& name, const Instance& instance);

// Greedy elementwise minimization: keeps removing elements while the check
// still fails on the restricted instance.
Instance shrink_instance(const std::string& check, Instance instance);

// Restriction of an instance to the elements outside `removed`.
std::optional<Instance> restrict_instance(const Instance& instance, int removed);

struct SearchResult {
  std::string target;
  int max_size = 0;
  std::optional<int> found_size;
  std::vector<int> exhausted_sizes;  // sizes fully scanned without a hit
  std::vector<Json> instances;
  Json to_json() const;
};

const std::vector<std::string>& search_target_names();

// Scans isomorphism classes by increasing size and reports the smallest
// instances exhibiting the target, so hits are minimal by construction.
SearchResult run_search(const std::string& target, int max_size, int max_results = 5,
                        int spec_radius = 3);

}  // namespace posetkit
