#include "posetkit/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace posetkit {

namespace {

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

// Non-redundant join requirements: (down-set D, join of D) with the join
// outside D. Everything a specification does to down-sets factors through
// these pairs.
std::vector<Subset> constraint_downsets(const Poset& p, std::size_t guard) {
  std::vector<Subset> out;
  for (Subset d : p.all_downsets(guard)) {
    if (d.empty()) continue;
    const auto j = p.join_of(d);
    if (j && !d.contains(*j)) out.push_back(d);
  }
  return out;
}

}  // namespace

std::uint64_t canonical_encoding(const Poset& poset) {
  const int n = poset.size();
  if (n > 8) throw size_guard_error("canonical encoding supports at most 8 elements");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t enc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (poset.leq(perm[i], perm[j])) enc |= std::uint64_t{1} << (i * n + j);
    best = std::min(best, enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && canonical_encoding(a) == canonical_encoding(b);
}

std::vector<Poset> all_posets_up_to_iso(int n) {
  if (n < 1 || n > 6) throw size_guard_error("exhaustive enumeration supports 1..6 elements");

  // Strict relations compatible with the index order; every isomorphism
  // class has such a representative.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::unordered_set<std::uint64_t> seen;
  std::vector<Poset> out;
  const auto labels = index_labels(n);

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Subset> up(n);
    for (int i = 0; i < n; ++i) up[i].add(i);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) up[slots[s].first].add(slots[s].second);

    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i) {
      Subset reach = up[i];
      up[i].for_each([&](int j) { reach = reach | up[j]; });
      if (!(reach == up[i])) transitive = false;
    }
    if (!transitive) continue;

    Poset p = Poset::from_up_sets(labels, up);
    if (seen.insert(canonical_encoding(p)).second) out.push_back(std::move(p));
  }
  return out;
}

Poset random_poset(std::mt19937_64& rng, int size) {
  if (size < 1 || size > 64) throw input_error("random poset size must be 1..64");
  std::uniform_real_distribution<double> density_dist(0.1, 0.6);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double density = density_dist(rng);

  std::vector<Subset> up(size);
  for (int i = 0; i < size; ++i) up[i].add(i);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (coin(rng) < density) up[i].add(j);
  for (int k = 0; k < size; ++k)
    for (int i = 0; i < size; ++i)
      if (up[i].contains(k)) up[i] = up[i] | up[k];
  return Poset::from_up_sets(index_labels(size), std::move(up));
}

Poset random_poset_up_to(std::mt19937_64& rng, int max_size) {
  if (max_size < 1) throw input_error("random poset size must be at least 1");
  std::uniform_int_distribution<int> size_dist(1, max_size);
  return random_poset(rng, size_dist(rng));
}

JoinSpecification random_spec(std::mt19937_64& rng, const Poset& poset) {
  const int n = poset.size();
  if (n > 16) throw size_guard_error("random specifications support at most 16 elements");
  std::uniform_real_distribution<double> keep_dist(0.15, 0.6);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double keep = keep_dist(rng);

  std::vector<Subset> sets;
  for (std::uint64_t m = 1; m <= poset.universe().bits(); ++m) {
    const Subset s = Subset::of_bits(m);
    if (s.count() < 2) continue;
    if (poset.join_of(s) && coin(rng) < keep) sets.push_back(s);
  }
  return JoinSpecification(poset, sets);
}

ClosureFamily random_standard_family(std::mt19937_64& rng, const Poset& poset) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::unordered_set<std::uint64_t> chosen;
  for (Subset d : poset.all_downsets())
    if (coin(rng) < 0.35) chosen.insert(d.bits());
  for (int p = 0; p < poset.size(); ++p) chosen.insert(poset.down_of(p).bits());
  chosen.insert(poset.universe().bits());

  // Close under intersection.
  for (;;) {
    std::vector<std::uint64_t> current(chosen.begin(), chosen.end());
    bool grew = false;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j)
        if (chosen.insert(current[i] & current[j]).second) grew = true;
    if (!grew) break;
  }

  std::vector<Subset> sets;
  sets.reserve(chosen.size());
  for (std::uint64_t b : chosen) sets.push_back(Subset::of_bits(b));
  return ClosureFamily::unchecked(std::make_shared<Poset>(poset), std::move(sets));
}

void for_each_constraint_spec(const Poset& poset,
                              const std::function<void(const JoinSpecification&)>& visit,
                              std::size_t guard) {
  const std::vector<Subset> pairs = constraint_downsets(poset, guard);
  if (pairs.size() >= 24)
    throw size_guard_error("too many join requirements to enumerate specifications");
  const auto shared = std::make_shared<Poset>(poset);
  std::vector<Subset> selection;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    selection.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (m >> i & 1) selection.push_back(pairs[i]);
    visit(JoinSpecification(shared, selection));
  }
}

std::uint64_t constraint_spec_count(const Poset& poset, std::size_t guard) {
  const auto pairs = constraint_downsets(poset, guard);
  if (pairs.size() >= 64) throw size_guard_error("requirement count overflows");
  return std::uint64_t{1} << pairs.size();
}

}  // namespace posetkit
