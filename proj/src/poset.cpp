#include "posetkit/poset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace posetkit {

namespace {

std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

Poset Poset::from_pairs(std::vector<std::string> labels,
                        const std::vector<std::pair<std::string, std::string>>& le_pairs) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw input_error("poset needs at least one element");
  if (n > 64) throw input_error("poset too large: at most 64 elements are supported");

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], i).second)
      throw input_error("duplicate label: " + labels[i]);
  }

  std::vector<Subset> up(n);
  for (int i = 0; i < n; ++i) up[i].add(i);
  for (const auto& [a, b] : le_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw input_error("unknown label in order pair: " + a);
    if (ib == index.end()) throw input_error("unknown label in order pair: " + b);
    up[ia->second].add(ib->second);
  }

  // Warshall over up-set masks.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] = up[i] | up[k];

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (up[i].contains(j) && up[j].contains(i))
        throw input_error("cycle detected: " + labels[i] + " and " + labels[j] +
                          " are mutually related");

  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.finish_init();
  return p;
}

Poset Poset::from_up_sets(std::vector<std::string> labels, std::vector<Subset> up) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw input_error("poset needs at least one element");
  if (n > 64) throw input_error("poset too large: at most 64 elements are supported");
  if (up.size() != labels.size()) throw input_error("up-set count does not match label count");

  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw input_error("duplicate label: " + l);

  const Subset all = Subset::of_bits(full_mask(n));
  for (int i = 0; i < n; ++i) {
    if (!all.includes(up[i])) throw input_error("up-set mask outside carrier");
    if (!up[i].contains(i)) throw input_error("relation is not reflexive");
  }
  for (int i = 0; i < n; ++i) {
    std::uint64_t bits = up[i].bits();
    for (auto b = bits; b; b &= b - 1) {
      const int j = std::countr_zero(b);
      if (!up[i].includes(up[j])) throw input_error("relation is not transitive");
      if (i != j && up[j].contains(i)) throw input_error("relation is not antisymmetric");
    }
  }

  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.finish_init();
  return p;
}

void Poset::finish_init() {
  const int n = size();
  universe_ = Subset::of_bits(full_mask(n));
  down_.assign(n, Subset{});
  for (int p = 0; p < n; ++p)
    up_[p].for_each([&](int q) { down_[q].add(p); });
}

std::optional<int> Poset::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

int Poset::require_index(std::string_view label) const {
  auto i = index_of(label);
  if (!i) throw input_error("unknown element label: " + std::string(label));
  return *i;
}

Subset Poset::down_closure(Subset s) const {
  if (!universe_.includes(s)) throw input_error("subset contains indices outside the poset");
  Subset out;
  s.for_each([&](int p) { out = out | down_[p]; });
  return out;
}

Subset Poset::upper_bounds(Subset s) const {
  if (!universe_.includes(s)) throw input_error("subset contains indices outside the poset");
  Subset out = universe_;
  s.for_each([&](int p) { out = out & up_[p]; });
  return out;
}

Subset Poset::lower_bounds(Subset s) const {
  if (!universe_.includes(s)) throw input_error("subset contains indices outside the poset");
  Subset out = universe_;
  s.for_each([&](int p) { out = out & down_[p]; });
  return out;
}

std::optional<int> Poset::join_of(Subset s) const {
  if (s.empty()) throw input_error("join of the empty set is rejected");
  const Subset ub = upper_bounds(s);
  std::optional<int> least;
  ub.for_each([&](int u) {
    if (!least && up_[u].includes(ub)) least = u;
  });
  return least;
}

std::optional<int> Poset::meet_of(Subset s) const {
  if (s.empty()) throw input_error("meet of the empty set is rejected");
  const Subset lb = lower_bounds(s);
  std::optional<int> greatest;
  lb.for_each([&](int u) {
    if (!greatest && down_[u].includes(lb)) greatest = u;
  });
  return greatest;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> order(size());
  for (int i = 0; i < size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down_[a].count() < down_[b].count(); });
  return order;
}

std::vector<Subset> Poset::all_downsets(std::size_t guard) const {
  const std::vector<int> order = linear_extension();
  std::vector<Subset> out;

  // In linear-extension order an element may be included exactly when its
  // strict down-set is already present.
  auto rec = [&](auto&& self, std::size_t pos, Subset current) -> void {
    if (pos == order.size()) {
      if (out.size() >= guard)
        throw size_guard_error("downset enumeration exceeds guard of " + std::to_string(guard));
      out.push_back(current);
      return;
    }
    const int e = order[pos];
    self(self, pos + 1, current);
    if (current.includes(down_[e] - Subset::single(e)))
      self(self, pos + 1, current | Subset::single(e));
  };
  rec(rec, 0, Subset{});

  std::sort(out.begin(), out.end(), family_order_less);
  return out;
}

bool Poset::is_lattice() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      const Subset pair = Subset::single(i) | Subset::single(j);
      if (!join_of(pair) || !meet_of(pair)) return false;
    }
  return true;
}

std::vector<int> Poset::lower_covers(int p) const {
  std::vector<int> covers;
  const Subset strict_below = down_[p] - Subset::single(p);
  strict_below.for_each([&](int q) {
    // q is a cover of p when nothing sits strictly between them.
    const Subset between = (up_[q] & down_[p]) - Subset::single(q) - Subset::single(p);
    if (between.empty()) covers.push_back(q);
  });
  return covers;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < size(); ++p)
    for (int q : lower_covers(p)) out.emplace_back(q, p);
  std::sort(out.begin(), out.end());
  return out;
}

Subset Poset::join_irreducibles() const {
  if (!is_lattice()) throw input_error("join-irreducibles require a lattice");
  Subset out;
  for (int p = 0; p < size(); ++p)
    if (lower_covers(p).size() == 1) out.add(p);
  return out;
}

std::string Poset::set_to_string(Subset s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int p) {
    if (!first) out += ",";
    out += labels_[p];
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace posetkit
