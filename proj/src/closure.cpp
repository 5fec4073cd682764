#include "posetkit/closure.hpp"

#include <algorithm>
#include <unordered_set>

namespace posetkit {

namespace {

constexpr std::size_t kValidationGuard = 4096;

void check_subset_scan_guard(const Poset& p, std::size_t guard, const char* what) {
  if (p.size() > 63 || (std::uint64_t{1} << p.size()) > guard)
    throw size_guard_error(std::string(what) + " would scan more than " + std::to_string(guard) +
                           " subsets");
}

}  // namespace

ClosureFamily::ClosureFamily(const Poset& poset, std::vector<Subset> closed)
    : poset_(std::make_shared<Poset>(poset)) {
  if (closed.size() > kValidationGuard)
    throw size_guard_error("closure family too large to validate");

  std::sort(closed.begin(), closed.end(), family_order_less);
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  sets_ = std::move(closed);

  const Poset& p = *poset_;
  std::unordered_set<std::uint64_t> present;
  for (Subset s : sets_) {
    if (!p.universe().includes(s)) throw input_error("closed set outside the carrier");
    if (!p.is_downset(s))
      throw input_error("closed set is not a down-set: " + p.set_to_string(s));
    present.insert(s.bits());
  }
  if (!present.count(p.universe().bits()))
    throw input_error("closure family must contain the whole carrier");
  for (int q = 0; q < p.size(); ++q)
    if (!present.count(p.down_of(q).bits()))
      throw input_error("closure family is not standard: missing principal down-set of " +
                        p.label(q));
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (std::size_t j = i + 1; j < sets_.size(); ++j)
      if (!present.count((sets_[i] & sets_[j]).bits()))
        throw input_error("closure family is not intersection-closed: " +
                          p.set_to_string(sets_[i]) + " and " + p.set_to_string(sets_[j]));
}

ClosureFamily ClosureFamily::unchecked(std::shared_ptr<const Poset> poset,
                                       std::vector<Subset> closed) {
  std::sort(closed.begin(), closed.end(), family_order_less);
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  ClosureFamily f;
  f.poset_ = std::move(poset);
  f.sets_ = std::move(closed);
  return f;
}

bool ClosureFamily::contains(Subset s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, family_order_less);
}

Subset ClosureFamily::apply(Subset s) const {
  // Members are ordered by size, so the first superset is the smallest one
  // (the family is intersection-closed, hence the minimum is unique).
  for (Subset c : sets_)
    if (c.includes(s)) return c;
  throw input_error("closure family has no member containing " + poset_->set_to_string(s));
}

ClosureSteps spec_closure(const JoinSpecification& spec, Subset s) {
  const Poset& p = spec.poset();
  Subset current = p.down_closure(s);
  int steps = 0;
  for (;;) {
    Subset joined;
    const auto& sets = spec.sets();
    const auto& joins = spec.joins();
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (current.includes(sets[i])) joined.add(joins[i]);
    const Subset next = p.down_closure(joined);
    ++steps;
    if (next == current) return {current, steps};
    current = next;
  }
}

bool is_ideal(const JoinSpecification& spec, Subset s) {
  if (!spec.poset().is_downset(s)) return false;
  const auto& sets = spec.sets();
  const auto& joins = spec.joins();
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (s.includes(sets[i]) && !s.contains(joins[i])) return false;
  return true;
}

ClosureFamily filter_ideals(const JoinSpecification& spec, const std::vector<Subset>& downsets) {
  const auto& sets = spec.sets();
  const auto& joins = spec.joins();
  std::vector<Subset> ideals;
  ideals.reserve(downsets.size());
  for (Subset d : downsets) {
    bool ok = true;
    for (std::size_t i = 0; i < sets.size() && ok; ++i)
      if (d.includes(sets[i]) && !d.contains(joins[i])) ok = false;
    if (ok) ideals.push_back(d);
  }
  return ClosureFamily::unchecked(spec.poset_ptr(), std::move(ideals));
}

ClosureFamily ideal_family(const JoinSpecification& spec, std::size_t guard) {
  return filter_ideals(spec, spec.poset().all_downsets(guard));
}

JoinSpecification preserved_spec(const ClosureFamily& family, std::size_t guard) {
  const Poset& p = family.poset();
  check_subset_scan_guard(p, guard, "preserved-specification computation");

  std::vector<Subset> sets;
  for (std::uint64_t m = 1; m <= p.universe().bits(); ++m) {
    const Subset s = Subset::of_bits(m);
    const auto j = p.join_of(s);
    if (j && family.apply(s).contains(*j)) sets.push_back(s);
  }
  return JoinSpecification(family.poset_ptr(), sets);
}

GaloisCheck galois_check(const JoinSpecification& spec, const ClosureFamily& family,
                         std::size_t guard) {
  if (!spec.poset().same_structure(family.poset()))
    throw input_error("galois check requires the same underlying poset");

  GaloisCheck out{true, true};
  // Both closure operators factor through the down-closure, so quantifying
  // over down-sets covers every subset.
  for (Subset d : spec.poset().all_downsets(guard)) {
    if (!family.apply(d).includes(spec_closure(spec, d).value)) {
      out.closure_below = false;
      break;
    }
  }
  const auto& sets = spec.sets();
  const auto& joins = spec.joins();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!family.apply(sets[i]).contains(joins[i])) {
      out.spec_contained = false;
      break;
    }
  }
  return out;
}

std::optional<Cardinal> minimal_radius(const ClosureFamily& family, std::size_t guard) {
  const JoinSpecification full = preserved_spec(family, guard);
  if (!(ideal_family(full, guard) == family)) return std::nullopt;

  // The family is generated by a radius-r specification iff its preserved
  // sets smaller than r already generate it, so only these candidates need
  // checking.
  const std::uint32_t max_radius = full.radius().value();
  for (std::uint32_t r = 2; r <= max_radius; ++r) {
    std::vector<Subset> small;
    for (Subset s : full.sets())
      if (static_cast<std::uint32_t>(s.count()) < r) small.push_back(s);
    const JoinSpecification candidate(full.poset_ptr(), small);
    if (ideal_family(candidate, guard) == family) return Cardinal::finite(r);
  }
  return Cardinal::finite(max_radius);
}

}  // namespace posetkit
