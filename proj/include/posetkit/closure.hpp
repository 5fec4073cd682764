#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "posetkit/join_spec.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

// A standard closure operator given extensionally by its family of closed
// sets: every member is a down-set, the full carrier and every principal
// down-set belong to the family, and the family is closed under
// intersection. The operator itself is "smallest member containing S".
class ClosureFamily {
 public:
  // Validates all invariants; intended for externally supplied families.
  ClosureFamily(const Poset& poset, std::vector<Subset> closed);

  // For families that are closed by construction (e.g. all ideals of a
  // specification); skips the quadratic intersection check.
  static ClosureFamily unchecked(std::shared_ptr<const Poset> poset, std::vector<Subset> closed);

  const Poset& poset() const { return *poset_; }
  std::shared_ptr<const Poset> poset_ptr() const { return poset_; }
  const std::vector<Subset>& closed_sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  bool contains(Subset s) const;

  // Smallest closed set containing s.
  Subset apply(Subset s) const;

  friend bool operator==(const ClosureFamily& a, const ClosureFamily& b) {
    return a.poset_->same_structure(*b.poset_) && a.sets_ == b.sets_;
  }

 private:
  ClosureFamily() = default;
  std::shared_ptr<const Poset> poset_;
  std::vector<Subset> sets_;  // canonical (size, mask) order
};

struct ClosureSteps {
  Subset value;
  int steps;  // applications of the successor rule until a fixpoint repeats
};

// Closure of s under the specification: start from the down-closure, then
// repeatedly add joins of specified subsets and close downwards until
// nothing changes. The result is the smallest ideal of the specification
// containing s; steps reports how many iterations that took.
ClosureSteps spec_closure(const JoinSpecification& spec, Subset s);

// Every ideal of the specification: the down-sets closed under the
// specified joins (the empty set always qualifies). This is the closed-set
// family of the closure operator above.
ClosureFamily ideal_family(const JoinSpecification& spec, std::size_t guard = kDefaultEnumGuard);

// Same, but reusing an already-enumerated down-set list.
ClosureFamily filter_ideals(const JoinSpecification& spec, const std::vector<Subset>& downsets);

bool is_ideal(const JoinSpecification& spec, Subset s);

// The specification a closure family preserves: every nonempty set whose
// join exists and lands in every closed superset of the set.
JoinSpecification preserved_spec(const ClosureFamily& family,
                                 std::size_t guard = kDefaultEnumGuard);

struct GaloisCheck {
  bool closure_below;   // the generated closure is pointwise below the family's
  bool spec_contained;  // the specification lies inside the family's preserved one
  bool consistent() const { return closure_below == spec_contained; }
};

// Evaluates both sides of the adjunction between specifications and
// standard closure operators.
GaloisCheck galois_check(const JoinSpecification& spec, const ClosureFamily& family,
                         std::size_t guard = kDefaultEnumGuard);

// Least r such that the members of the preserved spec smaller than r
// regenerate the family; nullopt when no specification generates it.
std::optional<Cardinal> minimal_radius(const ClosureFamily& family,
                                       std::size_t guard = kDefaultEnumGuard);

}  // namespace posetkit
