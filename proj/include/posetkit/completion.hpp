#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetkit/cardinal.hpp"
#include "posetkit/closure.hpp"

namespace posetkit {

inline constexpr std::size_t kDefaultLatticeGuard = 2048;

// The complete lattice of closed sets of a standard closure family, ordered
// by inclusion, with meet/join tables and the canonical embedding of the
// base poset (each element goes to its principal down-set). Meets are
// intersections; joins are closures of unions.
class CompletionLattice {
 public:
  explicit CompletionLattice(ClosureFamily family, std::size_t table_guard = kDefaultLatticeGuard);

  const ClosureFamily& family() const { return family_; }
  const Poset& base() const { return family_.poset(); }
  std::size_t size() const { return family_.size(); }

  Subset element(std::size_t i) const { return family_.closed_sets()[i]; }
  std::size_t index_of(Subset s) const;

  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  bool leq(std::size_t a, std::size_t b) const { return element(b).includes(element(a)); }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return size() - 1; }

  // Index of the principal down-set of base element p.
  std::size_t phi(int p) const { return phi_[p]; }

  std::vector<std::size_t> lower_covers(std::size_t i) const;
  std::vector<std::size_t> join_irreducibles() const;

  std::string element_string(std::size_t i) const { return base().set_to_string(element(i)); }

 private:
  ClosureFamily family_;
  std::vector<std::uint32_t> meet_, join_;
  std::vector<std::uint32_t> phi_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

CompletionLattice build_completion(const ClosureFamily& family,
                                   std::size_t table_guard = kDefaultLatticeGuard);

struct PreservationReport {
  std::vector<std::string> meet_violations;
  std::vector<std::string> join_violations;
  std::size_t meets_checked = 0;
  std::size_t joins_checked = 0;
  bool ok() const { return meet_violations.empty() && join_violations.empty(); }
};

// Verifies that the canonical embedding carries every existing meet to an
// intersection and every specified join to a lattice join. Violations are
// reported, not thrown.
PreservationReport phi_preservation_report(const CompletionLattice& lattice,
                                           const JoinSpecification& spec,
                                           std::size_t guard = kDefaultEnumGuard);

struct DistributivityWitness {
  std::size_t x;
  std::vector<std::size_t> parts;  // the join-set Y
  std::size_t lhs;                 // x meet (join of Y)
  std::size_t rhs;                 // join over Y of (x meet y)
};

struct FrameReport {
  bool frame;
  std::optional<DistributivityWitness> witness;
  // Distributivity is certified for join-sets smaller than this bound.
  int sigma_checked;
};

// Frame test via the triple fast path: for a finite lattice, distributivity
// over pairs settles distributivity over arbitrary join-sets. The witness,
// when present, is the first failure in canonical element order.
FrameReport is_frame(const CompletionLattice& lattice);

// Audit mode: checks every subfamily directly. Exponential; guarded.
FrameReport is_frame_exhaustive(const CompletionLattice& lattice, std::size_t max_elements = 15);

// Restricted distributivity: join-sets of size below alpha only.
FrameReport alpha_distributive(const CompletionLattice& lattice, Cardinal alpha,
                               std::uint64_t combination_guard = std::uint64_t{1} << 24);

}  // namespace posetkit
