#pragma once

#include <optional>
#include <vector>

#include "posetkit/completion.hpp"

namespace posetkit {

struct SaturationTrace {
  std::vector<Subset> stages;  // increasing; the last two stages are equal
  int stabilized_at;           // index of the first stage equal to its predecessor
  Subset result() const { return stages.back(); }
};

// The join-saturation operator of a specification: start from the
// down-closure of S, then repeatedly add the joins of preserved sets lying
// inside the current stage, without closing downwards. The preserved sets
// are those of the specification's ideal family, which may strictly extend
// the specification itself. Not a closure operator in general: the result
// need not be a down-set.
class SaturationOperator {
 public:
  explicit SaturationOperator(const JoinSpecification& spec,
                              std::size_t guard = kDefaultEnumGuard);

  const ClosureFamily& family() const { return family_; }
  const JoinSpecification& preserved() const { return preserved_; }

  SaturationTrace trace(Subset s) const;
  Subset value(Subset s) const { return trace(s).result(); }

 private:
  ClosureFamily family_;
  JoinSpecification preserved_;
};

SaturationTrace join_saturation(const JoinSpecification& spec, Subset s,
                                std::size_t guard = kDefaultEnumGuard);

struct FrameEquivalenceOptions {
  std::size_t guard = kDefaultEnumGuard;
  // All subsets are scanned when 2^n stays within this limit; beyond it a
  // fixed-seed sample of the given size is used instead.
  std::uint64_t exhaustive_limit = 4096;
  int samples = 4096;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

struct FrameEquivalenceVerdict {
  bool closure_eq_saturation;
  std::optional<Subset> discrepancy;  // first S where the two operators differ
  Subset closure_value, saturation_value;
  FrameReport frame;
  std::uint64_t subsets_checked = 0;
  bool exhaustive = true;
  // The two sides must agree; disagreement indicates an implementation bug.
  bool biconditional_ok() const { return closure_eq_saturation == frame.frame; }
};

// Evaluates both sides of the equivalence: the closure operator agrees with
// join-saturation on every subset exactly when the completion is a frame.
FrameEquivalenceVerdict check_frame_equivalence(const JoinSpecification& spec,
                                                const FrameEquivalenceOptions& opts = {});

struct SpecFailureWitness {
  Subset joined_set;  // a member T of the specification
  int element;        // p with p <= join(T)
  Subset lhs, rhs;    // the two unequal sides, as closed sets
};

// When the completion is not a frame, produces a specified set T and an
// element p below its join such that distributivity fails for the embedded
// images; nullopt when the completion is a frame. The witness set always
// has size below the specification's radius.
std::optional<SpecFailureWitness> frame_failure_witness(const JoinSpecification& spec,
                                                        std::size_t guard = kDefaultEnumGuard);

struct OneStepReport {
  bool holds;
  std::optional<Subset> witness;  // a down-set where one step is not enough
};

// Tests whether one round of joins already closes every subset: with the
// bounded specification of the given size bound, the closure of S must
// equal {join(T) : T specified, T inside the down-closure of S}. Checking
// down-sets suffices since both sides factor through the down-closure.
OneStepReport one_step_closure_check(const Poset& poset, Cardinal bound,
                                     std::size_t guard = kDefaultEnumGuard);

}  // namespace posetkit
