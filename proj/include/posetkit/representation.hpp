#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetkit/completion.hpp"
#include "posetkit/frame_equivalence.hpp"

namespace posetkit {

// A map from labelled elements into subsets of a finite ground set,
// together with the meet/join size bounds it claims to preserve.
struct Representation {
  std::vector<std::string> elements;
  std::vector<std::string> ground;
  std::vector<std::uint64_t> image;  // image[i] = mask over ground
  Cardinal meet_bound = Cardinal::omega();
  Cardinal join_bound = Cardinal::omega();
};

struct MeetDistWitness {
  int element;    // the meet side a
  Subset joined;  // the join-set X
};

struct MeetDistReport {
  bool holds;
  std::optional<MeetDistWitness> witness;
};

// Meet-distributivity over bounded joins: whenever the join of X exists,
// |X| is below alpha, and a meet (join X) is defined, then every a meet x
// must be defined and their join must equal a meet (join X). The bound must
// be at least 3. The element a may itself belong to X.
MeetDistReport meet_distributive(const Poset& poset, Cardinal alpha,
                                 std::size_t guard = kDefaultEnumGuard);

enum class TripleClass { split, indeterminate, distributive };
const char* triple_class_name(TripleClass c);

struct TripleWitness {
  int a, b, c;
};

struct TripleClassification {
  TripleClass cls;
  std::optional<TripleWitness> split;          // first split triple found
  std::optional<TripleWitness> indeterminate;  // first indeterminate triple found
  std::uint64_t triples_seen = 0;
};

// Scans every triple (a, {b, c}) with a meet (b join c) defined. A triple
// splits when (a meet b) join (a meet c) is defined but different, and is
// indeterminate when that expression is undefined. The class is "split" if
// any triple splits, else "indeterminate" if any is indeterminate, else
// "distributive".
TripleClassification classify_triples(const Poset& poset);

// Maps each lattice element to the set of join-irreducibles below it.
// Requires a distributive lattice; preserves all finite meets and joins.
Representation birkhoff_embed(const CompletionLattice& lattice);

// Composes the canonical completion embedding with the irreducible map,
// when the completion of the bounded specification is a frame. The result
// preserves all existing meets and the joins of sets below the bound.
std::optional<Representation> completion_representation(const Poset& poset,
                                                        const JoinSpecification& spec,
                                                        Cardinal join_bound,
                                                        std::size_t guard = kDefaultEnumGuard);

struct meet_distributivity_error : error {
  meet_distributivity_error(std::string msg, MeetDistWitness w)
      : error(std::move(msg)), witness(w) {}
  MeetDistWitness witness;
};

// Representation with meet bound omega and the given join bound, built
// through the completion of the bounded specification. Requires
// meet-distributivity at the bound; throws with a witness otherwise.
Representation build_representation(const Poset& poset, Cardinal join_bound,
                                    std::size_t guard = kDefaultEnumGuard);

struct RepresentationReport {
  bool injective = true;
  std::vector<std::string> order_violations;
  std::vector<std::string> meet_violations;
  std::vector<std::string> join_violations;
  std::size_t meets_checked = 0, joins_checked = 0;
  bool ok() const {
    return injective && order_violations.empty() && meet_violations.empty() &&
           join_violations.empty();
  }
};

// Independent check of a representation: injectivity, order-reflection, and
// preservation of every existing nonempty meet/join within the claimed
// bounds (singletons are trivially preserved and skipped).
RepresentationReport verify_representation(const Poset& poset, const Representation& rep,
                                           std::size_t guard = kDefaultEnumGuard);

struct RepresentationSearch {
  std::optional<Representation> found;
  std::uint64_t nodes = 0;
  int ground_bound = 0;
};

// Backtracking search for a representation into a ground set of at most
// ground_bound points, with first-use symmetry pruning. A miss only means
// no representation exists within the bound; nothing is claimed beyond it.
RepresentationSearch decide_representable(const Poset& poset, Cardinal meet_bound,
                                          Cardinal join_bound, int ground_bound,
                                          std::uint64_t node_guard = std::uint64_t{1} << 28);

struct DistFrameVerdict {
  bool distributive;
  std::optional<MeetDistWitness> witness;
  bool frame;
  // Meet-distributivity must force a frame; false here indicates a bug.
  bool consistent() const { return !distributive || frame; }
};

// Checks that meet-distributivity at the given bound forces the completion
// of the bounded specification to be a frame.
DistFrameVerdict meet_distributive_frame_check(const Poset& poset, Cardinal bound,
                                               std::size_t guard = kDefaultEnumGuard);

}  // namespace posetkit
