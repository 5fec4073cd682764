#pragma once

#include <functional>
#include <random>
#include <vector>

#include "posetkit/closure.hpp"
#include "posetkit/join_spec.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

// Smallest 64-bit encoding of the order relation over all relabellings;
// equal encodings mean isomorphic posets. Supports up to 8 elements.
std::uint64_t canonical_encoding(const Poset& poset);

bool isomorphic(const Poset& a, const Poset& b);

// One representative per isomorphism class of posets with exactly n
// elements, labelled p0, p1, ... Supports n up to 6.
std::vector<Poset> all_posets_up_to_iso(int n);

// Random poset: a random DAG on the index order, transitively closed. The
// edge density is itself drawn per instance to cover sparse and dense
// orders.
Poset random_poset(std::mt19937_64& rng, int size);
Poset random_poset_up_to(std::mt19937_64& rng, int max_size);

// Random join-specification: each joinable non-singleton set is kept with a
// per-instance probability.
JoinSpecification random_spec(std::mt19937_64& rng, const Poset& poset);

// Random standard closure family: a random selection of down-sets, plus all
// principal down-sets and the carrier, closed under intersection.
ClosureFamily random_standard_family(std::mt19937_64& rng, const Poset& poset);

// Two specifications whose members impose the same (down-closure, join)
// requirements on down-sets have identical ideal families, identical
// preserved specs, and hence identical closure, saturation, and frame
// behaviour. This visits one representative specification per distinct set
// of non-redundant requirements, which covers every join-specification of
// the poset up to that equivalence. Redundant requirements are those whose
// join already lies in the down-closure.
void for_each_constraint_spec(const Poset& poset,
                              const std::function<void(const JoinSpecification&)>& visit,
                              std::size_t guard = kDefaultEnumGuard);

// The number of representatives for_each_constraint_spec would visit.
std::uint64_t constraint_spec_count(const Poset& poset, std::size_t guard = kDefaultEnumGuard);

}  // namespace posetkit
