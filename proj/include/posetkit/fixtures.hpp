#pragma once

#include "posetkit/poset.hpp"

namespace posetkit::fixtures {

// n pairwise-incomparable elements labelled a, b, c, ...
Poset antichain(int n);

// Two 2-chains x < x' and y < y' under a common top z.
Poset vee5();

// Four elements with b < d, c < d, c < a: the meet a ^ (b v c) exists while
// a ^ b does not.
Poset hmgap4();

// The five-element modular non-distributive lattice (three atoms).
Poset m3();

// The five-element non-modular lattice (pentagon).
Poset n5();

// A linear order c0 < c1 < ... of the given length.
Poset chain(int n);

// The powerset lattice over k atoms, labelled by atom strings ("0" empty).
Poset boolean_algebra(int k);

// Six elements, meet-distributive at every bound, but not a lattice: p and
// q share upper bounds u and v without having a join.
Poset lmd_witness6();

}  // namespace posetkit::fixtures
