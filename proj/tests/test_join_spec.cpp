#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "posetkit/enumerate.hpp"
#include "posetkit/fixtures.hpp"
#include "posetkit/join_spec.hpp"

using namespace posetkit;
using oracle::named;

TEST_CASE("construction adds singletons, validates joins, rejects the empty set") {
  const Poset vee = fixtures::vee5();
  const JoinSpecification spec(vee, {named(vee, {"x", "y"})});
  CHECK(spec.sets().size() == 6);  // five singletons plus {x,y}
  CHECK(spec.contains(named(vee, {"x", "y"})));
  CHECK(spec.contains(named(vee, {"x"})));

  const Poset anti = fixtures::antichain(3);
  CHECK(JoinSpecification(anti, {}).sets().size() == 3);
  CHECK_THROWS_AS(JoinSpecification(anti, {named(anti, {"a", "b"})}), input_error);
  CHECK_THROWS_AS(JoinSpecification(anti, {Subset{}}), input_error);
}

TEST_CASE("bounded specifications agree with the brute-force oracle") {
  const Poset vee = fixtures::vee5();

  // every 2-subset of vee5 has a join, so the bound-3 family is singletons
  // plus all ten pairs (frozen from the oracle below)
  const JoinSpecification u3 = bounded_spec(vee, Cardinal::finite(3));
  CHECK(u3.sets().size() == 15);

  for (const Poset& p : {fixtures::vee5(), fixtures::hmgap4(), fixtures::n5()}) {
    const JoinSpecification full = bounded_spec(p, Cardinal::omega());
    std::vector<Subset> expected;
    for (std::uint64_t m = 1; m <= p.universe().bits(); ++m) {
      const Subset s = Subset::of_bits(m);
      if (oracle::join(p, s)) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(), family_order_less);
    CHECK(full.sets() == expected);
  }
}

TEST_CASE("bound 2 gives exactly the singletons") {
  for (const Poset& p : {fixtures::vee5(), fixtures::m3()}) {
    const JoinSpecification u2 = bounded_spec(p, Cardinal::finite(2));
    CHECK(static_cast<int>(u2.sets().size()) == p.size());
  }
  CHECK_THROWS_AS(bounded_spec(fixtures::vee5(), Cardinal::finite(1)), input_error);
}

TEST_CASE("radius") {
  const Poset vee = fixtures::vee5();
  CHECK(JoinSpecification(vee, {}).radius() == Cardinal::finite(2));
  CHECK(JoinSpecification(vee, {named(vee, {"x", "y"})}).radius() == Cardinal::finite(3));

  // frozen from the oracle: hmgap4's unbounded family tops out at the
  // size-3 member {b,c,d} with join d, so the radius is 4
  const Poset gap = fixtures::hmgap4();
  const JoinSpecification full = bounded_spec(gap, Cardinal::omega());
  CHECK(full.contains(named(gap, {"b", "c", "d"})));
  CHECK(full.radius() == Cardinal::finite(4));
}

TEST_CASE("union and intersection") {
  const Poset vee = fixtures::vee5();
  const JoinSpecification singletons(vee, {});
  const JoinSpecification with_xy(vee, {named(vee, {"x", "y"})});
  const JoinSpecification with_xy2(vee, {named(vee, {"x'", "y'"})});

  CHECK(spec_union(with_xy, singletons) == with_xy);
  CHECK(spec_intersection(with_xy, with_xy2) == singletons);

  const Poset other = fixtures::antichain(3);
  CHECK_THROWS_AS(spec_union(with_xy, JoinSpecification(other, {})), input_error);

  // the union of every join-specification is the unbounded family
  JoinSpecification acc = singletons;
  for_each_constraint_spec(vee, [&](const JoinSpecification& s) { acc = spec_union(acc, s); });
  // constraint representatives only carry the non-redundant sets; join
  // everything explicitly as well
  std::vector<Subset> all;
  for (std::uint64_t m = 1; m <= vee.universe().bits(); ++m)
    if (vee.join_of(Subset::of_bits(m))) all.push_back(Subset::of_bits(m));
  CHECK(spec_union(acc, JoinSpecification(vee, all)) == bounded_spec(vee, Cardinal::omega()));
}

TEST_CASE("monotonicity properties on random posets") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    const Poset p = random_poset_up_to(rng, 6);
    const JoinSpecification u3 = bounded_spec(p, Cardinal::finite(3));
    const JoinSpecification u4 = bounded_spec(p, Cardinal::finite(4));
    const JoinSpecification all = bounded_spec(p, Cardinal::omega());

    for (Subset s : u3.sets()) CHECK(u4.contains(s));
    for (Subset s : u4.sets()) CHECK(all.contains(s));

    const JoinSpecification random_u = random_spec(rng, p);
    for (Subset s : random_u.sets()) CHECK(all.contains(s));
    CHECK(spec_union(random_u, random_u) == random_u);
    CHECK(random_u.radius() <= spec_union(random_u, all).radius());
  }
}
