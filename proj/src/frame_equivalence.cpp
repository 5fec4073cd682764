#include "posetkit/frame_equivalence.hpp"

#include <random>

namespace posetkit {

SaturationOperator::SaturationOperator(const JoinSpecification& spec, std::size_t guard)
    : family_(ideal_family(spec, guard)), preserved_(preserved_spec(family_, guard)) {}

SaturationTrace SaturationOperator::trace(Subset s) const {
  const Poset& p = preserved_.poset();
  SaturationTrace out;
  Subset current = p.down_closure(s);
  out.stages.push_back(current);
  const auto& sets = preserved_.sets();
  const auto& joins = preserved_.joins();
  for (;;) {
    Subset next;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (current.includes(sets[i])) next.add(joins[i]);
    out.stages.push_back(next);
    if (next == current) break;
    current = next;
  }
  out.stabilized_at = static_cast<int>(out.stages.size()) - 1;
  return out;
}

SaturationTrace join_saturation(const JoinSpecification& spec, Subset s, std::size_t guard) {
  return SaturationOperator(spec, guard).trace(s);
}

FrameEquivalenceVerdict check_frame_equivalence(const JoinSpecification& spec,
                                                const FrameEquivalenceOptions& opts) {
  const Poset& p = spec.poset();
  const SaturationOperator sat(spec, opts.guard);
  const CompletionLattice lattice(sat.family());

  FrameEquivalenceVerdict verdict;
  verdict.frame = is_frame(lattice);
  verdict.closure_eq_saturation = true;

  auto check_one = [&](Subset s) {
    const Subset closed = sat.family().apply(p.down_closure(s));
    const Subset saturated = sat.value(s);
    ++verdict.subsets_checked;
    if (closed != saturated && verdict.closure_eq_saturation) {
      verdict.closure_eq_saturation = false;
      verdict.discrepancy = s;
      verdict.closure_value = closed;
      verdict.saturation_value = saturated;
    }
  };

  const int n = p.size();
  if (n <= 63 && (std::uint64_t{1} << n) <= opts.exhaustive_limit) {
    for (std::uint64_t m = 0; m <= p.universe().bits(); ++m) check_one(Subset::of_bits(m));
  } else {
    verdict.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < opts.samples; ++i)
      check_one(Subset::of_bits(rng() & p.universe().bits()));
  }
  return verdict;
}

std::optional<SpecFailureWitness> frame_failure_witness(const JoinSpecification& spec,
                                                        std::size_t guard) {
  const Poset& p = spec.poset();
  const ClosureFamily family = ideal_family(spec, guard);
  const CompletionLattice lattice(family);
  if (is_frame(lattice).frame) return std::nullopt;

  const auto& sets = spec.sets();
  const auto& joins = spec.joins();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Subset t = sets[i];
    if (t.count() < 2) continue;  // a singleton can never witness a failure
    const Subset t_down = p.down_closure(t);
    for (int q = 0; q < p.size(); ++q) {
      if (!p.leq(q, joins[i])) continue;
      // With q below the join, the left side is the principal down-set of
      // q; the right side is the closure of its intersection with the
      // down-closure of T. They differ exactly when q is missing there.
      const Subset rhs = family.apply(t_down & p.down_of(q));
      if (!rhs.contains(q))
        return SpecFailureWitness{t, q, p.down_of(q), rhs};
    }
  }
  throw error("no distributivity failure witness found for a non-frame completion; "
              "this indicates an implementation bug");
}

OneStepReport one_step_closure_check(const Poset& poset, Cardinal bound, std::size_t guard) {
  const JoinSpecification spec = bounded_spec(poset, bound, guard);
  const std::vector<Subset> downsets = poset.all_downsets(guard);
  const ClosureFamily family = filter_ideals(spec, downsets);

  const auto& sets = spec.sets();
  const auto& joins = spec.joins();
  for (Subset d : downsets) {
    Subset one_step;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (d.includes(sets[i])) one_step.add(joins[i]);
    if (one_step != family.apply(d)) return {false, d};
  }
  return {true, std::nullopt};
}

}  // namespace posetkit
