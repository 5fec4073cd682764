#include "posetkit/completion.hpp"

#include <algorithm>

namespace posetkit {

CompletionLattice::CompletionLattice(ClosureFamily family, std::size_t table_guard)
    : family_(std::move(family)) {
  const std::size_t n = family_.size();
  if (n > table_guard)
    throw size_guard_error("completion lattice of " + std::to_string(n) +
                           " closed sets exceeds the table guard of " +
                           std::to_string(table_guard));

  const auto& sets = family_.closed_sets();
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(sets[i].bits(), i);

  meet_.resize(n * n);
  join_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    meet_[a * n + a] = join_[a * n + a] = static_cast<std::uint32_t>(a);
    for (std::size_t b = 0; b < a; ++b) {
      const auto it = index_.find((sets[a] & sets[b]).bits());
      if (it == index_.end())
        throw input_error("family is not intersection-closed; cannot build completion");
      meet_[a * n + b] = meet_[b * n + a] = it->second;
      const std::size_t j = index_of(family_.apply(sets[a] | sets[b]));
      join_[a * n + b] = join_[b * n + a] = static_cast<std::uint32_t>(j);
    }
  }

  const Poset& base = family_.poset();
  phi_.resize(base.size());
  for (int p = 0; p < base.size(); ++p) {
    const auto it = index_.find(base.down_of(p).bits());
    if (it == index_.end())
      throw input_error("family is not standard; principal down-set of " + base.label(p) +
                        " is not closed");
    phi_[p] = it->second;
  }
}

std::size_t CompletionLattice::index_of(Subset s) const {
  const auto it = index_.find(s.bits());
  if (it == index_.end())
    throw input_error("set is not closed: " + base().set_to_string(s));
  return it->second;
}

std::vector<std::size_t> CompletionLattice::lower_covers(std::size_t i) const {
  // Maximal elements strictly below i.
  std::vector<std::size_t> below;
  for (std::size_t j = 0; j < size(); ++j)
    if (j != i && leq(j, i)) below.push_back(j);
  std::vector<std::size_t> covers;
  for (std::size_t j : below) {
    bool maximal = true;
    for (std::size_t k : below)
      if (k != j && leq(j, k)) {
        maximal = false;
        break;
      }
    if (maximal) covers.push_back(j);
  }
  return covers;
}

std::vector<std::size_t> CompletionLattice::join_irreducibles() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (lower_covers(i).size() == 1) out.push_back(i);
  return out;
}

CompletionLattice build_completion(const ClosureFamily& family, std::size_t table_guard) {
  return CompletionLattice(family, table_guard);
}

PreservationReport phi_preservation_report(const CompletionLattice& lattice,
                                           const JoinSpecification& spec, std::size_t guard) {
  if (!lattice.base().same_structure(spec.poset()))
    throw input_error("preservation report requires the same underlying poset");

  const Poset& p = lattice.base();
  PreservationReport report;

  if (p.size() > 63 || (std::uint64_t{1} << p.size()) > guard)
    throw size_guard_error("meet-preservation scan exceeds the guard");

  // Meets in the completion are intersections, so the embedding preserves
  // the meet of S exactly when the intersection of the principal down-sets
  // is itself principal at the meet.
  for (std::uint64_t m = 1; m <= p.universe().bits(); ++m) {
    const Subset s = Subset::of_bits(m);
    const auto glb = p.meet_of(s);
    if (!glb) continue;
    ++report.meets_checked;
    if (p.lower_bounds(s) != p.down_of(*glb))
      report.meet_violations.push_back("meet of " + p.set_to_string(s) + " is not carried to " +
                                       "the intersection of the images");
  }

  const auto& sets = spec.sets();
  const auto& joins = spec.joins();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    ++report.joins_checked;
    const Subset joined = lattice.family().apply(p.down_closure(sets[i]));
    if (joined != p.down_of(joins[i]))
      report.join_violations.push_back("join of " + p.set_to_string(sets[i]) +
                                       " is not carried to the lattice join of the images");
  }
  return report;
}

namespace {

FrameReport triple_scan(const CompletionLattice& l, int sigma) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const std::size_t lhs = l.meet(x, l.join(a, b));
        const std::size_t rhs = l.join(l.meet(x, a), l.meet(x, b));
        if (lhs != rhs)
          return {false, DistributivityWitness{x, {a, b}, lhs, rhs}, sigma};
      }
  return {true, std::nullopt, sigma};
}

}  // namespace

FrameReport is_frame(const CompletionLattice& lattice) {
  // For a finite lattice, distributivity over pairs is equivalent to
  // distributivity over arbitrary join-sets.
  return triple_scan(lattice, static_cast<int>(lattice.size()) + 1);
}

FrameReport is_frame_exhaustive(const CompletionLattice& lattice, std::size_t max_elements) {
  const std::size_t n = lattice.size();
  if (n > max_elements)
    throw size_guard_error("exhaustive frame audit supports at most " +
                           std::to_string(max_elements) + " lattice elements");

  for (std::size_t x = 0; x < n; ++x) {
    for (std::uint64_t ym = 1; ym < (std::uint64_t{1} << n); ++ym) {
      std::size_t join_y = 0;
      std::size_t rhs = 0;
      bool first = true;
      std::vector<std::size_t> parts;
      for (auto b = ym; b; b &= b - 1) {
        const std::size_t y = static_cast<std::size_t>(std::countr_zero(b));
        parts.push_back(y);
        join_y = first ? y : lattice.join(join_y, y);
        const std::size_t m = lattice.meet(x, y);
        rhs = first ? m : lattice.join(rhs, m);
        first = false;
      }
      const std::size_t lhs = lattice.meet(x, join_y);
      if (lhs != rhs)
        return {false, DistributivityWitness{x, parts, lhs, rhs},
                static_cast<int>(n) + 1};
    }
  }
  return {true, std::nullopt, static_cast<int>(n) + 1};
}

FrameReport alpha_distributive(const CompletionLattice& lattice, Cardinal alpha,
                               std::uint64_t combination_guard) {
  if (!alpha.is_omega() && alpha.value() < 2)
    throw input_error("distributivity bound must be at least 2");
  if (alpha.is_omega()) return is_frame(lattice);

  const std::size_t n = lattice.size();
  const std::size_t max_size = std::min<std::size_t>(n, alpha.value() - 1);
  const int sigma = static_cast<int>(alpha.value());
  if (max_size < 2) return {true, std::nullopt, sigma};

  std::uint64_t visited = 0;
  std::vector<std::size_t> parts;
  for (std::size_t x = 0; x < n; ++x) {
    // Enumerate join-sets of each size in lexicographic order.
    for (std::size_t s = 2; s <= max_size; ++s) {
      parts.resize(s);
      for (std::size_t i = 0; i < s; ++i) parts[i] = i;
      for (;;) {
        if (++visited > combination_guard)
          throw size_guard_error("distributivity scan exceeds the combination guard");
        std::size_t join_y = parts[0];
        std::size_t rhs = lattice.meet(x, parts[0]);
        for (std::size_t i = 1; i < s; ++i) {
          join_y = lattice.join(join_y, parts[i]);
          rhs = lattice.join(rhs, lattice.meet(x, parts[i]));
        }
        const std::size_t lhs = lattice.meet(x, join_y);
        if (lhs != rhs) return {false, DistributivityWitness{x, parts, lhs, rhs}, sigma};

        // advance to the next combination; parts[i] may grow to n - s + i
        std::size_t i = s;
        while (i > 0 && parts[i - 1] == n - s + (i - 1)) --i;
        if (i == 0) break;
        --i;
        ++parts[i];
        for (std::size_t j = i + 1; j < s; ++j) parts[j] = parts[j - 1] + 1;
      }
    }
  }
  return {true, std::nullopt, sigma};
}

}  // namespace posetkit
