#include "posetkit/representation.hpp"

#include <algorithm>
#include <unordered_map>

namespace posetkit {

namespace {

void check_subset_scan(const Poset& p, std::size_t guard, const char* what) {
  if (p.size() > 63 || (std::uint64_t{1} << p.size()) > guard)
    throw size_guard_error(std::string(what) + " exceeds the subset-scan guard");
}

// Join of the set {meet(a,x) : x in X}, when every meet and the final join
// exist.
std::optional<int> distributed_join(const Poset& p, int a, Subset x) {
  Subset meets;
  bool all_defined = true;
  x.for_each([&](int e) {
    if (!all_defined) return;
    const auto m = p.meet_of(Subset::single(a) | Subset::single(e));
    if (!m)
      all_defined = false;
    else
      meets.add(*m);
  });
  if (!all_defined) return std::nullopt;
  return p.join_of(meets);
}

}  // namespace

MeetDistReport meet_distributive(const Poset& poset, Cardinal alpha, std::size_t guard) {
  if (!alpha.is_omega() && alpha.value() < 3)
    throw input_error("meet-distributivity bound must be at least 3");
  check_subset_scan(poset, guard, "meet-distributivity scan");

  const int n = poset.size();
  // Collect candidate join-sets in canonical order, smallest first.
  std::vector<Subset> candidates;
  for (std::uint64_t m = 1; m <= poset.universe().bits(); ++m) {
    const Subset x = Subset::of_bits(m);
    if (!alpha.admits(x.count())) continue;
    candidates.push_back(x);
  }
  std::sort(candidates.begin(), candidates.end(), family_order_less);

  for (int a = 0; a < n; ++a) {
    for (Subset x : candidates) {
      const auto j = poset.join_of(x);
      if (!j) continue;
      const auto lhs = poset.meet_of(Subset::single(a) | Subset::single(*j));
      if (!lhs) continue;
      const auto rhs = distributed_join(poset, a, x);
      if (!rhs || *rhs != *lhs) return {false, MeetDistWitness{a, x}};
    }
  }
  return {true, std::nullopt};
}

const char* triple_class_name(TripleClass c) {
  switch (c) {
    case TripleClass::split: return "split";
    case TripleClass::indeterminate: return "indeterminate";
    case TripleClass::distributive: return "distributive";
  }
  return "?";
}

TripleClassification classify_triples(const Poset& poset) {
  const int n = poset.size();
  TripleClassification out{TripleClass::distributive, std::nullopt, std::nullopt, 0};

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const auto j = poset.join_of(Subset::single(b) | Subset::single(c));
        if (!j) continue;
        const auto lhs = poset.meet_of(Subset::single(a) | Subset::single(*j));
        if (!lhs) continue;
        ++out.triples_seen;
        const auto rhs = distributed_join(poset, a, Subset::single(b) | Subset::single(c));
        if (!rhs) {
          if (!out.indeterminate) out.indeterminate = TripleWitness{a, b, c};
        } else if (*rhs != *lhs) {
          if (!out.split) out.split = TripleWitness{a, b, c};
        }
      }
    }
  }

  if (out.split)
    out.cls = TripleClass::split;
  else if (out.indeterminate)
    out.cls = TripleClass::indeterminate;
  return out;
}

Representation birkhoff_embed(const CompletionLattice& lattice) {
  const FrameReport fr = is_frame(lattice);
  if (!fr.frame) throw input_error("irreducible embedding requires a distributive lattice");

  const std::vector<std::size_t> irr = lattice.join_irreducibles();
  Representation rep;
  rep.ground.reserve(irr.size());
  for (std::size_t t = 0; t < irr.size(); ++t) rep.ground.push_back("g" + std::to_string(t + 1));

  rep.elements.reserve(lattice.size());
  rep.image.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    rep.elements.push_back(lattice.element_string(i));
    std::uint64_t mask = 0;
    for (std::size_t t = 0; t < irr.size(); ++t)
      if (lattice.leq(irr[t], i)) mask |= std::uint64_t{1} << t;
    rep.image.push_back(mask);
  }
  rep.meet_bound = Cardinal::omega();
  rep.join_bound = Cardinal::omega();
  return rep;
}

std::optional<Representation> completion_representation(const Poset& poset,
                                                        const JoinSpecification& spec,
                                                        Cardinal join_bound, std::size_t guard) {
  const CompletionLattice lattice(ideal_family(spec, guard));
  if (!is_frame(lattice).frame) return std::nullopt;

  const std::vector<std::size_t> irr = lattice.join_irreducibles();
  Representation rep;
  for (std::size_t t = 0; t < irr.size(); ++t) rep.ground.push_back("g" + std::to_string(t + 1));
  for (int p = 0; p < poset.size(); ++p) {
    rep.elements.push_back(poset.label(p));
    std::uint64_t mask = 0;
    for (std::size_t t = 0; t < irr.size(); ++t)
      if (lattice.leq(irr[t], lattice.phi(p))) mask |= std::uint64_t{1} << t;
    rep.image.push_back(mask);
  }
  rep.meet_bound = Cardinal::omega();
  rep.join_bound = join_bound;
  return rep;
}

Representation build_representation(const Poset& poset, Cardinal join_bound, std::size_t guard) {
  if (!join_bound.is_omega() && join_bound.value() < 3)
    throw input_error("representation join bound must be at least 3");
  const MeetDistReport md = meet_distributive(poset, join_bound, guard);
  if (!md.holds) {
    const auto& w = *md.witness;
    throw meet_distributivity_error(
        "poset is not meet-distributive at bound " + join_bound.str() + ": witness (" +
            poset.label(w.element) + ", " + poset.set_to_string(w.joined) + ")",
        w);
  }
  auto rep = completion_representation(poset, bounded_spec(poset, join_bound, guard), join_bound,
                                       guard);
  if (!rep)
    throw error("completion of a meet-distributive poset is not a frame; "
                "this indicates an implementation bug");
  return *rep;
}

RepresentationReport verify_representation(const Poset& poset, const Representation& rep,
                                           std::size_t guard) {
  RepresentationReport report;
  const int n = poset.size();
  if (static_cast<int>(rep.elements.size()) != n)
    throw input_error("representation element count does not match the poset");
  if (rep.ground.size() > 64) throw input_error("ground sets above 64 points are unsupported");

  // Match representation rows to poset elements by label.
  std::vector<std::uint64_t> image(n);
  std::unordered_map<std::string, std::uint64_t> by_label;
  for (std::size_t i = 0; i < rep.elements.size(); ++i)
    if (!by_label.emplace(rep.elements[i], rep.image[i]).second)
      throw input_error("duplicate element label in representation: " + rep.elements[i]);
  for (int p = 0; p < n; ++p) {
    const auto it = by_label.find(poset.label(p));
    if (it == by_label.end())
      throw input_error("representation is missing element: " + poset.label(p));
    image[p] = it->second;
  }

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      if (p < q && image[p] == image[q]) report.injective = false;
      const bool rel = poset.leq(p, q);
      const bool inc = (image[p] & ~image[q]) == 0;
      if (rel != inc)
        report.order_violations.push_back(
            "order reflection fails for (" + poset.label(p) + ", " + poset.label(q) + ")");
    }

  check_subset_scan(poset, guard, "representation verification");
  for (std::uint64_t m = 1; m <= poset.universe().bits(); ++m) {
    const Subset s = Subset::of_bits(m);
    const int sz = s.count();
    if (sz < 2) continue;  // singletons are trivially preserved
    if (rep.meet_bound.admits(sz)) {
      const auto glb = poset.meet_of(s);
      if (glb) {
        ++report.meets_checked;
        std::uint64_t inter = ~std::uint64_t{0};
        s.for_each([&](int e) { inter &= image[e]; });
        if (rep.ground.empty()) inter = 0;
        inter &= rep.ground.size() >= 64 ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << rep.ground.size()) - 1;
        if (inter != image[*glb])
          report.meet_violations.push_back("meet of " + poset.set_to_string(s) +
                                           " is not carried to an intersection");
      }
    }
    if (rep.join_bound.admits(sz)) {
      const auto lub = poset.join_of(s);
      if (lub) {
        ++report.joins_checked;
        std::uint64_t uni = 0;
        s.for_each([&](int e) { uni |= image[e]; });
        if (uni != image[*lub])
          report.join_violations.push_back("join of " + poset.set_to_string(s) +
                                           " is not carried to a union");
      }
    }
  }
  return report;
}

namespace {

struct SearchState {
  const Poset& poset;
  std::vector<int> order;  // assignment order (linear extension)
  std::vector<int> position;
  int ground_bound;
  std::uint64_t node_guard;
  std::uint64_t nodes = 0;

  // Constraints, triggered once their last participant is assigned.
  struct Constraint {
    Subset args;
    int result;
    bool is_meet;
  };
  std::vector<std::vector<Constraint>> triggers;  // by position

  std::vector<std::uint64_t> image;  // by element index
};

bool search(SearchState& st, std::size_t pos, int used) {
  if (pos == st.order.size()) return true;
  if (++st.nodes > st.node_guard)
    throw size_guard_error("representation search exceeds the node guard");

  const int elem = st.order[pos];
  const std::uint64_t prefix = used == 0 ? 0 : (std::uint64_t{1} << used) - 1;

  // Candidates use already-seen ground points plus a fresh run of new ones;
  // any solution can be permuted into this first-use normal form.
  for (int fresh = 0; fresh + used <= st.ground_bound; ++fresh) {
    const std::uint64_t block = ((std::uint64_t{1} << fresh) - 1) << used;
    std::uint64_t old = prefix;
    for (;;) {
      const std::uint64_t cand = old | block;
      bool ok = true;
      for (std::size_t i = 0; i < pos && ok; ++i) {
        const int other = st.order[i];
        const bool rel_po = st.poset.leq(other, elem);
        const bool rel_op = st.poset.leq(elem, other);
        const std::uint64_t oi = st.image[other];
        if (((oi & ~cand) == 0) != rel_po) ok = false;
        if (((cand & ~oi) == 0) != rel_op) ok = false;
      }
      if (ok) {
        st.image[elem] = cand;
        bool constraints_ok = true;
        for (const auto& c : st.triggers[pos]) {
          std::uint64_t acc = c.is_meet ? ~std::uint64_t{0} : 0;
          c.args.for_each([&](int e) {
            if (c.is_meet)
              acc &= st.image[e];
            else
              acc |= st.image[e];
          });
          if (c.is_meet && st.ground_bound < 64)
            acc &= (std::uint64_t{1} << st.ground_bound) - 1;
          if (acc != st.image[c.result]) {
            constraints_ok = false;
            break;
          }
        }
        if (constraints_ok && search(st, pos + 1, used + fresh)) return true;
      }
      if (old == 0) break;
      old = (old - 1) & prefix;
    }
  }
  return false;
}

}  // namespace

RepresentationSearch decide_representable(const Poset& poset, Cardinal meet_bound,
                                          Cardinal join_bound, int ground_bound,
                                          std::uint64_t node_guard) {
  if (ground_bound < 1 || ground_bound > 62)
    throw input_error("ground bound must be between 1 and 62");

  SearchState st{poset, poset.linear_extension(), {}, ground_bound, node_guard, 0, {}, {}};
  const int n = poset.size();
  st.position.resize(n);
  for (int i = 0; i < n; ++i) st.position[st.order[i]] = i;
  st.image.resize(n, 0);
  st.triggers.resize(n);

  if (n <= 20) {
    for (std::uint64_t m = 1; m <= poset.universe().bits(); ++m) {
      const Subset s = Subset::of_bits(m);
      if (s.count() < 2) continue;
      int last = 0;
      s.for_each([&](int e) { last = std::max(last, st.position[e]); });
      if (meet_bound.admits(s.count())) {
        if (const auto glb = poset.meet_of(s)) {
          const int trig = std::max(last, st.position[*glb]);
          st.triggers[trig].push_back({s, *glb, true});
        }
      }
      if (join_bound.admits(s.count())) {
        if (const auto lub = poset.join_of(s)) {
          const int trig = std::max(last, st.position[*lub]);
          st.triggers[trig].push_back({s, *lub, false});
        }
      }
    }
  } else {
    throw size_guard_error("representation search supports at most 20 elements");
  }

  RepresentationSearch out;
  out.ground_bound = ground_bound;
  const bool found = search(st, 0, 0);
  out.nodes = st.nodes;
  if (found) {
    Representation rep;
    for (int g = 0; g < ground_bound; ++g) rep.ground.push_back("g" + std::to_string(g + 1));
    for (int p = 0; p < n; ++p) {
      rep.elements.push_back(poset.label(p));
      rep.image.push_back(st.image[p]);
    }
    rep.meet_bound = meet_bound;
    rep.join_bound = join_bound;
    out.found = std::move(rep);
  }
  return out;
}

DistFrameVerdict meet_distributive_frame_check(const Poset& poset, Cardinal bound,
                                               std::size_t guard) {
  const MeetDistReport md = meet_distributive(poset, bound, guard);
  const CompletionLattice lattice(ideal_family(bounded_spec(poset, bound, guard), guard));
  const FrameReport fr = is_frame(lattice);
  return {md.holds, md.witness, fr.frame};
}

}  // namespace posetkit
