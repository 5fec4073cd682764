#pragma once

// Brute-force reference implementations used to pin expected values. These
// work straight from the definitions with plain loops over the order
// relation, independently of the library's enumeration and bitmask paths.

#include <algorithm>
#include <optional>
#include <vector>

#include "posetkit/join_spec.hpp"
#include "posetkit/poset.hpp"

namespace oracle {

using posetkit::Poset;
using posetkit::Subset;

inline bool is_downset(const Poset& p, Subset s) {
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (s.contains(b) && p.leq(a, b) && !s.contains(a)) return false;
  return true;
}

inline std::vector<Subset> downsets(const Poset& p) {
  std::vector<Subset> out;
  for (std::uint64_t m = 0; m <= p.universe().bits(); ++m)
    if (is_downset(p, Subset::of_bits(m))) out.push_back(Subset::of_bits(m));
  std::sort(out.begin(), out.end(), posetkit::family_order_less);
  return out;
}

inline std::optional<int> join(const Poset& p, Subset s) {
  for (int u = 0; u < p.size(); ++u) {
    bool upper = true;
    for (int e = 0; e < p.size(); ++e)
      if (s.contains(e) && !p.leq(e, u)) upper = false;
    if (!upper) continue;
    bool least = true;
    for (int v = 0; v < p.size(); ++v) {
      bool v_upper = true;
      for (int e = 0; e < p.size(); ++e)
        if (s.contains(e) && !p.leq(e, v)) v_upper = false;
      if (v_upper && !p.leq(u, v)) least = false;
    }
    if (least) return u;
  }
  return std::nullopt;
}

inline std::optional<int> meet(const Poset& p, Subset s) {
  for (int u = 0; u < p.size(); ++u) {
    bool lower = true;
    for (int e = 0; e < p.size(); ++e)
      if (s.contains(e) && !p.leq(u, e)) lower = false;
    if (!lower) continue;
    bool greatest = true;
    for (int v = 0; v < p.size(); ++v) {
      bool v_lower = true;
      for (int e = 0; e < p.size(); ++e)
        if (s.contains(e) && !p.leq(v, e)) v_lower = false;
      if (v_lower && !p.leq(v, u)) greatest = false;
    }
    if (greatest) return u;
  }
  return std::nullopt;
}

// Down-sets closed under the joins of the given sets.
inline std::vector<Subset> ideals(const Poset& p, const std::vector<Subset>& spec_sets) {
  std::vector<Subset> out;
  for (Subset d : downsets(p)) {
    bool closed = true;
    for (Subset t : spec_sets) {
      bool inside = true;
      t.for_each([&](int e) {
        if (!d.contains(e)) inside = false;
      });
      if (!inside) continue;
      const auto j = join(p, t);
      if (j && !d.contains(*j)) closed = false;
    }
    if (closed) out.push_back(d);
  }
  return out;
}

// Smallest ideal containing s: intersect every ideal that contains it.
inline Subset smallest_ideal(const Poset& p, const std::vector<Subset>& spec_sets, Subset s) {
  Subset out = p.universe();
  for (Subset d : ideals(p, spec_sets))
    if (d.includes(s)) out = out & d;
  return out;
}

// Subset by labels, for readable expected values.
inline Subset named(const Poset& p, std::initializer_list<const char*> labels) {
  Subset out;
  for (const char* l : labels) out.add(p.require_index(l));
  return out;
}

}  // namespace oracle
