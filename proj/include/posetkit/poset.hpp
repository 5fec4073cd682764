#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetkit {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or contract-violating input (cycles, duplicate labels,
// undefined joins where one is required, mismatched posets, ...).
struct input_error : error {
  using error::error;
};

// An enumeration or table would exceed its configured bound.
struct size_guard_error : error {
  using error::error;
};

inline constexpr std::size_t kDefaultEnumGuard = std::size_t{1} << 20;

// A subset of a poset's carrier, stored as a bitmask over element indices.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset of_bits(std::uint64_t b) {
    Subset s;
    s.bits_ = b;
    return s;
  }
  static constexpr Subset single(int i) { return of_bits(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  // True when other is contained in this set.
  constexpr bool includes(Subset other) const { return (other.bits_ & ~bits_) == 0; }

  Subset& add(int i) {
    bits_ |= std::uint64_t{1} << i;
    return *this;
  }
  Subset& remove(int i) {
    bits_ &= ~(std::uint64_t{1} << i);
    return *this;
  }

  // Lowest member index, or -1 when empty.
  int first() const { return bits_ ? std::countr_zero(bits_) : -1; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (auto b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (auto b = bits_; b; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr Subset operator&(Subset a, Subset b) { return of_bits(a.bits_ & b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return of_bits(a.bits_ | b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return of_bits(a.bits_ & ~b.bits_); }
  // plain bit order, usable as a container key; families prefer
  // family_order_less below
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical ordering used for stored families: by size, then by mask value.
inline bool family_order_less(Subset a, Subset b) {
  const int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.bits() < b.bits();
}

// A finite poset: labelled carrier plus a reflexive partial order, kept as
// per-element up-set and down-set masks. Immutable after construction.
class Poset {
 public:
  // Builds from generating pairs (a, b) meaning a <= b. The relation used is
  // the reflexive-transitive closure of the pairs; antisymmetry violations
  // (cycles) and duplicate labels are rejected.
  static Poset from_pairs(std::vector<std::string> labels,
                          const std::vector<std::pair<std::string, std::string>>& le_pairs);

  // Builds from per-element up-set masks that must already describe a
  // partial order.
  static Poset from_up_sets(std::vector<std::string> labels, std::vector<Subset> up);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int p) const { return labels_[p]; }
  std::optional<int> index_of(std::string_view label) const;
  int require_index(std::string_view label) const;

  bool leq(int p, int q) const { return up_[p].contains(q); }
  Subset universe() const { return universe_; }
  Subset down_of(int p) const { return down_[p]; }
  Subset up_of(int p) const { return up_[p]; }

  Subset down_closure(Subset s) const;
  bool is_downset(Subset s) const { return down_closure(s) == s; }

  Subset upper_bounds(Subset s) const;
  Subset lower_bounds(Subset s) const;

  // Least upper bound / greatest lower bound of a nonempty subset, when one
  // exists. Empty input is rejected: no top or bottom is ever synthesized.
  std::optional<int> join_of(Subset s) const;
  std::optional<int> meet_of(Subset s) const;

  // Every down-set, in canonical order. Refuses when the count would exceed
  // the guard.
  std::vector<Subset> all_downsets(std::size_t guard = kDefaultEnumGuard) const;

  bool is_lattice() const;

  // Elements with exactly one lower cover (never the bottom). Requires a
  // lattice.
  Subset join_irreducibles() const;

  std::vector<int> lower_covers(int p) const;
  // Transitive reduction as (lower, upper) pairs, ordered by index.
  std::vector<std::pair<int, int>> cover_pairs() const;

  // Element indices ordered so that smaller elements come first.
  std::vector<int> linear_extension() const;

  std::string set_to_string(Subset s) const;
  bool same_structure(const Poset& other) const {
    return labels_ == other.labels_ && up_ == other.up_;
  }

 private:
  Poset() = default;
  void finish_init();

  std::vector<std::string> labels_;
  std::vector<Subset> up_;    // up_[p] = {q : p <= q}
  std::vector<Subset> down_;  // down_[p] = {q : q <= p}
  Subset universe_;
};

}  // namespace posetkit
