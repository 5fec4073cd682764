#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace posetkit {

// A size bound for sets: either a natural number or the marker "omega"
// (meaning: every finite size is admitted). Finite values compare below
// omega.
class Cardinal {
 public:
  static constexpr Cardinal finite(std::uint32_t k) { return Cardinal(false, k); }
  static constexpr Cardinal omega() { return Cardinal(true, 0); }

  constexpr bool is_omega() const { return omega_; }

  // Finite value; only meaningful when !is_omega().
  constexpr std::uint32_t value() const { return k_; }

  // True when a set of the given size is strictly below this bound.
  constexpr bool admits(std::size_t size) const { return omega_ || size < k_; }

  friend constexpr std::strong_ordering operator<=>(Cardinal a, Cardinal b) {
    if (a.omega_ && b.omega_) return std::strong_ordering::equal;
    if (a.omega_) return std::strong_ordering::greater;
    if (b.omega_) return std::strong_ordering::less;
    return a.k_ <=> b.k_;
  }
  friend constexpr bool operator==(Cardinal a, Cardinal b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::string str() const { return omega_ ? "omega" : std::to_string(k_); }

 private:
  constexpr Cardinal(bool o, std::uint32_t k) : omega_(o), k_(k) {}
  bool omega_;
  std::uint32_t k_;
};

}  // namespace posetkit
