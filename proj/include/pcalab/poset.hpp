#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pcalab/term.hpp"

namespace pcalab {

/// Subset of a carrier with at most 64 elements.
using Mask = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

constexpr Mask bit(Elem e) { return Mask{1} << e; }
constexpr bool contains(Mask m, Elem e) { return (m >> e) & 1U; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const int e = std::countr_zero(m);
    f(static_cast<Elem>(e));
    m &= m - 1;
  }
}

std::vector<Elem> elements_of(Mask m);

/// Finite partial order stored as principal down- and up-sets.
class Poset {
 public:
  Poset() = default;
  /// Discrete order on n elements.
  explicit Poset(int n);

  /// Reflexive-transitive closure of the given pairs (a <= b). Throws
  /// std::invalid_argument if the closure is not antisymmetric.
  static Poset from_pairs(int n, const std::vector<std::pair<Elem, Elem>>& pairs);

  int size() const { return n_; }
  bool leq(Elem a, Elem b) const { return contains(down_[b], a); }
  Mask down(Elem a) const { return down_[a]; }
  Mask up(Elem a) const { return up_[a]; }
  Mask all() const { return full_mask(n_); }

  bool is_downset(Mask m) const;
  bool is_upset(Mask m) const;
  Mask down_closure(Mask m) const;
  Mask up_closure(Mask m) const;

  /// Lower bounds of m (all elements when m is empty).
  Mask lower_bounds(Mask m) const;
  Mask upper_bounds(Mask m) const;
  std::optional<Elem> glb(Mask m) const;
  std::optional<Elem> lub(Mask m) const;
  std::optional<Elem> meet(Elem a, Elem b) const { return glb(bit(a) | bit(b)); }
  std::optional<Elem> join(Elem a, Elem b) const { return lub(bit(a) | bit(b)); }
  std::optional<Elem> top() const { return glb(0); }
  std::optional<Elem> bottom() const { return lub(0); }

  /// Least element of m under this order, if one exists.
  std::optional<Elem> least_of(Mask m) const;

  /// Elements sorted so that a < b implies a comes first.
  std::vector<Elem> linear_extension() const;

  std::vector<std::pair<Elem, Elem>> covering_pairs() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> down_;
  std::vector<Mask> up_;
};

inline constexpr std::size_t kDefaultDownsetCap = std::size_t{1} << 16;

/// All downsets, ordered by size and then by mask value (so the empty set
/// comes first). Throws CapExceeded past `cap`.
std::vector<Mask> enumerate_downsets(const Poset& P, std::size_t cap = kDefaultDownsetCap);

/// Inclusion order on a list of subsets.
Poset inclusion_order(const std::vector<Mask>& sets);

}  // namespace pcalab
