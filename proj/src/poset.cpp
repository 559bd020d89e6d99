#include "pcalab/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcalab/error.hpp"

namespace pcalab {

std::vector<Elem> elements_of(Mask m) {
  std::vector<Elem> out;
  for_each_bit(m, [&](Elem e) { out.push_back(e); });
  return out;
}

Poset::Poset(int n) : n_(n), down_(n), up_(n) {
  if (n < 0 || n > kMaxCarrier) throw std::invalid_argument("carrier size out of range");
  for (int i = 0; i < n; ++i) down_[i] = up_[i] = bit(i);
}

Poset Poset::from_pairs(int n, const std::vector<std::pair<Elem, Elem>>& pairs) {
  Poset P(n);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("order pair outside carrier");
    P.down_[b] |= bit(a);
  }
  // Warshall on the down-set rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (contains(P.down_[i], k)) P.down_[i] |= P.down_[k];
  for (int i = 0; i < n; ++i) P.up_[i] = 0;
  for (int b = 0; b < n; ++b)
    for_each_bit(P.down_[b], [&](Elem a) { P.up_[a] |= bit(b); });
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (P.leq(a, b) && P.leq(b, a))
        throw std::invalid_argument("order is not antisymmetric (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ")");
  return P;
}

bool Poset::is_downset(Mask m) const { return down_closure(m) == m; }
bool Poset::is_upset(Mask m) const { return up_closure(m) == m; }

Mask Poset::down_closure(Mask m) const {
  Mask out = 0;
  for_each_bit(m, [&](Elem e) { out |= down_[e]; });
  return out;
}

Mask Poset::up_closure(Mask m) const {
  Mask out = 0;
  for_each_bit(m, [&](Elem e) { out |= up_[e]; });
  return out;
}

Mask Poset::lower_bounds(Mask m) const {
  Mask out = all();
  for_each_bit(m, [&](Elem e) { out &= down_[e]; });
  return out;
}

Mask Poset::upper_bounds(Mask m) const {
  Mask out = all();
  for_each_bit(m, [&](Elem e) { out &= up_[e]; });
  return out;
}

std::optional<Elem> Poset::glb(Mask m) const {
  const Mask lb = lower_bounds(m);
  for (Elem e = 0; e < n_; ++e)
    if (contains(lb, e) && subset_of(lb, down_[e])) return e;
  return std::nullopt;
}

std::optional<Elem> Poset::lub(Mask m) const {
  const Mask ub = upper_bounds(m);
  for (Elem e = 0; e < n_; ++e)
    if (contains(ub, e) && subset_of(ub, up_[e])) return e;
  return std::nullopt;
}

std::optional<Elem> Poset::least_of(Mask m) const {
  for (Elem e = 0; e < n_; ++e)
    if (contains(m, e) && subset_of(m, up_[e])) return e;
  return std::nullopt;
}

std::vector<Elem> Poset::linear_extension() const {
  std::vector<Elem> order(n_);
  for (int i = 0; i < n_; ++i) order[i] = i;
  // Strict down-set sizes give a valid topological key.
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return popcount(down_[a]) < popcount(down_[b]); });
  return order;
}

std::vector<std::pair<Elem, Elem>> Poset::covering_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem b = 0; b < n_; ++b) {
    const Mask strict = down_[b] & ~bit(b);
    for_each_bit(strict, [&](Elem a) {
      // a is covered by b when nothing lies strictly between.
      if ((strict & up_[a] & ~bit(a)) == 0) out.emplace_back(a, b);
    });
  }
  return out;
}

std::vector<Mask> enumerate_downsets(const Poset& P, std::size_t cap) {
  const std::vector<Elem> order = P.linear_extension();
  std::vector<Mask> out;
  // Iterative DFS over include/exclude decisions; an element may be included
  // only when everything strictly below it already is.
  struct Frame {
    std::size_t depth;
    Mask chosen;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth == order.size()) {
      if (out.size() >= cap) throw CapExceeded("downset enumeration", cap);
      out.push_back(f.chosen);
      continue;
    }
    const Elem e = order[f.depth];
    const Mask below = P.down(e) & ~bit(e);
    if (subset_of(below, f.chosen)) stack.push_back({f.depth + 1, f.chosen | bit(e)});
    stack.push_back({f.depth + 1, f.chosen});
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

Poset inclusion_order(const std::vector<Mask>& sets) {
  const int n = static_cast<int>(sets.size());
  if (n > kMaxCarrier) throw CapExceeded("carrier of inclusion order", kMaxCarrier);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && subset_of(sets[a], sets[b])) pairs.emplace_back(a, b);
  return Poset::from_pairs(n, pairs);
}

}  // namespace pcalab
