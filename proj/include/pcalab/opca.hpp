#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcalab/poset.hpp"
#include "pcalab/report.hpp"
#include "pcalab/term.hpp"

namespace pcalab {

/// Named predicate over a finite index set: one element (or one downset,
/// stored as a mask) per index.
struct NamedPredicate {
  std::string name;
  std::vector<std::string> index;
  std::vector<Mask> values;  // each entry is a downset of the host carrier
};

/// Finite ordered partial combinatory algebra with designated k and s and an
/// optional filter and downset U.
class FiniteOpca {
 public:
  FiniteOpca() = default;
  /// `table[a * n + b]` is a·b or kUndefined. Throws std::invalid_argument on
  /// entries, k or s outside the carrier.
  FiniteOpca(std::vector<std::string> names, Poset order, std::vector<Elem> table, Elem k, Elem s);

  int size() const { return order_.size(); }
  const Poset& order() const { return order_; }
  bool leq(Elem a, Elem b) const { return order_.leq(a, b); }
  Elem apply(Elem a, Elem b) const { return table_[a * size() + b]; }
  bool defined(Elem a, Elem b) const { return apply(a, b) != kUndefined; }
  Elem apply(Elem a, Elem b, Elem c) const {
    const Elem ab = apply(a, b);
    return ab == kUndefined ? kUndefined : apply(ab, c);
  }
  const std::vector<Elem>& table() const { return table_; }
  bool total() const;

  Elem k() const { return k_; }
  Elem s() const { return s_; }
  void set_ks(Elem k, Elem s);

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem e) const { return names_[e]; }
  std::optional<Elem> find(std::string_view name) const;
  std::string format_set(Mask m) const;
  ConstNamer namer() const;
  ConstResolver resolver() const;

  /// The filter, or the whole carrier when none was given.
  Mask filter_or_all() const { return filter ? *filter : order_.all(); }
  /// skk evaluated here, if defined.
  std::optional<Elem> skk() const;

  std::string subject;
  std::optional<Mask> filter;
  std::optional<Mask> U;
  std::vector<NamedPredicate> predicates;

 private:
  std::vector<std::string> names_;
  Poset order_;
  std::vector<Elem> table_;
  Elem k_ = 0;
  Elem s_ = 0;
};

/// Counterexample text for the k law at candidate `k`, empty if it holds.
std::string k_law_violation(const FiniteOpca& A, Elem k);
/// Counterexample text for the s law at candidate `s`, empty if it holds.
std::string s_law_violation(const FiniteOpca& A, Elem s);
/// s·x·y must be defined for all x, y so that abstractions always evaluate.
std::string s_partial_violation(const FiniteOpca& A, Elem s);

/// Order, downward compatibility, k and s laws, and definedness of s·x·y.
/// With `search_ks`, also lists the first (k, s) pair of carrier elements
/// satisfying both laws.
Reports check_opca_axioms(const FiniteOpca& A, bool search_ks = false);

/// Closure under defined application and membership of k and s.
Report check_filter(const FiniteOpca& A, Mask subset);

/// Some b in the filter with b·a2 <= a1, first in carrier order.
std::optional<Elem> turing_leq(const FiniteOpca& A, Elem a1, Elem a2);

/// Meet-semilattice opca: application is the meet, k = s = top, filter {top}.
/// Throws std::invalid_argument if `P` is not a meet-semilattice with top.
FiniteOpca semilattice_opca(const Poset& P, std::vector<std::string> names = {});

}  // namespace pcalab
