#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcalab/bco.hpp"
#include "pcalab/opca.hpp"
#include "pcalab/report.hpp"

namespace pcalab {

/// A sup-like map on the downsets of a filtered opca. `sets` lists the
/// downsets in enumerate_downsets order, so index i here is element i of
/// downset_opca(host).D. Stored witnesses, when present, are checked as given
/// instead of searched for.
struct PseudoDAlgebra {
  FiniteOpca host;
  std::vector<Mask> sets;
  std::vector<Elem> sup;

  struct Witnesses {
    std::optional<Elem> u;
    std::vector<std::optional<Elem>> g2;  // indexed by host element f
    std::optional<Elem> g3, h3, g4, h4;
    std::optional<Elem> v;
  };
  Witnesses stored;

  Elem sup_of(Mask downset) const;
  std::size_t index_of(Mask downset) const;
};

/// sup(alpha) = fn(alpha) for every downset.
PseudoDAlgebra make_pseudo_d(const FiniteOpca& host, const std::function<Elem(Mask)>& fn,
                             std::size_t cap = kDefaultDownsetCap);

/// sup = least upper bound in the host order (bottom for the empty downset).
/// Throws std::invalid_argument when some downset has no lub.
PseudoDAlgebra lattice_join_algebra(const FiniteOpca& host);

struct PseudoDResult {
  Reports reports;
  PseudoDAlgebra::Witnesses found;
  bool ok() const { return all_pass(reports); }
};

/// Clauses 1-4, every witness drawn from the filter. Clause 3 ranges over
/// the downsets of D(host); `cap` bounds that enumeration.
PseudoDResult check_pseudo_d_algebra(const PseudoDAlgebra& alg, std::size_t cap = kDefaultDownsetCap);

/// v in the filter with v·(sup alpha)·b <= c whenever every a·b (a in alpha)
/// is defined and below c. A stored v is tested alone.
std::optional<Elem> check_star(const PseudoDAlgebra& alg);
Report star_report(const PseudoDAlgebra& alg);

/// sup as a total map D(host) -> host, ready for check_applicative_morphism.
Map sup_map(const PseudoDAlgebra& alg);

/// Realizers for sup -| principal downset: a realizer of sup(down a) <= a,
/// one of a <= sup(down a), and w with w·a <= sup(alpha) for a in alpha.
Report check_sup_adjunction(const PseudoDAlgebra& alg);

/// f: A -> B commutes with sup up to realizers in both directions:
/// f(sup alpha) ~ sup_B(down f[alpha]).
bool is_algebra_map(const PseudoDAlgebra& A, const PseudoDAlgebra& B, const Map& f);

}  // namespace pcalab
