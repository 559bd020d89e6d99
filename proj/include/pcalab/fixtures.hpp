#pragma once

#include <string>
#include <vector>

#include "pcalab/aks.hpp"
#include "pcalab/opca.hpp"
#include "pcalab/poset.hpp"

namespace pcalab {

struct LatticeFixture {
  std::string name;
  std::vector<std::string> names;  // bottom "0", top "1"
  Poset order;
  bool distributive = false;
};

/// One representative of each isomorphism type of lattice with at most
/// `max_size` (<= 5) elements.
std::vector<LatticeFixture> small_lattices(int max_size = 5);
const LatticeFixture& lattice(const std::string& name);

/// Meet application, k = s = top, filter {top}.
FiniteOpca lattice_opca(const LatticeFixture& L);
FiniteOpca lattice_opca(const std::string& name);

/// Downsets disjoint from the filter.
std::vector<Mask> admissible_U(const FiniteOpca& A);
FiniteOpca with_U(FiniteOpca A, Mask U);

/// 0 < m < 1 with meet application undefined only at 1·1; k = s = m, filter {m}.
FiniteOpca partial_l3();

/// Lattice opcas with alternative filters (the whole carrier, meet-closed
/// upsets) plus the partial chain, restricted to at most `max_size` elements.
std::vector<FiniteOpca> filtered_fixtures(int max_size);

/// Boolean algebra on `atoms` atoms as a meet opca (a Heyting fixture).
FiniteOpca boolean_algebra(int atoms);

/// Structures reached from hand-written raw aks files in the test data.
Aks one_stack_aks();

}  // namespace pcalab
