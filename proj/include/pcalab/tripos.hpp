#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcalab/aks.hpp"
#include "pcalab/bco.hpp"
#include "pcalab/opca.hpp"
#include "pcalab/report.hpp"

namespace pcalab {

/// Element-valued predicate on the index set {0, .., n-1}.
using Predicate = std::vector<Elem>;
/// Set-valued predicate (downsets of a carrier, or stack sets of an aks).
using SetPredicate = std::vector<Mask>;

inline constexpr int kMaxEnumeratedIndex = 3;

/// Index of some f in F with f(phi i) defined and <= psi i for every i.
std::optional<std::size_t> predicate_leq(const Predicate& phi, const Predicate& psi, const FiniteBco& S);

/// {a | a·b defined and in U for all b in alpha}.
Mask arrow_U(Mask alpha, const FiniteOpca& A);
SetPredicate arrow_U(const SetPredicate& phi, const FiniteOpca& A);

/// D(A, A') with its BCO view, shared by the Booleanization queries.
struct BooleanContext {
  FiniteOpca A;
  DownsetOpca DA;
  FiniteBco view;
  Mask U = 0;

  explicit BooleanContext(const FiniteOpca& host);
  /// Indices into DA for the downsets of a predicate.
  Predicate lift(const SetPredicate& phi) const;
};

struct BooleanVerdict {
  bool form2 = false, form3 = false;
  std::optional<Elem> realizer2, realizer3;  // D(A, A') carrier indices
  bool agree() const { return form2 == form3; }
};

/// phi <= psi in the Booleanization, read two ways in [I, D(A, A')]: the
/// contrapositive form (psi->U) <= (phi->U) and the double-negation form
/// phi <= ((psi->U)->U).
BooleanVerdict boolean_leq(const SetPredicate& phi, const SetPredicate& psi, const BooleanContext& ctx);

/// t in QP with (t, u.pi) in the pole for all u in |phi i| and pi in psi i.
std::optional<int> streicher_leq(const SetPredicate& phi, const SetPredicate& psi, const Aks& K);

/// e in A' such that b in A', b·a in U imply e·a in U.
bool is_localic_witness(const FiniteOpca& A, Elem e);
std::optional<Elem> localic_criterion(const FiniteOpca& A);

/// Every map from an index set of the given size into `values`.
std::vector<SetPredicate> all_predicates(const std::vector<Mask>& values, int index_size);

/// Forms (2)/(3) agreement, double-negation stability and preorder laws over
/// all downset predicates of the given index size.
Reports booleanization_suite(const FiniteOpca& A, int index_size);

/// Streicher order on closed-stack-set predicates against (phi->U) <= (psi->U)
/// in D(A, A'), on the aks built from A.
Report streicher_correspondence(const FiniteOpca& A, const Aks& K, int index_size);

/// localic_criterion, tv_least of the induced order-ca and check_kr on the aks
/// built from A.
Report localic_triangulation(const FiniteOpca& A, const Aks& K);

}  // namespace pcalab
