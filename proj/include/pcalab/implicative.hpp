#pragma once

#include <optional>
#include <vector>

#include "pcalab/opca.hpp"
#include "pcalab/pseudo_d.hpp"
#include "pcalab/report.hpp"
#include "pcalab/term.hpp"

namespace pcalab {

/// Infima of arbitrary subsets (`inf[mask]`, so the host has at most
/// kMaxImplicativeCarrier elements), a binary implication, and the four
/// constants.
struct ImplicativeKit {
  FiniteOpca host;
  std::vector<Elem> inf;  // size 2^n
  std::vector<Elem> imp;  // imp[b * n + c]
  Elem i = 0, i2 = 0, e = 0, e2 = 0;

  Elem imp_of(Elem b, Elem c) const { return imp[b * host.size() + c]; }
};

inline constexpr int kMaxImplicativeCarrier = 16;

enum class ImplicativeMode { Ioca, PreImplicative };

Reports check_implicative(const ImplicativeKit& kit, ImplicativeMode mode);

/// glb for infima, the Heyting arrow for implication, all constants at the
/// top. Throws std::invalid_argument unless the host order is a Heyting
/// algebra (finite distributive lattice).
ImplicativeKit heyting_kit(const FiniteOpca& host);

/// Combinators built from the kit's constants.
struct DerivedCombinators {
  TermPtr eta, xi, H, K, P, Q, R, v;
  // evaluated values (kUndefined when evaluation fails)
  Elem eta_v = kUndefined, xi_v = kUndefined, H_v = kUndefined, K_v = kUndefined,
       P_v = kUndefined, Q_v = kUndefined, R_v = kUndefined, v_v = kUndefined;
};

DerivedCombinators derive_combinators(const ImplicativeKit& kit);

struct SupFromImplication {
  PseudoDAlgebra alg;  // stored witnesses are the derived combinators
  DerivedCombinators dc;
  Reports reports;  // derived.in-filter, fact.a .. fact.d
};

/// sup alpha = inf over b of ((inf over a in alpha of (a => b)) => b), with
/// the derived combinators stored as clause witnesses. Facts (a)-(d) are
/// checked exhaustively; the pseudo-D-algebra clauses are left to
/// check_pseudo_d_algebra / check_star on the returned algebra.
SupFromImplication sup_from_implication(const ImplicativeKit& kit);

struct ImplicationFromSup {
  std::optional<ImplicativeKit> kit;
  Reports reports;  // refusal or pass with the chosen constants
};

/// imp(b, c) = sup I(down b, down c), inf(X) = sup of the lower bounds of X;
/// constants e = i' = <x>u(h4 x), e' = v, i = <x>g4(u(g2 x)) with g2 taken
/// for skk. Witnesses u, g2, g4, h4, v are searched on the algebra.
ImplicationFromSup implication_from_sup(const PseudoDAlgebra& alg);

}  // namespace pcalab
