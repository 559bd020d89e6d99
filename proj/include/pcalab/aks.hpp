#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcalab/opca.hpp"
#include "pcalab/poset.hpp"
#include "pcalab/report.hpp"

namespace pcalab {

/// Finite abstract Krivine structure. Terms and stacks are indices; sets of
/// either are masks, so both sorts have at most 64 members.
struct Aks {
  std::string subject;
  std::vector<std::string> term_names, stack_names;
  std::vector<int> dot;   // dot[t * nterms + s] = t·s
  std::vector<int> push;  // push[t * nstacks + pi] = t.pi
  std::vector<int> kof;   // kof[pi] = k_pi
  int K = 0, S = 0, cc = 0;
  Mask qp = 0;
  std::vector<Mask> pole;  // pole[t] = stacks pi with (t, pi) in the pole

  /// Carrier element behind each stack when built from an opca.
  std::vector<Elem> stack_elem;

  int nterms() const { return static_cast<int>(term_names.size()); }
  int nstacks() const { return static_cast<int>(stack_names.size()); }
  int app(int t, int s) const { return dot[t * nterms() + s]; }
  int push_(int t, int pi) const { return push[t * nstacks() + pi]; }
  bool in_pole(int t, int pi) const { return contains(pole[t], pi); }
  std::optional<int> find_term(std::string_view name) const;
  std::optional<int> find_stack(std::string_view name) const;
  std::string format_stacks(Mask m) const;
  std::string format_terms(Mask m) const;
};

/// Throws std::invalid_argument on size mismatches or out-of-range entries.
void validate(const Aks& K);

/// Stacks orthogonal to every term in `terms`.
Mask orth_of_terms(const Aks& K, Mask terms);
/// Terms orthogonal to every stack in `stacks` (written |stacks|).
Mask orth_of_stacks(const Aks& K, Mask stacks);
Mask closure_stacks(const Aks& K, Mask stacks);
Mask closure_terms(const Aks& K, Mask terms);

/// (S1)-(S5) plus the quasi-proof conditions, with the first failing tuple.
Reports check_aks(const Aks& K);

/// Smallest pole containing `K.pole` and closed under the five rules.
void close_pole(Aks& K);

struct AksBuild {
  std::optional<Aks> aks;
  Reports reports;
};

/// K(A, A', U) from a filtered opca whose U is set. Stacks are the values of
/// sequence codes of length <= max_len, closed under push.
AksBuild build_aks(const FiniteOpca& A, std::size_t max_len = 3);

/// Closed stack sets, ordered by size then mask value. Throws CapExceeded
/// when there are more than 64 or enumeration would exceed `cap` seeds.
std::vector<Mask> biorth_sets(const Aks& K, std::size_t cap = std::size_t{1} << 20);

Mask aks_apply(const Aks& K, Mask alpha, Mask beta);
Mask aks_imp(const Aks& K, Mask alpha, Mask beta);

/// Streicher's filtered order-ca on the closed stack sets, ordered by
/// reverse inclusion. Element i is `sets[i]`. k and s are the first
/// carrier elements satisfying the laws, trying {K}^perp and {S}^perp first,
/// then the filter, then the rest.
struct OrderCa {
  FiniteOpca A;
  std::vector<Mask> sets;
  bool ks_found = false;
};

OrderCa streicher_order_ca(const Aks& K);
Reports check_order_ca(const Aks& K);

/// Quasi-proof a with (a, t.s.pi) and (a, s.t.pi) in the pole for every s
/// orthogonal to all stacks and every t, pi.
std::optional<int> check_kr(const Aks& K);

/// {cc}^perp <= ((a => b) => a) => a for every pair of closed stack sets.
Report check_pierce(const Aks& K);

/// K' = K·((S·K)·K): (t, pi) in the pole implies (K', s.t.pi) in the pole.
Report check_kprime(const Aks& K);

/// Random structure on the given sorts with a pole closed under the rules.
Aks random_aks(std::uint64_t seed, int nterms, int nstacks, double seed_density = 0.15);

}  // namespace pcalab
