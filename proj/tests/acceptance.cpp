// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "k2_pool.hpp"
#include "oracles.hpp"
#include "pcalab/aks.hpp"
#include "pcalab/bco.hpp"
#include "pcalab/fixtures.hpp"
#include "pcalab/implicative.hpp"
#include "pcalab/io.hpp"
#include "pcalab/k2.hpp"
#include "pcalab/pseudo_d.hpp"
#include "pcalab/sequence.hpp"
#include "pcalab/tripos.hpp"

using namespace pcalab;

namespace {

// Pinned limits.
constexpr double kCriterion1Seconds = 10.0;
constexpr double kCriterion4Seconds = 30.0;
constexpr int kTermModelInstances = 200;
constexpr std::uint64_t kTermModelFuel = 100'000;
constexpr int kBasisProbes = 100;
constexpr std::uint64_t kBasisFuel = 100'000;
constexpr int kMonotonicityProbes = 1000;
constexpr int kTauScenarios = 3;
constexpr int kTauIndices = 10;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int n, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.ok) ++failures;
  std::printf("criterion %2d %s  %s: %s [%.2f s]\n", n, o.ok ? "PASS" : "FAIL", title, o.detail.c_str(), s);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string data(const std::string& f) { return std::string(PCALAB_TEST_DATA) + "/" + f; }

struct Built {
  FiniteOpca A;
  Aks K;
};

std::vector<Built>& built_fixtures() {
  static std::vector<Built> v;
  return v;
}

std::vector<Aks> raw_fixtures() {
  std::vector<Aks> out;
  for (const char* f : {"one_stack.aks", "empty_pole.aks", "two_stacks.aks", "three_terms.aks"})
    out.push_back(load_aks(data(f)));
  return out;
}

std::vector<Map> all_maps(int from, int to) {
  std::vector<Map> out{Map{}};
  for (int i = 0; i < from; ++i) {
    std::vector<Map> next;
    for (const auto& m : out)
      for (Elem v = 0; v < to; ++v) {
        next.push_back(m);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

// All terms with at most `leaves` leaves over the given atoms.
std::vector<TermPtr> terms_over(const std::vector<TermPtr>& atoms, int leaves) {
  std::vector<std::vector<TermPtr>> by(leaves + 1);
  by[1] = atoms;
  for (int n = 2; n <= leaves; ++n)
    for (int l = 1; l < n; ++l)
      for (const auto& f : by[l])
        for (const auto& a : by[n - l]) by[n].push_back(app(f, a));
  std::vector<TermPtr> out;
  for (int n = 1; n <= leaves; ++n) out.insert(out.end(), by[n].begin(), by[n].end());
  return out;
}

Outcome c1() {
  const auto t0 = std::chrono::steady_clock::now();
  int n = 0;
  for (const auto& L : small_lattices(5)) {
    const FiniteOpca A0 = lattice_opca(L);
    for (Mask U : admissible_U(A0)) {
      const FiniteOpca A = with_U(A0, U);
      const AksBuild b = build_aks(A);
      if (!b.aks) return {false, A.subject + ": construction refused"};
      for (const Report& r : check_aks(*b.aks))
        if (!r.passed()) return {false, A.subject + " " + r.check + ": " + r.counterexample};
      built_fixtures().push_back({A, *b.aks});
      ++n;
    }
  }
  const double s = seconds_since(t0);
  return {s < kCriterion1Seconds, std::to_string(n) + " structures over 10 lattice types, S1-S5 all pass, " +
                                      std::to_string(s).substr(0, 4) + " s of " +
                                      std::to_string(static_cast<int>(kCriterion1Seconds)) + " s"};
}

Outcome c2() {
  std::vector<Aks> all;
  for (const auto& b : built_fixtures()) all.push_back(b.K);
  for (auto& k : raw_fixtures()) all.push_back(k);
  int with_kr = 0;
  for (const Aks& K : all) {
    const bool kr = check_kr(K).has_value();
    const bool tv = tv_least(streicher_order_ca(K).A).has_value();
    if (kr != tv) return {false, K.subject + ": kr=" + std::to_string(kr) + " tv-least=" + std::to_string(tv)};
    with_kr += kr;
  }
  return {true, std::to_string(all.size()) + " structures (" + std::to_string(raw_fixtures().size()) +
                    " raw), agreement on all, " + std::to_string(with_kr) + " with a Kr witness, tolerance 0"};
}

Outcome c3() {
  for (const auto& b : built_fixtures()) {
    const Report r = localic_triangulation(b.A, b.K);
    if (!r.passed()) return {false, b.A.subject + ": " + r.counterexample};
  }
  int ex1 = 0;
  for (const auto& L : small_lattices(5)) {
    const FiniteOpca A0 = lattice_opca(L);
    const FiniteOpca A = with_U(A0, A0.order().all() & ~*A0.filter);
    if (!localic_criterion(A)) return {false, A.subject + ": no witness for U = A - A'"};
    const auto i = A.skk();
    if (!i || !is_localic_witness(A, *i)) return {false, A.subject + ": skk rejected"};
    ++ex1;
  }
  return {true, std::to_string(built_fixtures().size()) + " triangulations agree; U = A - A' has a witness on " +
                    std::to_string(ex1) + " fixtures, skk accepted on each"};
}

Outcome c4() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto fx = filtered_fixtures(3);
  std::size_t maps = 0, applicative = 0;
  for (const auto& A : fx)
    for (const auto& B : fx)
      for (const Map& f : all_maps(A.size(), B.size())) {
        const ApplicativeResult r = check_applicative_morphism(A, B, f);
        ++maps;
        applicative += r.applicative;
        if (!r.agree()) return {false, A.subject + " -> " + B.subject + " disagreement"};
      }
  const double s = seconds_since(t0);
  return {s < kCriterion4Seconds, std::to_string(fx.size()) + " fixtures, " + std::to_string(maps) + " maps (" +
                                      std::to_string(applicative) + " applicative), all agree, limit " +
                                      std::to_string(static_cast<int>(kCriterion4Seconds)) + " s"};
}

// Single-entry perturbations of a join algebra's sup table that still
// satisfy the pseudo-D-algebra clauses.
std::vector<PseudoDAlgebra> sup_mutants(const PseudoDAlgebra& base) {
  std::vector<PseudoDAlgebra> out;
  for (std::size_t i = 0; i < base.sets.size(); ++i)
    for (Elem v = 0; v < base.host.size(); ++v) {
      if (v == base.sup[i]) continue;
      std::vector<Elem> sup = base.sup;
      sup[i] = v;
      PseudoDAlgebra m = make_pseudo_d(base.host, [&](Mask d) { return sup[base.index_of(d)]; });
      if (check_pseudo_d_algebra(m).ok()) out.push_back(std::move(m));
    }
  return out;
}

Outcome c5() {
  std::vector<PseudoDAlgebra> algs;
  std::size_t mutants = 0;
  for (const auto& L : small_lattices(5)) {
    const FiniteOpca A0 = lattice_opca(L);
    for (Elem f = 0; f < A0.size(); ++f) {
      FiniteOpca A = A0;
      A.filter = A0.order().up(f);
      A.subject += "/" + A0.name(f);
      const PseudoDAlgebra base = lattice_join_algebra(A);
      auto m = sup_mutants(base);
      mutants += m.size();
      if (check_pseudo_d_algebra(base).ok()) algs.push_back(base);
      algs.insert(algs.end(), m.begin(), m.end());
    }
  }
  algs.push_back(lattice_join_algebra(boolean_algebra(3)));
  int star = 0;
  for (const auto& alg : algs) {
    const bool v = check_star(alg).has_value();
    const bool ap = check_applicative_morphism(downset_opca(alg.host).D, alg.host, sup_map(alg)).applicative;
    if (v != ap) return {false, alg.host.subject + ": star=" + std::to_string(v) + " applicative=" + std::to_string(ap)};
    star += v;
  }
  const int failing = static_cast<int>(algs.size()) - star;
  return {failing >= 1, std::to_string(algs.size()) + " algebras (" + std::to_string(mutants) +
                            " sup mutants), " + std::to_string(star) + " with star, " + std::to_string(failing) +
                            " without (M3, N5 joins), equivalence holds on all"};
}

Outcome c6() {
  for (const FiniteOpca& H : {lattice_opca("B4"), boolean_algebra(3), lattice_opca("1+B4")}) {
    const SupFromImplication s = sup_from_implication(heyting_kit(H));
    for (const Report& r : s.reports)
      if (!r.passed()) return {false, H.subject + " " + r.check + ": " + r.counterexample};
    if (!s.dc.eta || s.dc.eta_v == kUndefined) return {false, "eta undefined"};
    const PseudoDResult pd = check_pseudo_d_algebra(s.alg);
    if (!pd.ok()) return {false, H.subject + ": clauses 1-4 fail"};
    if (!check_star(s.alg)) return {false, H.subject + ": star condition fails"};
  }
  for (const FiniteOpca& L : {lattice_opca("L5"), lattice_opca("B4+1"), boolean_algebra(3)}) {
    const ImplicationFromSup r = implication_from_sup(lattice_join_algebra(L));
    if (!r.kit) return {false, L.subject + ": no implication"};
    for (const Report& x : check_implicative(*r.kit, ImplicativeMode::PreImplicative))
      if (!x.passed()) return {false, L.subject + " " + x.check + ": " + x.counterexample};
  }
  return {true, "sup from implication on B4, B8, 1+B4 passes facts (a)-(d), clauses 1-4, star, combinators in "
                "filter; implication from sup on L5, B4+1, B8 is pre-implicative"};
}

Outcome c7() {
  const auto fx = filtered_fixtures(4);
  std::size_t morphisms = 0, dense = 0;
  for (const auto& A : fx)
    for (const auto& B : fx)
      for (const Map& f : all_maps(A.size(), B.size())) {
        if (!check_applicative_morphism(A, B, f).applicative) continue;
        const DensityResult d = check_density(A, B, f);
        ++morphisms;
        dense += d.simple.has_value();
        if (!d.agree()) return {false, A.subject + " -> " + B.subject + ": witnesses disagree"};
      }
  return {true, std::to_string(fx.size()) + " fixtures, " + std::to_string(morphisms) +
                    " applicative morphisms, " + std::to_string(dense) + " dense, both witness forms agree"};
}

Outcome c8() {
  std::vector<FiniteOpca> hosts{with_U(lattice_opca("L2"), bit(0))};
  const FiniteOpca L3 = lattice_opca("L3");
  for (Mask U : admissible_U(L3)) hosts.push_back(with_U(L3, U));
  std::size_t pairs = 0;
  for (const auto& A : hosts) {
    for (const Report& r : booleanization_suite(A, 2))
      if (!r.passed()) return {false, A.subject + " " + r.check + ": " + r.counterexample};
    const AksBuild b = build_aks(A);
    if (!b.aks) return {false, A.subject + ": no aks"};
    const Report c = streicher_correspondence(A, *b.aks, 2);
    if (!c.passed()) return {false, A.subject + ": " + c.counterexample};
    pairs += std::stoul(c.witnesses[0].second);
  }
  return {true, std::to_string(hosts.size()) + " hosts, forms agree, double negation stable, " +
                    std::to_string(pairs) + " Streicher pairs match, |I| = 2"};
}

Outcome c9() {
  std::size_t n = 0;
  std::vector<Aks> all;
  for (const auto& b : built_fixtures()) all.push_back(b.K);
  for (auto& k : raw_fixtures()) all.push_back(k);
  for (const Aks& K : all) {
    const Report r = check_pierce(K);
    if (!r.passed()) return {false, K.subject + ": " + r.counterexample};
    n += std::stoul(r.witnesses[0].second);
  }
  return {true, std::to_string(all.size()) + " structures, " + std::to_string(n) + " closed-set pairs"};
}

Outcome c10() {
  const auto fx = filtered_fixtures(5);
  for (const auto& A : fx) {
    const DerivedKit k = derive_sequence_kit(A, 3);
    if (!k.ok())
      for (const Report& r : k.reports)
        if (!r.passed()) return {false, A.subject + " " + r.check + ": " + r.counterexample};
  }
  std::mt19937_64 rng(2024);
  const std::vector<TermPtr> atoms{cst(0, "a"), cst(1, "b"), cst(2, "c"), K(), S(), app(K(), S()),
                                   app(S(), K()), app(K(), cst(3, "d"))};
  int failures = 0;
  for (int i = 0; i < kTermModelInstances; ++i) {
    const std::size_t len = 1 + rng() % 3;
    std::vector<TermPtr> items;
    for (std::size_t j = 0; j < len; ++j) items.push_back(atoms[rng() % atoms.size()]);
    const std::size_t n = rng() % len;
    if (!check_sequence_clauses_term_model(items, n, kTermModelFuel).empty()) ++failures;
  }
  return {failures == 0, std::to_string(fx.size()) + " finite fixtures exhaustive to length 3; " +
                             std::to_string(kTermModelInstances) + " term-model instances at fuel 10^5, " +
                             std::to_string(failures) + " failures"};
}

Outcome c11() {
  using namespace pcalab::k2;
  using probes::pool;
  std::mt19937_64 rng(99);
  const Basis& B = k2_basis();
  int s_compared = 0;
  for (int i = 0; i < kBasisProbes; ++i) {
    const auto& a = pool()[rng() % pool().size()];
    const auto& b = pool()[rng() % pool().size()];
    const auto& c = pool()[rng() % pool().size()];
    const Nat n = rng() % 20;
    const Answer k = k2_apply(app(B.k, probes::elem(a)), probes::elem(b), n, kBasisFuel);
    if (!k.value || *k.value != a.fn(n)) return {false, std::string("k law at ") + a.text};
    const Answer id = k2_apply(k2_skk(), probes::elem(a), n, kBasisFuel);
    if (!id.value || *id.value != a.fn(n)) return {false, std::string("skk at ") + a.text};
    std::optional<Nat> want;
    try {
      want = oracle::dialogue(probes::applied(a.fn, c.fn), probes::applied(b.fn, c.fn), n, 64);
    } catch (const std::runtime_error&) {
    }
    if (want) {
      ++s_compared;
      const Answer s = k2_apply(app(app(B.s, probes::elem(a)), probes::elem(b)), probes::elem(c), n, kBasisFuel);
      if (!s.value || *s.value != *want) return {false, std::string("s law at ") + a.text};
    }
  }

  struct Scenario {
    std::string text;
    oracle::Fn alpha;
    std::function<Nat(long)> tau;
  };
  using probes::item;
  using probes::length;
  const std::vector<Scenario> sc = {
      {"if len(x) >= 2 then at(x,0) * at(x,0) + 4 else 0",
       [](const Nat& x) { return length(x) >= 2 ? Nat(item(x, 0) * item(x, 0) + 4) : Nat(0); },
       [](long j) { return Nat(j * j + 3); }},
      {"if len(x) >= 4 then 2 * at(x,0) + at(x,3) + 1 else 0",
       [](const Nat& x) { return length(x) >= 4 ? Nat(2 * item(x, 0) + item(x, 3) + 1) : Nat(0); },
       [](long j) { return Nat(2 * j + 6); }},
      {"if len(x) == 5 && at(x,4) == 2 then at(x,0) + 1 else 0",
       [](const Nat& x) { return length(x) == 5 && item(x, 4) == 2 ? Nat(item(x, 0) + 1) : Nat(0); },
       [](long j) { return Nat(j); }},
  };
  const Seq pi{3, 1, 6};
  for (const auto& s : sc) {
    const ElemPtr a = from_expression(s.text);
    for (long j = 0; j < kTauIndices; ++j) {
      const Answer got = tau_extract(a, pi, 2, j, 1000);
      const auto want = oracle::tau(s.alpha, pi, j, 1, 1000);
      if (!got.value || !want || *got.value != *want || *want != s.tau(j))
        return {false, s.text + " at j=" + std::to_string(j)};
    }
  }

  for (int i = 0; i < kMonotonicityProbes; ++i) {
    const auto& a = pool()[rng() % pool().size()];
    const auto& b = pool()[rng() % pool().size()];
    const Nat n = rng() % 10;
    const std::uint64_t f1 = 1 + rng() % 20, f2 = f1 + rng() % 50;
    const Answer x = k2_apply(probes::elem(a), probes::elem(b), n, f1);
    const Answer y = k2_apply(probes::elem(a), probes::elem(b), n, f2);
    if (x.value && (!y.value || *x.value != *y.value)) return {false, std::string("monotonicity at ") + a.text};
  }
  return {true, std::to_string(kBasisProbes) + " basis probes at fuel 10^5 (" + std::to_string(s_compared) +
                    " s-law comparisons), tau exact on " + std::to_string(kTauScenarios) + " scenarios x " +
                    std::to_string(kTauIndices) + " indices, " + std::to_string(kMonotonicityProbes) +
                    " monotonicity probes"};
}

Outcome c12() {
  const auto fx = filtered_fixtures(5);
  const TermPtr x = var("x"), y = var("y");
  const std::vector<TermPtr> plain = terms_over({K(), S(), x, y}, 4);
  std::size_t checked = 0;
  for (const auto& A : fx) {
    std::vector<TermPtr> atoms{K(), S(), x, y};
    for (Elem e = 0; e < A.size(); ++e) atoms.push_back(cst(e, A.name(e)));
    std::vector<TermPtr> bodies = plain;
    const auto small = terms_over(atoms, 3);
    bodies.insert(bodies.end(), small.begin(), small.end());
    for (const auto& body : bodies) {
      const TermPtr lam = app(abstract({"x", "y"}, body), x, y);
      for (Elem a = 0; a < A.size(); ++a)
        for (Elem b = 0; b < A.size(); ++b) {
          const Environment env{{"x", a}, {"y", b}};
          const auto direct = eval_in_opca(body, env, A);
          if (!direct) continue;
          ++checked;
          const auto via = eval_in_opca(lam, env, A);
          if (!via || !A.leq(*via, *direct))
            return {false, A.subject + ": " + to_string(body, A.namer()) + " at x=" + A.name(a) + " y=" + A.name(b)};
        }
    }
  }
  return {true, std::to_string(fx.size()) + " fixtures, " + std::to_string(checked) +
                    " defined instantiations, abstraction never larger"};
}

}  // namespace

int main() {
  criterion(1, "pole-axiom soundness", c1);
  criterion(2, "Kr iff least truth value", c2);
  criterion(3, "localic triangulation", c3);
  criterion(4, "applicative iff finite-meet preserving", c4);
  criterion(5, "star condition iff sup applicative", c5);
  criterion(6, "pre-implicative round trips", c6);
  criterion(7, "density witness forms", c7);
  criterion(8, "Booleanization", c8);
  criterion(9, "Pierce's law", c9);
  criterion(10, "sequence lemma", c10);
  criterion(11, "K2 basis, tau and fuel", c11);
  criterion(12, "bracket abstraction contract", c12);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
