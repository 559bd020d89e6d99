#include "pcalab/pseudo_d.hpp"

#include <stdexcept>
#include <tuple>

namespace pcalab {

std::size_t PseudoDAlgebra::index_of(Mask downset) const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == downset) return i;
  throw std::invalid_argument("not a downset of the host");
}

Elem PseudoDAlgebra::sup_of(Mask downset) const { return sup[index_of(downset)]; }

PseudoDAlgebra make_pseudo_d(const FiniteOpca& host, const std::function<Elem(Mask)>& fn,
                             std::size_t cap) {
  PseudoDAlgebra alg;
  alg.host = host;
  alg.sets = enumerate_downsets(host.order(), cap);
  for (Mask s : alg.sets) {
    const Elem e = fn(s);
    if (e < 0 || e >= host.size()) throw std::invalid_argument("sup value outside the carrier");
    alg.sup.push_back(e);
  }
  return alg;
}

PseudoDAlgebra lattice_join_algebra(const FiniteOpca& host) {
  return make_pseudo_d(host, [&](Mask s) {
    auto j = host.order().lub(s);
    if (!j) throw std::invalid_argument("downset without least upper bound");
    return *j;
  });
}

namespace {

bool below(const FiniteOpca& A, Elem x, Elem y) { return x != kUndefined && A.leq(x, y); }

// First filter element satisfying pred, or the stored one if it does.
template <class Pred>
std::optional<Elem> pick(const FiniteOpca& A, const std::optional<Elem>& stored, Pred&& pred) {
  if (stored) {
    if (pred(*stored)) return stored;
    return std::nullopt;
  }
  std::optional<Elem> hit;
  for_each_bit(A.filter_or_all(), [&](Elem e) {
    if (!hit && pred(e)) hit = e;
  });
  return hit;
}

}  // namespace

PseudoDResult check_pseudo_d_algebra(const PseudoDAlgebra& alg, std::size_t cap) {
  Stopwatch sw;
  PseudoDResult res;
  const FiniteOpca& A = alg.host;
  const auto& D = alg.sets;
  const std::size_t m = D.size();
  const std::string& subj = alg.host.subject;
  auto& W = res.found;

  W.u = pick(A, alg.stored.u, [&](Elem u) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (subset_of(D[i], D[j]) && !below(A, A.apply(u, alg.sup[i]), alg.sup[j])) return false;
    return true;
  });
  res.reports.push_back(W.u ? pass(subj, "vchar.1").witness("u", A.name(*W.u))
                            : fail(subj, "vchar.1", "no u tracks inclusion of downsets"));

  Report r2 = pass(subj, "vchar.2");
  W.g2.assign(A.size(), std::nullopt);
  for_each_bit(A.filter_or_all(), [&](Elem f) {
    if (!r2.passed()) return;
    // image downsets for each alpha on which f is total
    std::vector<std::pair<Elem, Elem>> need;  // (sup alpha, sup down f[alpha])
    for (std::size_t i = 0; i < m; ++i) {
      Mask img = 0;
      bool ok = true;
      for_each_bit(D[i], [&](Elem x) {
        const Elem fx = A.apply(f, x);
        if (fx == kUndefined)
          ok = false;
        else
          img |= bit(fx);
      });
      if (ok) need.emplace_back(alg.sup[i], alg.sup_of(A.order().down_closure(img)));
    }
    const std::optional<Elem> st =
        alg.stored.g2.size() == static_cast<std::size_t>(A.size()) ? alg.stored.g2[f] : std::nullopt;
    W.g2[f] = pick(A, st, [&](Elem g) {
      for (auto [s, t] : need)
        if (!below(A, A.apply(g, s), t)) return false;
      return true;
    });
    if (W.g2[f])
      r2.witness(A.name(f), A.name(*W.g2[f]));
    else
      r2 = fail(subj, "vchar.2", "no g2 for f=" + A.name(f));
  });
  res.reports.push_back(r2);

  // Clause 3 over downsets of D(host), as masks over `sets` indices.
  const std::vector<Mask> outer = enumerate_downsets(inclusion_order(D), cap);
  std::vector<std::pair<Elem, Elem>> pairs;  // (sup down{sup alpha}, sup union)
  for (Mask o : outer) {
    Mask sups = 0, uni = 0;
    for_each_bit(o, [&](Elem i) {
      sups |= bit(alg.sup[i]);
      uni |= D[i];
    });
    pairs.emplace_back(alg.sup_of(A.order().down_closure(sups)), alg.sup_of(uni));
  }
  W.g3 = pick(A, alg.stored.g3, [&](Elem g) {
    for (auto [x, y] : pairs)
      if (!below(A, A.apply(g, x), y)) return false;
    return true;
  });
  W.h3 = pick(A, alg.stored.h3, [&](Elem h) {
    for (auto [x, y] : pairs)
      if (!below(A, A.apply(h, y), x)) return false;
    return true;
  });
  if (W.g3 && W.h3)
    res.reports.push_back(
        pass(subj, "vchar.3").witness("g3", A.name(*W.g3)).witness("h3", A.name(*W.h3)));
  else
    res.reports.push_back(fail(subj, "vchar.3", W.g3 ? "no h3" : "no g3"));

  W.g4 = pick(A, alg.stored.g4, [&](Elem g) {
    for (Elem a = 0; a < A.size(); ++a)
      if (!below(A, A.apply(g, alg.sup_of(A.order().down(a))), a)) return false;
    return true;
  });
  W.h4 = pick(A, alg.stored.h4, [&](Elem h) {
    for (Elem a = 0; a < A.size(); ++a)
      if (!below(A, A.apply(h, a), alg.sup_of(A.order().down(a)))) return false;
    return true;
  });
  if (W.g4 && W.h4)
    res.reports.push_back(
        pass(subj, "vchar.4").witness("g4", A.name(*W.g4)).witness("h4", A.name(*W.h4)));
  else
    res.reports.push_back(fail(subj, "vchar.4", W.g4 ? "no h4" : "no g4"));

  sw.stamp(res.reports);
  return res;
}

std::optional<Elem> check_star(const PseudoDAlgebra& alg) {
  const FiniteOpca& A = alg.host;
  const int n = A.size();
  // (sup alpha, b, upper bounds of alpha·b) for each alpha, b with alpha·b defined
  std::vector<std::tuple<Elem, Elem, Mask>> need;
  for (std::size_t i = 0; i < alg.sets.size(); ++i)
    for (Elem b = 0; b < n; ++b) {
      Mask img = 0;
      bool ok = true;
      for_each_bit(alg.sets[i], [&](Elem a) {
        const Elem ab = A.apply(a, b);
        if (ab == kUndefined)
          ok = false;
        else
          img |= bit(ab);
      });
      if (ok) need.emplace_back(alg.sup[i], b, A.order().upper_bounds(img));
    }
  return pick(A, alg.stored.v, [&](Elem v) {
    for (auto [s, b, cs] : need) {
      const Elem r = A.apply(v, s, b);
      if (cs != 0 && r == kUndefined) return false;
      bool ok = true;
      for_each_bit(cs, [&](Elem c) { ok = ok && A.leq(r, c); });
      if (!ok) return false;
    }
    return true;
  });
}

Report star_report(const PseudoDAlgebra& alg) {
  Stopwatch sw;
  auto v = check_star(alg);
  Report r = v ? pass(alg.host.subject, "star").witness("v", alg.host.name(*v))
               : fail(alg.host.subject, "star", "no v in the filter realizes the condition");
  sw.stamp(r);
  return r;
}

Map sup_map(const PseudoDAlgebra& alg) { return alg.sup; }

Report check_sup_adjunction(const PseudoDAlgebra& alg) {
  Stopwatch sw;
  const FiniteOpca& A = alg.host;
  const std::string& subj = A.subject;
  auto g = pick(A, std::nullopt, [&](Elem g) {
    for (Elem a = 0; a < A.size(); ++a)
      if (!below(A, A.apply(g, alg.sup_of(A.order().down(a))), a)) return false;
    return true;
  });
  auto h = pick(A, std::nullopt, [&](Elem h) {
    for (Elem a = 0; a < A.size(); ++a)
      if (!below(A, A.apply(h, a), alg.sup_of(A.order().down(a)))) return false;
    return true;
  });
  auto w = pick(A, std::nullopt, [&](Elem w) {
    for (std::size_t i = 0; i < alg.sets.size(); ++i) {
      bool ok = true;
      for_each_bit(alg.sets[i], [&](Elem a) { ok = ok && below(A, A.apply(w, a), alg.sup[i]); });
      if (!ok) return false;
    }
    return true;
  });
  Report r = (g && h && w) ? pass(subj, "sup-adjunction")
                           : fail(subj, "sup-adjunction",
                                  !g ? "no counit realizer" : !h ? "no inverse counit realizer"
                                                                 : "no unit realizer");
  if (g) r.witness("counit", A.name(*g));
  if (h) r.witness("counit-inverse", A.name(*h));
  if (w) r.witness("unit", A.name(*w));
  sw.stamp(r);
  return r;
}

bool is_algebra_map(const PseudoDAlgebra& PA, const PseudoDAlgebra& PB, const Map& f) {
  const FiniteOpca& B = PB.host;
  std::vector<std::pair<Elem, Elem>> pairs;  // (f(sup alpha), sup_B down f[alpha])
  for (std::size_t i = 0; i < PA.sets.size(); ++i) {
    Mask img = 0;
    for_each_bit(PA.sets[i], [&](Elem a) { img |= bit(f[a]); });
    pairs.emplace_back(f[PA.sup[i]], PB.sup_of(B.order().down_closure(img)));
  }
  auto there = pick(B, std::nullopt, [&](Elem g) {
    for (auto [x, y] : pairs)
      if (!below(B, B.apply(g, x), y)) return false;
    return true;
  });
  auto back = pick(B, std::nullopt, [&](Elem g) {
    for (auto [x, y] : pairs)
      if (!below(B, B.apply(g, y), x)) return false;
    return true;
  });
  return there && back;
}

}  // namespace pcalab
