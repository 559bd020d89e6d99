#include "pcalab/implicative.hpp"

#include <stdexcept>

#include "pcalab/error.hpp"

namespace pcalab {

namespace {

bool below(const FiniteOpca& A, Elem x, Elem y) { return x != kUndefined && A.leq(x, y); }

std::string triple(const FiniteOpca& A, Elem a, Elem b, Elem c) {
  return "a=" + A.name(a) + " b=" + A.name(b) + " c=" + A.name(c);
}

Report verdict(const std::string& subj, const char* id, const std::string& bad) {
  return bad.empty() ? pass(subj, id) : fail(subj, id, bad);
}

}  // namespace

Reports check_implicative(const ImplicativeKit& kit, ImplicativeMode mode) {
  Stopwatch sw;
  Reports out;
  const FiniteOpca& A = kit.host;
  const std::string& subj = A.subject;
  const int n = A.size();
  if (n > kMaxImplicativeCarrier) {
    out.push_back(refused(subj, "implicative", "carrier too large for subset infima"));
    return out;
  }
  const std::size_t subsets = std::size_t{1} << n;
  if (kit.inf.size() != subsets || kit.imp.size() != static_cast<std::size_t>(n * n)) {
    out.push_back(refused(subj, "implicative", "kit tables do not match the carrier"));
    return out;
  }

  auto e_clause = [&]() {
    std::string bad;
    for (Elem a = 0; a < n && bad.empty(); ++a)
      for (Elem b = 0; b < n && bad.empty(); ++b) {
        const Elem ab = A.apply(a, b);
        if (ab == kUndefined) continue;
        for (Elem c = 0; c < n && bad.empty(); ++c)
          if (A.leq(ab, c) && !below(A, A.apply(kit.e, a), kit.imp_of(b, c))) bad = triple(A, a, b, c);
      }
    return bad;
  };

  if (mode == ImplicativeMode::Ioca) {
    out.push_back(A.total() ? pass(subj, "ioca.total")
                            : fail(subj, "ioca.total", "application has undefined entries"));
    std::string bad;
    for (Mask m = 0; m < subsets && bad.empty(); ++m)
      if (!A.order().glb(m)) bad = "no infimum of " + A.format_set(m);
    out.push_back(verdict(subj, "ioca.infima", bad));
    bad.clear();
    for (Elem b = 0; b < n && bad.empty(); ++b)
      for (Elem b2 = 0; b2 < n && bad.empty(); ++b2)
        for (Elem c = 0; c < n && bad.empty(); ++c) {
          if (A.leq(b2, b) && !A.leq(kit.imp_of(b, c), kit.imp_of(b2, c)))
            bad = "not antitone at b=" + A.name(b2) + "<=" + A.name(b) + " c=" + A.name(c);
          if (A.leq(b, b2) && !A.leq(kit.imp_of(c, b), kit.imp_of(c, b2)))
            bad = "not monotone at c=" + A.name(b) + "<=" + A.name(b2) + " b=" + A.name(c);
        }
    out.push_back(verdict(subj, "ioca.variance", bad));
    bad.clear();
    for (Elem a = 0; a < n && bad.empty(); ++a)
      for (Elem b = 0; b < n && bad.empty(); ++b)
        for (Elem c = 0; c < n && bad.empty(); ++c)
          if (A.leq(a, kit.imp_of(b, c)) != below(A, A.apply(a, b), c)) bad = triple(A, a, b, c);
    out.push_back(verdict(subj, "ioca.adjunction", bad));
    out.push_back(verdict(subj, "ioca.e", e_clause()));
    out.back().witness("e", A.name(kit.e));
    sw.stamp(out);
    return out;
  }

  const Mask F = A.filter_or_all();
  std::string bad;
  for (auto [x, name] : {std::pair{kit.i, "i"}, {kit.i2, "i'"}, {kit.e, "e"}, {kit.e2, "e'"}})
    if (bad.empty() && !contains(F, x)) bad = std::string(name) + "=" + A.name(x) + " not in filter";
  out.push_back(verdict(subj, "implicative.constants", bad));
  if (bad.empty())
    out.back()
        .witness("i", A.name(kit.i))
        .witness("i'", A.name(kit.i2))
        .witness("e", A.name(kit.e))
        .witness("e'", A.name(kit.e2));

  bad.clear();
  for (Mask m = 0; m < subsets && bad.empty(); ++m) {
    const Elem r = A.apply(kit.i, kit.inf[m]);
    for_each_bit(m, [&](Elem a) {
      if (bad.empty() && !below(A, r, a)) bad = "alpha=" + A.format_set(m) + " a=" + A.name(a);
    });
  }
  out.push_back(verdict(subj, "implicative.inf-lower", bad));

  bad.clear();
  for (Mask m = 0; m < subsets && bad.empty(); ++m)
    for_each_bit(A.order().lower_bounds(m), [&](Elem b) {
      if (bad.empty() && !below(A, A.apply(kit.i2, b), kit.inf[m]))
        bad = "alpha=" + A.format_set(m) + " b=" + A.name(b);
    });
  out.push_back(verdict(subj, "implicative.inf-greatest", bad));

  out.push_back(verdict(subj, "implicative.e", e_clause()));

  bad.clear();
  for (Elem a = 0; a < n && bad.empty(); ++a)
    for (Elem b = 0; b < n && bad.empty(); ++b)
      for (Elem c = 0; c < n && bad.empty(); ++c)
        if (A.leq(a, kit.imp_of(b, c)) && !below(A, A.apply(kit.e2, a, b), c)) bad = triple(A, a, b, c);
  out.push_back(verdict(subj, "implicative.e-prime", bad));
  sw.stamp(out);
  return out;
}

ImplicativeKit heyting_kit(const FiniteOpca& host) {
  const Poset& P = host.order();
  const int n = P.size();
  if (n > kMaxImplicativeCarrier) throw std::invalid_argument("carrier too large for a Heyting kit");
  ImplicativeKit kit;
  kit.host = host;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    auto g = P.glb(m);
    if (!g) throw std::invalid_argument("order is not a complete lattice");
    kit.inf.push_back(*g);
  }
  kit.imp.resize(n * n);
  for (Elem b = 0; b < n; ++b)
    for (Elem c = 0; c < n; ++c) {
      Mask ok = 0;
      for (Elem a = 0; a < n; ++a)
        if (P.leq(*P.meet(a, b), c)) ok |= bit(a);
      auto arrow = P.lub(ok);
      if (!arrow || !contains(ok, *arrow)) throw std::invalid_argument("order is not a Heyting algebra");
      kit.imp[b * n + c] = *arrow;
    }
  const Elem top = *P.top();
  kit.i = kit.i2 = kit.e = kit.e2 = top;
  return kit;
}

DerivedCombinators derive_combinators(const ImplicativeKit& kit) {
  const TermPtr i = cst(kit.i, "i"), i2 = cst(kit.i2, "i'"), e = cst(kit.e, "e"),
                e2 = cst(kit.e2, "e'");
  auto x = var("x"), y = var("y"), u = var("u"), v = var("v"), w = var("w");
  DerivedCombinators dc;
  dc.eta = abstract({"x"}, app(i2, app(i, x)));
  dc.xi = abstract({"x"}, app(e, app(e2, x)));
  dc.H = abstract({"x", "y"}, app(e2, app(dc.xi, x), app(dc.eta, y)));
  dc.K = abstract({"x"}, app(i2, app(e, app(dc.H, app(i, x)))));
  dc.P = abstract({"u", "v"}, app(e2, app(i, v), app(i2, app(e, u))));
  const TermPtr swap = abstract({"u", "v"}, app(e2, app(i, v), u));
  dc.Q = abstract({"x"}, app(i2, app(e, swap, x)));
  const TermPtr skk = app(S(), K(), K());
  dc.R = abstract({"x"}, app(e2, app(i, x), app(i2, app(e, skk))));
  dc.v = abstract({"u", "w"}, app(dc.P, abstract({"x"}, app(x, w)), u));

  const FiniteOpca& A = kit.host;
  auto ev = [&](const TermPtr& t) { return eval_in_opca(t, A).value_or(kUndefined); };
  dc.eta_v = ev(dc.eta);
  dc.xi_v = ev(dc.xi);
  dc.H_v = ev(dc.H);
  dc.K_v = ev(dc.K);
  dc.P_v = ev(dc.P);
  dc.Q_v = ev(dc.Q);
  dc.R_v = ev(dc.R);
  dc.v_v = ev(dc.v);
  return dc;
}

SupFromImplication sup_from_implication(const ImplicativeKit& kit) {
  Stopwatch sw;
  SupFromImplication out;
  const FiniteOpca& A = kit.host;
  const std::string& subj = A.subject;
  const int n = A.size();
  const auto& dc = out.dc = derive_combinators(kit);

  auto inf_of = [&](Mask m) { return kit.inf[m]; };
  auto sup_formula = [&](Mask alpha) {
    Mask outer = 0;
    for (Elem b = 0; b < n; ++b) {
      Mask inner = 0;
      for_each_bit(alpha, [&](Elem a) { inner |= bit(kit.imp_of(a, b)); });
      outer |= bit(kit.imp_of(inf_of(inner), b));
    }
    return inf_of(outer);
  };
  out.alg = make_pseudo_d(A, sup_formula);
  PseudoDAlgebra& alg = out.alg;

  // derived constants in the filter
  const Mask F = A.filter_or_all();
  std::string bad;
  Report filt = pass(subj, "derived.in-filter");
  for (auto [val, name] : {std::pair{dc.eta_v, "eta"}, {dc.xi_v, "xi"}, {dc.H_v, "H"}, {dc.K_v, "K"},
                           {dc.P_v, "P"}, {dc.Q_v, "Q"}, {dc.R_v, "R"}, {dc.v_v, "v"}}) {
    if (val == kUndefined) {
      if (bad.empty()) bad = std::string(name) + " is undefined";
      continue;
    }
    filt.witness(name, A.name(val));
    if (bad.empty() && !contains(F, val)) bad = std::string(name) + "=" + A.name(val) + " not in filter";
  }
  out.reports.push_back(bad.empty() ? filt : fail(subj, "derived.in-filter", bad));
  if (!bad.empty()) {
    sw.stamp(out.reports);
    return out;
  }

  // (a): eta·inf X <= inf Y for Y a subset of X
  bad.clear();
  for (Mask X = 0; X < (Mask{1} << n) && bad.empty(); ++X) {
    const Elem r = A.apply(dc.eta_v, inf_of(X));
    for (Mask Y = X;; Y = (Y - 1) & X) {
      if (!below(A, r, inf_of(Y))) {
        bad = "X=" + A.format_set(X) + " Y=" + A.format_set(Y);
        break;
      }
      if (Y == 0) break;
    }
  }
  out.reports.push_back(verdict(subj, "fact.a", bad));

  // (b)
  bad.clear();
  for (Elem b = 0; b < n && bad.empty(); ++b)
    for (Elem b2 = 0; b2 < n && bad.empty(); ++b2)
      for (Elem c = 0; c < n && bad.empty(); ++c) {
        if (A.leq(b, b2) && !below(A, A.apply(dc.xi_v, kit.imp_of(b2, c)), kit.imp_of(b, c)))
          bad = "b=" + A.name(b) + " b'=" + A.name(b2) + " c=" + A.name(c);
        if (A.leq(b, b2) && !below(A, A.apply(dc.xi_v, kit.imp_of(c, b)), kit.imp_of(c, b2)))
          bad = "b=" + A.name(c) + " c=" + A.name(b) + " c'=" + A.name(b2);
      }
  out.reports.push_back(verdict(subj, "fact.b", bad));

  // (c)
  bad.clear();
  for (std::size_t i = 0; i < alg.sets.size() && bad.empty(); ++i)
    for (std::size_t j = 0; j < alg.sets.size() && bad.empty(); ++j)
      if (subset_of(alg.sets[i], alg.sets[j]) && !below(A, A.apply(dc.K_v, alg.sup[i]), alg.sup[j]))
        bad = "alpha=" + A.format_set(alg.sets[i]) + " alpha'=" + A.format_set(alg.sets[j]);
  out.reports.push_back(verdict(subj, "fact.c", bad));

  // (d)
  bad.clear();
  for (Elem f = 0; f < n && bad.empty(); ++f)
    for (std::size_t i = 0; i < alg.sets.size() && bad.empty(); ++i) {
      Mask img = 0;
      bool ok = true;
      for_each_bit(alg.sets[i], [&](Elem a) {
        const Elem fa = A.apply(f, a);
        if (fa == kUndefined)
          ok = false;
        else
          img |= bit(fa);
      });
      if (!ok) continue;
      const Elem r = A.apply(dc.P_v, f, alg.sup[i]);
      for_each_bit(A.order().upper_bounds(img), [&](Elem b) {
        if (bad.empty() && !below(A, r, b))
          bad = "f=" + A.name(f) + " alpha=" + A.format_set(alg.sets[i]) + " b=" + A.name(b);
      });
    }
  out.reports.push_back(verdict(subj, "fact.d", bad));

  // stored witnesses for the algebra clauses
  auto ev = [&](const TermPtr& t) -> std::optional<Elem> {
    auto r = eval_in_opca(t, A);
    return r;
  };
  auto& W = alg.stored;
  W.u = dc.K_v;
  W.g2.assign(n, std::nullopt);
  for_each_bit(F, [&](Elem f) {
    W.g2[f] = ev(app(dc.P, abstract({"x"}, app(dc.Q, app(cst(f), var("x"))))));
  });
  W.g3 = ev(app(dc.P, dc.K));
  W.h3 = ev(app(dc.P, abstract({"x"}, app(dc.Q, app(dc.Q, var("x"))))));
  W.g4 = dc.R_v;
  W.h4 = dc.Q_v;
  W.v = dc.v_v;
  sw.stamp(out.reports);
  return out;
}

ImplicationFromSup implication_from_sup(const PseudoDAlgebra& alg) {
  Stopwatch sw;
  ImplicationFromSup out;
  const FiniteOpca& A = alg.host;
  const std::string& subj = A.subject;
  const int n = A.size();
  if (n > kMaxImplicativeCarrier) {
    out.reports.push_back(refused(subj, "implication-from-sup", "carrier too large for subset infima"));
    return out;
  }
  const PseudoDResult pd = check_pseudo_d_algebra(alg);
  const auto v = check_star(alg);
  const auto skk = A.skk();
  const auto& W = pd.found;
  if (!pd.ok() || !v || !skk || !contains(A.filter_or_all(), *skk) || !W.g2[*skk]) {
    out.reports.push_back(refused(subj, "implication-from-sup",
                                  !pd.ok() ? "not a pseudo-D-algebra"
                                  : !v     ? "the star condition fails"
                                           : "skk is not a filter element"));
    return out;
  }

  ImplicativeKit kit;
  kit.host = A;
  for (Mask m = 0; m < (Mask{1} << n); ++m) kit.inf.push_back(alg.sup_of(A.order().lower_bounds(m)));
  kit.imp.resize(n * n);
  for (Elem b = 0; b < n; ++b)
    for (Elem c = 0; c < n; ++c) {
      const Mask db = A.order().down(b), dcm = A.order().down(c);
      Mask I = 0;
      for (Elem a = 0; a < n; ++a) {
        bool ok = true;
        for_each_bit(db, [&](Elem a2) {
          const Elem r = A.apply(a, a2);
          ok = ok && r != kUndefined && contains(dcm, r);
        });
        if (ok) I |= bit(a);
      }
      kit.imp[b * n + c] = alg.sup_of(I);
    }

  const TermPtr u = cst(*W.u), h4 = cst(*W.h4), g4 = cst(*W.g4), g2 = cst(*W.g2[*skk]);
  const TermPtr x = var("x");
  const auto e = eval_in_opca(abstract({"x"}, app(u, app(h4, x))), A);
  const auto i = eval_in_opca(abstract({"x"}, app(g4, app(u, app(g2, x)))), A);
  if (!e || !i) {
    out.reports.push_back(refused(subj, "implication-from-sup", "constant terms are undefined"));
    return out;
  }
  kit.e = kit.i2 = *e;
  kit.i = *i;
  kit.e2 = *v;
  out.reports.push_back(pass(subj, "implication-from-sup")
                            .witness("i", A.name(kit.i))
                            .witness("i'", A.name(kit.i2))
                            .witness("e", A.name(kit.e))
                            .witness("e'", A.name(kit.e2)));
  out.kit = std::move(kit);
  sw.stamp(out.reports);
  return out;
}

}  // namespace pcalab
