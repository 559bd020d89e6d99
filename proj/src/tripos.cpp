#include "pcalab/tripos.hpp"

#include <stdexcept>

#include "pcalab/error.hpp"

namespace pcalab {

std::optional<std::size_t> predicate_leq(const Predicate& phi, const Predicate& psi, const FiniteBco& S) {
  if (phi.size() != psi.size()) throw std::invalid_argument("predicates on different index sets");
  const auto& fns = S.fns();
  for (std::size_t f = 0; f < fns.size(); ++f) {
    bool ok = true;
    for (std::size_t i = 0; i < phi.size() && ok; ++i) {
      const Elem v = fns[f](phi[i]);
      ok = v != kUndefined && S.leq(v, psi[i]);
    }
    if (ok) return f;
  }
  return std::nullopt;
}

Mask arrow_U(Mask alpha, const FiniteOpca& A) {
  if (!A.U) throw std::invalid_argument("no U given");
  const Mask U = *A.U;
  Mask out = 0;
  for (Elem a = 0; a < A.size(); ++a) {
    bool ok = true;
    for_each_bit(alpha, [&](Elem b) {
      const Elem ab = A.apply(a, b);
      ok = ok && ab != kUndefined && contains(U, ab);
    });
    if (ok) out |= bit(a);
  }
  return out;
}

SetPredicate arrow_U(const SetPredicate& phi, const FiniteOpca& A) {
  SetPredicate out;
  for (Mask m : phi) out.push_back(arrow_U(m, A));
  return out;
}

BooleanContext::BooleanContext(const FiniteOpca& host)
    : A(host), DA(downset_opca(host)), view(bco_view(DA.D)) {
  if (!A.U) throw std::invalid_argument("no U given");
  U = *A.U;
}

Predicate BooleanContext::lift(const SetPredicate& phi) const {
  Predicate out;
  for (Mask m : phi) {
    auto i = DA.index_of(m);
    if (!i) throw std::invalid_argument("predicate value is not a downset: " + A.format_set(m));
    out.push_back(*i);
  }
  return out;
}

BooleanVerdict boolean_leq(const SetPredicate& phi, const SetPredicate& psi, const BooleanContext& ctx) {
  BooleanVerdict v;
  const SetPredicate npsi = arrow_U(psi, ctx.A);
  const SetPredicate nphi = arrow_U(phi, ctx.A);
  const SetPredicate nnpsi = arrow_U(npsi, ctx.A);
  const FiniteBco& S = ctx.view;
  auto elem_of = [&](std::optional<std::size_t> f) -> std::optional<Elem> {
    if (!f) return std::nullopt;
    return ctx.DA.D.find(S.fns()[*f].name);
  };
  v.realizer3 = elem_of(predicate_leq(ctx.lift(npsi), ctx.lift(nphi), S));
  v.realizer2 = elem_of(predicate_leq(ctx.lift(phi), ctx.lift(nnpsi), S));
  v.form3 = v.realizer3.has_value();
  v.form2 = v.realizer2.has_value();
  return v;
}

std::optional<int> streicher_leq(const SetPredicate& phi, const SetPredicate& psi, const Aks& K) {
  if (phi.size() != psi.size()) throw std::invalid_argument("predicates on different index sets");
  std::vector<Mask> real;
  for (Mask m : phi) real.push_back(orth_of_stacks(K, m));
  std::optional<int> hit;
  for_each_bit(K.qp, [&](Elem t) {
    if (hit) return;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      bool ok = true;
      for_each_bit(real[i], [&](Elem u) {
        for_each_bit(psi[i], [&](Elem p) { ok = ok && K.in_pole(t, K.push_(u, p)); });
      });
      if (!ok) return;
    }
    hit = t;
  });
  return hit;
}

bool is_localic_witness(const FiniteOpca& A, Elem e) {
  if (!A.U) throw std::invalid_argument("no U given");
  const Mask U = *A.U;
  bool ok = true;
  for_each_bit(A.filter_or_all(), [&](Elem b) {
    for (Elem a = 0; a < A.size() && ok; ++a) {
      const Elem ba = A.apply(b, a);
      if (ba == kUndefined || !contains(U, ba)) continue;
      const Elem ea = A.apply(e, a);
      ok = ea != kUndefined && contains(U, ea);
    }
  });
  return ok;
}

std::optional<Elem> localic_criterion(const FiniteOpca& A) {
  std::optional<Elem> hit;
  for_each_bit(A.filter_or_all(), [&](Elem e) {
    if (!hit && is_localic_witness(A, e)) hit = e;
  });
  return hit;
}

std::vector<SetPredicate> all_predicates(const std::vector<Mask>& values, int index_size) {
  if (index_size < 0 || index_size > kMaxEnumeratedIndex)
    throw std::invalid_argument("index size for enumeration must be between 0 and " +
                                std::to_string(kMaxEnumeratedIndex));
  std::vector<SetPredicate> out{SetPredicate{}};
  for (int i = 0; i < index_size; ++i) {
    std::vector<SetPredicate> next;
    for (const auto& p : out)
      for (Mask v : values) {
        next.push_back(p);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

namespace {

std::string show(const FiniteOpca& A, const SetPredicate& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + A.format_set(p[i]);
  return s + "]";
}

std::string show_stacks(const Aks& K, const SetPredicate& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + K.format_stacks(p[i]);
  return s + "]";
}

}  // namespace

Reports booleanization_suite(const FiniteOpca& A, int index_size) {
  Stopwatch sw;
  Reports out;
  const std::string& subj = A.subject;
  const BooleanContext ctx(A);
  const auto preds = all_predicates(ctx.DA.sets, index_size);
  const std::size_t n = preds.size();

  std::vector<char> leq(n * n);
  std::string disagree;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const BooleanVerdict v = boolean_leq(preds[p], preds[q], ctx);
      leq[p * n + q] = v.form3;
      if (!v.agree() && disagree.empty())
        disagree = "phi=" + show(A, preds[p]) + " psi=" + show(A, preds[q]) +
                   " form2=" + std::to_string(v.form2) + " form3=" + std::to_string(v.form3);
    }
  out.push_back(disagree.empty()
                    ? pass(subj, "boolean.forms-agree").witness("pairs", std::to_string(n * n))
                    : fail(subj, "boolean.forms-agree", disagree));

  std::string bad;
  for (std::size_t p = 0; p < n && bad.empty(); ++p) {
    const SetPredicate nn = arrow_U(arrow_U(preds[p], A), A);
    if (!boolean_leq(preds[p], nn, ctx).form3 || !boolean_leq(nn, preds[p], ctx).form3)
      bad = "phi=" + show(A, preds[p]) + " notnot=" + show(A, nn);
  }
  out.push_back(bad.empty() ? pass(subj, "boolean.double-negation")
                            : fail(subj, "boolean.double-negation", bad));

  bad.clear();
  for (std::size_t p = 0; p < n && bad.empty(); ++p) {
    if (!leq[p * n + p]) bad = "not reflexive at " + show(A, preds[p]);
    for (std::size_t q = 0; q < n && bad.empty(); ++q) {
      if (!leq[p * n + q]) continue;
      for (std::size_t r = 0; r < n && bad.empty(); ++r)
        if (leq[q * n + r] && !leq[p * n + r])
          bad = "not transitive at " + show(A, preds[p]) + " " + show(A, preds[q]) + " " + show(A, preds[r]);
    }
  }
  out.push_back(bad.empty() ? pass(subj, "boolean.preorder") : fail(subj, "boolean.preorder", bad));
  sw.stamp(out);
  return out;
}

Report streicher_correspondence(const FiniteOpca& A, const Aks& K, int index_size) {
  Stopwatch sw;
  const BooleanContext ctx(A);
  const auto preds = all_predicates(biorth_sets(K), index_size);
  auto to_carrier = [&](const SetPredicate& p) {
    SetPredicate out;
    for (Mask m : p) out.push_back(orth_of_stacks(K, m));
    return out;
  };
  std::vector<Predicate> lifted;
  for (const auto& p : preds) lifted.push_back(ctx.lift(to_carrier(p)));
  std::string bad;
  std::size_t holds = 0;
  for (std::size_t p = 0; p < preds.size() && bad.empty(); ++p)
    for (std::size_t q = 0; q < preds.size() && bad.empty(); ++q) {
      const bool s = streicher_leq(preds[p], preds[q], K).has_value();
      const bool d = predicate_leq(lifted[p], lifted[q], ctx.view).has_value();
      holds += s;
      if (s != d)
        bad = "phi=" + show_stacks(K, preds[p]) + " psi=" + show_stacks(K, preds[q]) +
              " streicher=" + std::to_string(s) + " downset=" + std::to_string(d);
    }
  Report r = bad.empty() ? pass(K.subject, "streicher.correspondence")
                               .witness("pairs", std::to_string(preds.size() * preds.size()))
                               .witness("related", std::to_string(holds))
                         : fail(K.subject, "streicher.correspondence", bad);
  sw.stamp(r);
  return r;
}

Report localic_triangulation(const FiniteOpca& A, const Aks& K) {
  Stopwatch sw;
  const auto e = localic_criterion(A);
  const OrderCa oc = streicher_order_ca(K);
  const auto tv = tv_least(oc.A);
  const auto kr = check_kr(K);
  const bool agree = e.has_value() == tv.has_value() && tv.has_value() == kr.has_value();
  Report r = agree ? pass(A.subject, "localic.triangulation")
                   : fail(A.subject, "localic.triangulation", "verdicts differ");
  r.witness("localic", e ? A.name(*e) : "none")
      .witness("tv-least", tv ? oc.A.name(*tv) : "none")
      .witness("kr", kr ? K.term_names[*kr] : "none");
  sw.stamp(r);
  return r;
}

}  // namespace pcalab
