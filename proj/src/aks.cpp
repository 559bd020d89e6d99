#include "pcalab/aks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "pcalab/error.hpp"
#include "pcalab/sequence.hpp"
#include "pcalab/term.hpp"

namespace pcalab {

namespace {

std::optional<int> find_name(const std::vector<std::string>& names, std::string_view n) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return static_cast<int>(i);
  return std::nullopt;
}

std::string format_mask(const std::vector<std::string>& names, Mask m) {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](Elem e) {
    out += (first ? "" : ",") + names[e];
    first = false;
  });
  return out + "}";
}

}  // namespace

std::optional<int> Aks::find_term(std::string_view n) const { return find_name(term_names, n); }
std::optional<int> Aks::find_stack(std::string_view n) const { return find_name(stack_names, n); }
std::string Aks::format_stacks(Mask m) const { return format_mask(stack_names, m); }
std::string Aks::format_terms(Mask m) const { return format_mask(term_names, m); }

void validate(const Aks& K) {
  const int nt = K.nterms(), ns = K.nstacks();
  if (nt == 0 || ns == 0) throw std::invalid_argument("aks needs at least one term and one stack");
  if (nt > kMaxCarrier || ns > kMaxCarrier) throw std::invalid_argument("aks sorts are limited to 64");
  auto in = [](int v, int n) { return v >= 0 && v < n; };
  if (K.dot.size() != static_cast<std::size_t>(nt * nt)) throw std::invalid_argument("dot table size");
  if (K.push.size() != static_cast<std::size_t>(nt * ns)) throw std::invalid_argument("push table size");
  if (K.kof.size() != static_cast<std::size_t>(ns)) throw std::invalid_argument("kOf table size");
  if (K.pole.size() != static_cast<std::size_t>(nt)) throw std::invalid_argument("pole table size");
  for (int v : K.dot)
    if (!in(v, nt)) throw std::invalid_argument("dot entry outside terms");
  for (int v : K.push)
    if (!in(v, ns)) throw std::invalid_argument("push entry outside stacks");
  for (int v : K.kof)
    if (!in(v, nt)) throw std::invalid_argument("kOf entry outside terms");
  if (!in(K.K, nt) || !in(K.S, nt) || !in(K.cc, nt)) throw std::invalid_argument("K, S or cc outside terms");
  if (!subset_of(K.qp, full_mask(nt))) throw std::invalid_argument("QP outside terms");
  for (Mask p : K.pole)
    if (!subset_of(p, full_mask(ns))) throw std::invalid_argument("pole entry outside stacks");
}

Mask orth_of_terms(const Aks& K, Mask terms) {
  Mask out = full_mask(K.nstacks());
  for_each_bit(terms, [&](Elem t) { out &= K.pole[t]; });
  return out;
}

Mask orth_of_stacks(const Aks& K, Mask stacks) {
  Mask out = 0;
  for (int t = 0; t < K.nterms(); ++t)
    if (subset_of(stacks, K.pole[t])) out |= bit(t);
  return out;
}

Mask closure_stacks(const Aks& K, Mask stacks) { return orth_of_terms(K, orth_of_stacks(K, stacks)); }
Mask closure_terms(const Aks& K, Mask terms) { return orth_of_stacks(K, orth_of_terms(K, terms)); }

Reports check_aks(const Aks& K) {
  Stopwatch sw;
  Reports out;
  const std::string& subj = K.subject;
  try {
    validate(K);
  } catch (const std::invalid_argument& e) {
    out.push_back(refused(subj, "aks.shape", e.what()));
    return out;
  }
  const int nt = K.nterms(), ns = K.nstacks();
  auto tn = [&](int t) { return K.term_names[t]; };
  auto sn = [&](int p) { return K.stack_names[p]; };

  std::string bad;
  for (auto [t, name] : {std::pair{K.K, "K"}, {K.S, "S"}, {K.cc, "cc"}})
    if (bad.empty() && !contains(K.qp, t)) bad = std::string(name) + " not a quasi-proof";
  for_each_bit(K.qp, [&](Elem t) {
    for_each_bit(K.qp, [&](Elem s) {
      if (bad.empty() && !contains(K.qp, K.app(t, s)))
        bad = tn(t) + "." + tn(s) + " leaves QP";
    });
  });
  out.push_back(bad.empty() ? pass(subj, "aks.qp") : fail(subj, "aks.qp", bad));

  auto rule = [&](const char* id, const std::string& b) {
    out.push_back(b.empty() ? pass(subj, id) : fail(subj, id, b));
  };

  bad.clear();
  for (int t = 0; t < nt && bad.empty(); ++t)
    for (int s = 0; s < nt && bad.empty(); ++s)
      for (int p = 0; p < ns && bad.empty(); ++p)
        if (K.in_pole(t, K.push_(s, p)) && !K.in_pole(K.app(t, s), p))
          bad = "t=" + tn(t) + " s=" + tn(s) + " pi=" + sn(p);
  rule("aks.S1", bad);

  bad.clear();
  for (int t = 0; t < nt && bad.empty(); ++t)
    for (int p = 0; p < ns && bad.empty(); ++p) {
      if (!K.in_pole(t, p)) continue;
      for (int s = 0; s < nt && bad.empty(); ++s)
        if (!K.in_pole(K.K, K.push_(t, K.push_(s, p))))
          bad = "t=" + tn(t) + " s=" + tn(s) + " pi=" + sn(p);
    }
  rule("aks.S2", bad);

  bad.clear();
  for (int t = 0; t < nt && bad.empty(); ++t)
    for (int u = 0; u < nt && bad.empty(); ++u) {
      const int tu = K.app(t, u);
      for (int s = 0; s < nt && bad.empty(); ++s) {
        const int lhs = K.app(tu, K.app(s, u));
        for (int p = 0; p < ns && bad.empty(); ++p)
          if (K.in_pole(lhs, p) && !K.in_pole(K.S, K.push_(t, K.push_(s, K.push_(u, p)))))
            bad = "t=" + tn(t) + " s=" + tn(s) + " u=" + tn(u) + " pi=" + sn(p);
      }
    }
  rule("aks.S3", bad);

  bad.clear();
  for (int t = 0; t < nt && bad.empty(); ++t)
    for (int p = 0; p < ns && bad.empty(); ++p)
      if (K.in_pole(t, K.push_(K.kof[p], p)) && !K.in_pole(K.cc, K.push_(t, p)))
        bad = "t=" + tn(t) + " pi=" + sn(p);
  rule("aks.S4", bad);

  bad.clear();
  for (int t = 0; t < nt && bad.empty(); ++t)
    for (int p = 0; p < ns && bad.empty(); ++p) {
      if (!K.in_pole(t, p)) continue;
      for (int q = 0; q < ns && bad.empty(); ++q)
        if (!K.in_pole(K.kof[p], K.push_(t, q)))
          bad = "t=" + tn(t) + " pi=" + sn(p) + " pi'=" + sn(q);
    }
  rule("aks.S5", bad);
  sw.stamp(out);
  return out;
}

void close_pole(Aks& K) {
  validate(K);
  const int nt = K.nterms(), ns = K.nstacks();
  auto add = [&](int t, int p, bool& changed) {
    if (!K.in_pole(t, p)) {
      K.pole[t] |= bit(p);
      changed = true;
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < nt; ++t)
      for (int p = 0; p < ns; ++p) {
        for (int s = 0; s < nt; ++s)
          if (K.in_pole(t, K.push_(s, p))) add(K.app(t, s), p, changed);
        if (K.in_pole(t, p)) {
          for (int s = 0; s < nt; ++s) add(K.K, K.push_(t, K.push_(s, p)), changed);
          for (int q = 0; q < ns; ++q) add(K.kof[p], K.push_(t, q), changed);
        }
        if (K.in_pole(t, K.push_(K.kof[p], p))) add(K.cc, K.push_(t, p), changed);
      }
    for (int t = 0; t < nt; ++t)
      for (int u = 0; u < nt; ++u)
        for (int s = 0; s < nt; ++s) {
          const int lhs = K.app(K.app(t, u), K.app(s, u));
          for_each_bit(K.pole[lhs], [&](Elem p) {
            add(K.S, K.push_(t, K.push_(s, K.push_(u, p))), changed);
          });
        }
  }
}

// ---------------------------------------------------------------------------
// Construction from a filtered opca

namespace {

struct AksTerms {
  TermPtr dot, kof, K, S, cc;
};

// Terms of the construction over free variables x, y (operands). The stack
// argument is abstracted.
AksTerms aks_terms() {
  const SequenceKit& q = sequence_kit();
  auto v = [](const char* n) { return var(n); };
  auto nth = [&](std::size_t i, const TermPtr& s) { return app(q.b, q.numeral(i), s); };
  auto from = [&](std::size_t j, const TermPtr& s) { return app(q.c, q.numeral(j), s); };
  auto push = [&](const TermPtr& a, const TermPtr& s) { return app(q.d, a, s); };
  // a·b = <sigma> a (b.sigma); fresh names per use keep abstractions apart
  int fresh = 0;
  auto dot = [&](const TermPtr& a, const TermPtr& b) {
    const std::string s = "sg" + std::to_string(fresh++);
    return abstract({s}, app(a, push(b, var(s))));
  };
  AksTerms t;
  t.dot = abstract({"p"}, app(v("x"), push(v("y"), v("p"))));
  t.kof = abstract({"r"}, app(nth(0, v("r")), v("y")));
  const TermPtr p = v("p");
  t.K = abstract({"p"}, app(nth(0, p), from(2, p)));
  t.S = abstract({"p"}, app(dot(dot(nth(0, p), nth(2, p)), dot(nth(1, p), nth(2, p))), from(3, p)));
  const TermPtr rest = from(1, p);
  const TermPtr k_rest = abstract({"r"}, app(nth(0, v("r")), rest));
  t.cc = abstract({"p"}, app(nth(0, p), push(k_rest, rest)));
  return t;
}

}  // namespace

AksBuild build_aks(const FiniteOpca& A, std::size_t max_len) {
  Stopwatch sw;
  AksBuild out;
  const std::string subj = "K(" + A.subject + ")";
  auto refuse = [&](const std::string& why) {
    out.reports.push_back(refused(subj, "build-aks", why));
    sw.stamp(out.reports);
    return out;
  };
  if (!A.U) return refuse("no U given");
  const Mask U = *A.U;
  const Mask F = A.filter_or_all();
  if (!A.order().is_downset(U)) return refuse("U is not downward closed");
  if (U & F) return refuse("U meets the filter");
  const Reports ax = check_opca_axioms(A);
  for (const auto& r : ax)
    if (!r.passed()) return refuse("opca axiom " + r.check + " fails: " + r.counterexample);
  const DerivedKit dk = derive_sequence_kit(A, max_len);
  for (const auto& r : dk.reports)
    if (!r.passed()) return refuse("sequence kit: " + r.check + " fails: " + r.counterexample);
  const EvaluatedKit& ek = dk.kit;
  const int n = A.size();

  // stacks: codes of short sequences, closed under push
  Mask stacks = 0;
  std::vector<Elem> xs;
  std::function<void(std::size_t)> gen = [&](std::size_t left) {
    if (auto c = ek.code(A, xs)) stacks |= bit(*c);
    if (left == 0) return;
    for (Elem a = 0; a < n; ++a) {
      xs.push_back(a);
      gen(left - 1);
      xs.pop_back();
    }
  };
  gen(max_len);
  for (Mask prev = 0; prev != stacks;) {
    prev = stacks;
    for_each_bit(prev, [&](Elem s) {
      for (Elem a = 0; a < n; ++a) {
        const Elem r = A.apply(ek.d, a, s);
        if (r != kUndefined) stacks |= bit(r);
      }
    });
  }

  Aks K;
  K.subject = subj;
  K.term_names = A.names();
  K.stack_elem = elements_of(stacks);
  std::map<Elem, int> stack_index;
  for (std::size_t i = 0; i < K.stack_elem.size(); ++i) {
    stack_index[K.stack_elem[i]] = static_cast<int>(i);
    K.stack_names.push_back(A.name(K.stack_elem[i]));
  }
  const int ns = K.nstacks();

  for (Elem t = 0; t < n; ++t)
    for (int p = 0; p < ns; ++p) {
      const Elem r = A.apply(ek.d, t, K.stack_elem[p]);
      if (r == kUndefined) return refuse("push of " + A.name(t) + " onto " + K.stack_names[p] + " undefined");
      K.push.push_back(stack_index.at(r));
    }

  const AksTerms T = aks_terms();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto r = eval_in_opca(T.dot, Environment{{"x", a}, {"y", b}}, A);
      if (!r) return refuse("dot of " + A.name(a) + " and " + A.name(b) + " undefined");
      K.dot.push_back(*r);
    }
  for (int p = 0; p < ns; ++p) {
    auto r = eval_in_opca(T.kof, Environment{{"y", K.stack_elem[p]}}, A);
    if (!r) return refuse("k_pi undefined for pi=" + K.stack_names[p]);
    K.kof.push_back(*r);
  }
  auto K_ = eval_in_opca(T.K, A), S_ = eval_in_opca(T.S, A), cc_ = eval_in_opca(T.cc, A);
  if (!K_ || !S_ || !cc_) return refuse(!K_ ? "K undefined" : !S_ ? "S undefined" : "cc undefined");
  K.K = *K_;
  K.S = *S_;
  K.cc = *cc_;
  K.qp = F;
  K.pole.assign(n, 0);
  for (Elem t = 0; t < n; ++t)
    for (int p = 0; p < ns; ++p) {
      const Elem r = A.apply(t, K.stack_elem[p]);
      if (r != kUndefined && contains(U, r)) K.pole[t] |= bit(p);
    }
  out.reports.push_back(pass(subj, "build-aks")
                            .witness("stacks", K.format_stacks(full_mask(ns)))
                            .witness("K", A.name(K.K))
                            .witness("S", A.name(K.S))
                            .witness("cc", A.name(K.cc)));
  out.aks = std::move(K);
  sw.stamp(out.reports);
  return out;
}

// ---------------------------------------------------------------------------
// Closed stack sets and the induced order-ca

std::vector<Mask> biorth_sets(const Aks& K, std::size_t cap) {
  const int nt = K.nterms(), ns = K.nstacks();
  std::vector<Mask> out;
  auto seeds = [&](int n) {
    if (n >= 63 || (std::size_t{1} << n) > cap) throw CapExceeded("closed stack set seeds", cap);
    return Mask{1} << n;
  };
  if (nt <= ns) {
    const Mask lim = seeds(nt);
    for (Mask T = 0; T < lim; ++T) out.push_back(orth_of_terms(K, T));
  } else {
    const Mask lim = seeds(ns);
    for (Mask X = 0; X < lim; ++X) out.push_back(closure_stacks(K, X));
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > static_cast<std::size_t>(kMaxCarrier)) throw CapExceeded("closed stack sets", kMaxCarrier);
  return out;
}

Mask aks_apply(const Aks& K, Mask alpha, Mask beta) {
  const Mask ta = orth_of_stacks(K, alpha), tb = orth_of_stacks(K, beta);
  Mask inner = 0;
  for (int p = 0; p < K.nstacks(); ++p) {
    bool ok = true;
    for_each_bit(ta, [&](Elem t) {
      for_each_bit(tb, [&](Elem s) { ok = ok && K.in_pole(t, K.push_(s, p)); });
    });
    if (ok) inner |= bit(p);
  }
  return closure_stacks(K, inner);
}

Mask aks_imp(const Aks& K, Mask alpha, Mask beta) {
  Mask inner = 0;
  for_each_bit(orth_of_stacks(K, alpha), [&](Elem t) {
    for_each_bit(beta, [&](Elem p) { inner |= bit(K.push_(t, p)); });
  });
  return closure_stacks(K, inner);
}

OrderCa streicher_order_ca(const Aks& K) {
  OrderCa out;
  out.sets = biorth_sets(K);
  const auto& sets = out.sets;
  const int m = static_cast<int>(sets.size());
  auto index = [&](Mask x) {
    return static_cast<Elem>(std::lower_bound(sets.begin(), sets.end(), x,
                                              [](Mask a, Mask b) {
                                                return popcount(a) != popcount(b) ? popcount(a) < popcount(b)
                                                                                  : a < b;
                                              }) -
                             sets.begin());
  };
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      if (subset_of(sets[b], sets[a])) pairs.emplace_back(a, b);  // a <= b iff a contains b
  std::vector<Elem> table(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) table[a * m + b] = index(aks_apply(K, sets[a], sets[b]));
  std::vector<std::string> names;
  for (Mask s : sets) names.push_back(K.format_stacks(s));
  out.A = FiniteOpca(std::move(names), Poset::from_pairs(m, pairs), std::move(table), 0, 0);
  out.A.subject = "P(" + K.subject + ")";
  Mask phi = 0;
  for (Elem a = 0; a < m; ++a)
    if (orth_of_stacks(K, sets[a]) & K.qp) phi |= bit(a);
  out.A.filter = phi;

  std::vector<Elem> order{index(orth_of_terms(K, bit(K.K))), index(orth_of_terms(K, bit(K.S)))};
  for_each_bit(phi, [&](Elem a) { order.push_back(a); });
  for (Elem a = 0; a < m; ++a) order.push_back(a);
  std::optional<Elem> k, s;
  for (Elem c : order)
    if (!k && k_law_violation(out.A, c).empty()) k = c;
  for (Elem c : order)
    if (!s && s_law_violation(out.A, c).empty() && s_partial_violation(out.A, c).empty()) s = c;
  out.ks_found = k && s;
  if (out.ks_found) out.A.set_ks(*k, *s);
  return out;
}

Reports check_order_ca(const Aks& K) {
  Stopwatch sw;
  Reports out;
  OrderCa oc;
  try {
    oc = streicher_order_ca(K);
  } catch (const CapExceeded& e) {
    out.push_back(refused(K.subject, "order-ca", e.what()));
    return out;
  }
  const FiniteOpca& A = oc.A;
  out.push_back(pass(A.subject, "order-ca.carrier").witness("closed-sets", std::to_string(A.size())));
  if (!oc.ks_found) {
    out.push_back(fail(A.subject, "order-ca.ks", "no k and s among the closed stack sets"));
  } else {
    out.push_back(
        pass(A.subject, "order-ca.ks").witness("k", A.name(A.k())).witness("s", A.name(A.s())));
    for (auto& r : check_opca_axioms(A)) out.push_back(std::move(r));
    out.push_back(check_filter(A, *A.filter));
  }
  const Mask phi = *A.filter;
  std::string bad;
  for_each_bit(phi, [&](Elem a) {
    for_each_bit(A.order().up(a), [&](Elem b) {
      if (bad.empty() && !contains(phi, b)) bad = A.name(b) + " above " + A.name(a) + " leaves the filter";
    });
  });
  out.push_back(bad.empty() ? pass(A.subject, "order-ca.filter-upward")
                            : fail(A.subject, "order-ca.filter-upward", bad));
  sw.stamp(out);
  return out;
}

std::optional<int> check_kr(const Aks& K) {
  const Mask strong = orth_of_stacks(K, full_mask(K.nstacks()));
  std::optional<int> hit;
  for_each_bit(K.qp, [&](Elem a) {
    if (hit) return;
    bool ok = true;
    for_each_bit(strong, [&](Elem s) {
      for (int t = 0; t < K.nterms() && ok; ++t)
        for (int p = 0; p < K.nstacks() && ok; ++p)
          ok = K.in_pole(a, K.push_(t, K.push_(s, p))) && K.in_pole(a, K.push_(s, K.push_(t, p)));
    });
    if (ok) hit = a;
  });
  return hit;
}

Report check_pierce(const Aks& K) {
  Stopwatch sw;
  const auto sets = biorth_sets(K);
  const Mask cc = orth_of_terms(K, bit(K.cc));
  Report r = pass(K.subject, "pierce");
  for (Mask a : sets) {
    for (Mask b : sets) {
      const Mask law = aks_imp(K, aks_imp(K, aks_imp(K, a, b), a), a);
      if (!subset_of(law, cc)) {
        r = fail(K.subject, "pierce", "alpha=" + K.format_stacks(a) + " beta=" + K.format_stacks(b));
        break;
      }
    }
    if (!r.passed()) break;
  }
  if (r.passed()) r.witness("pairs", std::to_string(sets.size() * sets.size()));
  sw.stamp(r);
  return r;
}

Report check_kprime(const Aks& K) {
  Stopwatch sw;
  const int kp = K.app(K.K, K.app(K.app(K.S, K.K), K.K));
  std::string bad;
  for (int t = 0; t < K.nterms() && bad.empty(); ++t)
    for_each_bit(K.pole[t], [&](Elem p) {
      for (int s = 0; s < K.nterms() && bad.empty(); ++s)
        if (!K.in_pole(kp, K.push_(s, K.push_(t, p))))
          bad = "t=" + K.term_names[t] + " pi=" + K.stack_names[p] + " s=" + K.term_names[s];
    });
  Report r = bad.empty() ? pass(K.subject, "k-prime").witness("K'", K.term_names[kp])
                         : fail(K.subject, "k-prime", bad);
  sw.stamp(r);
  return r;
}

Aks random_aks(std::uint64_t seed, int nterms, int nstacks, double seed_density) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> term(0, nterms - 1), stack(0, nstacks - 1);
  std::bernoulli_distribution coin(seed_density);
  Aks K;
  K.subject = "random-" + std::to_string(seed);
  for (int i = 0; i < nterms; ++i) K.term_names.push_back("t" + std::to_string(i));
  for (int i = 0; i < nstacks; ++i) K.stack_names.push_back("p" + std::to_string(i));
  for (int i = 0; i < nterms * nterms; ++i) K.dot.push_back(term(rng));
  for (int i = 0; i < nterms * nstacks; ++i) K.push.push_back(stack(rng));
  for (int i = 0; i < nstacks; ++i) K.kof.push_back(term(rng));
  K.K = term(rng);
  K.S = term(rng);
  K.cc = term(rng);
  K.qp = bit(K.K) | bit(K.S) | bit(K.cc);
  for (Mask prev = 0; prev != K.qp;) {
    prev = K.qp;
    for_each_bit(prev, [&](Elem t) {
      for_each_bit(prev, [&](Elem s) { K.qp |= bit(K.app(t, s)); });
    });
  }
  K.pole.assign(nterms, 0);
  for (int t = 0; t < nterms; ++t)
    for (int p = 0; p < nstacks; ++p)
      if (coin(rng)) K.pole[t] |= bit(p);
  close_pole(K);
  return K;
}

}  // namespace pcalab
