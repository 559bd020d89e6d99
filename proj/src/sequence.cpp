#include "pcalab/sequence.hpp"

#include <functional>

namespace pcalab {

namespace {

TermPtr v(const char* name) { return var(name); }

SequenceKit build_kit() {
  SequenceKit k;
  k.I = app(S(), K(), K());
  k.T = K();
  k.F = app(K(), k.I);
  k.p = abstract({"x", "y", "z"}, app(v("z"), v("x"), v("y")));
  k.p0 = abstract({"x"}, app(v("x"), k.T));
  k.p1 = abstract({"x"}, app(v("x"), k.F));
  k.zero = k.p0;
  k.pred = k.p1;
  k.succ = abstract({"n"}, app(k.p, k.F, v("n")));
  k.nil = k.I;

  // Z = <f>(<x>f(<z>xxz))(<x>f(<z>xxz)); the inner abstraction keeps xx
  // from unfolding until an argument arrives.
  const TermPtr half = abstract({"x"}, app(v("f"), abstract({"z"}, app(v("x"), v("x"), v("z")))));
  k.Z = abstract({"f"}, app(half, half));

  const TermPtr head = app(k.p0, app(k.p1, v("s")));
  const TermPtr tail =
      app(k.p, app(k.pred, app(k.p0, v("s"))), app(k.p1, app(k.p1, v("s"))));
  const TermPtr recurse = abstract({"d"}, app(v("f"), app(k.pred, v("n")), tail));
  auto walker = [&](const TermPtr& base) {
    const TermPtr body = app(k.zero, v("n"), abstract({"d"}, base), recurse, k.I);
    return app(k.Z, abstract({"f", "n", "s"}, body));
  };
  k.b = walker(head);
  k.c = walker(v("s"));
  k.d = abstract({"x", "s"},
                 app(k.p, app(k.succ, app(k.p0, v("s"))), app(k.p, v("x"), app(k.p1, v("s")))));
  k.t = abstract({"x"}, app(k.p, app(k.p, k.F, k.I), app(k.p, v("x"), k.nil)));
  return k;
}

}  // namespace

const SequenceKit& sequence_kit() {
  static const SequenceKit kit = build_kit();
  return kit;
}

TermPtr SequenceKit::numeral(std::size_t n) const {
  TermPtr t = I;
  for (std::size_t i = 0; i < n; ++i) t = app(p, F, t);
  return t;
}

TermPtr SequenceKit::seq(const std::vector<TermPtr>& items) const {
  TermPtr body = nil;
  for (auto it = items.rbegin(); it != items.rend(); ++it) body = app(p, *it, body);
  return app(p, numeral(items.size()), body);
}

TermPtr SequenceKit::seq_of(const std::vector<Elem>& items) const {
  std::vector<TermPtr> ts;
  ts.reserve(items.size());
  for (Elem e : items) ts.push_back(cst(e));
  return seq(ts);
}

std::optional<Elem> EvaluatedKit::code(const FiniteOpca& A, const std::vector<Elem>& items) const {
  if (items.size() >= numerals.size()) return std::nullopt;
  Elem body = nil;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    body = A.apply(p, *it, body);
    if (body == kUndefined) return std::nullopt;
  }
  const Elem r = A.apply(p, numerals[items.size()], body);
  if (r == kUndefined) return std::nullopt;
  return r;
}

namespace {

std::string show(const FiniteOpca& A, const std::vector<Elem>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + A.name(xs[i]);
  return out + "]";
}

void for_each_sequence(int n, std::size_t len, const std::function<bool(const std::vector<Elem>&)>& f) {
  std::vector<Elem> xs(len, 0);
  while (true) {
    if (!f(xs)) return;
    std::size_t i = 0;
    while (i < len && ++xs[i] == n) xs[i++] = 0;
    if (i == len) return;
  }
}

}  // namespace

DerivedKit derive_sequence_kit(const FiniteOpca& A, std::size_t max_len) {
  Stopwatch sw;
  DerivedKit out;
  const SequenceKit& K = sequence_kit();
  EvaluatedKit& ek = out.kit;
  const std::string& subj = A.subject;

  std::string missing;
  auto ev = [&](const TermPtr& t, const char* what) {
    auto r = eval_in_opca(t, A);
    if (!r && missing.empty()) missing = what;
    return r.value_or(kUndefined);
  };
  ek.b = ev(K.b, "b");
  ek.c = ev(K.c, "c");
  ek.d = ev(K.d, "d");
  ek.t = ev(K.t, "t");
  ek.p = ev(K.p, "p");
  ek.nil = ev(K.nil, "nil");
  for (std::size_t n = 0; n <= max_len + 1; ++n) ek.numerals.push_back(ev(K.numeral(n), "numeral"));
  if (!missing.empty()) {
    out.reports.push_back(fail(subj, "sequence.construct", "term " + missing + " is undefined"));
    sw.stamp(out.reports);
    return out;
  }

  Report filt = pass(subj, "sequence.in-filter");
  const Mask F = A.filter_or_all();
  for (auto [e, name] : {std::pair{ek.b, "b"}, {ek.c, "c"}, {ek.d, "d"}, {ek.t, "t"}}) {
    filt.witness(name, A.name(e));
    if (!contains(F, e) && filt.passed())
      filt = fail(subj, "sequence.in-filter", std::string(name) + "=" + A.name(e) + " not in filter");
  }
  out.reports.push_back(filt);

  std::string bad1, bad2, bad3, bad4, undefined;
  const int n = A.size();
  for (std::size_t len = 0; len <= max_len; ++len) {
    for_each_sequence(n, len, [&](const std::vector<Elem>& xs) {
      const auto code = ek.code(A, xs);
      if (!code) {
        if (undefined.empty()) undefined = "code of " + show(A, xs) + " undefined";
        return true;
      }
      for (std::size_t i = 0; i < len; ++i) {
        const Elem bi = A.apply(ek.b, ek.numerals[i], *code);
        if (bad1.empty() && (bi == kUndefined || !A.leq(bi, xs[i])))
          bad1 = "n=" + std::to_string(i) + " seq=" + show(A, xs);
        const std::vector<Elem> suffix(xs.begin() + static_cast<long>(i), xs.end());
        const auto sc = ek.code(A, suffix);
        const Elem ci = A.apply(ek.c, ek.numerals[i], *code);
        if (bad2.empty() && (!sc || ci == kUndefined || !A.leq(ci, *sc)))
          bad2 = "n=" + std::to_string(i) + " seq=" + show(A, xs);
      }
      if (len < max_len) {
        for (Elem a = 0; a < n; ++a) {
          std::vector<Elem> longer{a};
          longer.insert(longer.end(), xs.begin(), xs.end());
          const auto lc = ek.code(A, longer);
          const Elem da = A.apply(ek.d, a, *code);
          if (bad3.empty() && (!lc || da == kUndefined || !A.leq(da, *lc)))
            bad3 = "a=" + A.name(a) + " seq=" + show(A, xs);
        }
      }
      return true;
    });
  }
  for (Elem a = 0; a < n; ++a) {
    const auto one = ek.code(A, {a});
    const Elem ta = A.apply(ek.t, a);
    if (bad4.empty() && (!one || ta == kUndefined || !A.leq(ta, *one))) bad4 = "a=" + A.name(a);
  }
  auto clause = [&](const char* id, const std::string& bad) {
    out.reports.push_back(bad.empty() ? pass(subj, id) : fail(subj, id, bad));
  };
  clause("sequence.codes-defined", undefined);
  clause("sequence.b", bad1);
  clause("sequence.c", bad2);
  clause("sequence.d", bad3);
  clause("sequence.t", bad4);
  sw.stamp(out.reports);
  return out;
}

std::string check_sequence_clauses_term_model(const std::vector<TermPtr>& items, std::size_t n,
                                              std::uint64_t fuel) {
  const SequenceKit& K = sequence_kit();
  auto same = [&](const TermPtr& lhs, const TermPtr& rhs, const char* what) -> std::string {
    const Reduction l = normalize(lhs, fuel);
    if (l.diverged) return std::string(what) + ": left side ran out of fuel";
    const Reduction r = normalize(rhs, fuel);
    if (r.diverged) return std::string(what) + ": right side ran out of fuel";
    if (!equal(l.term, r.term))
      return std::string(what) + ": " + to_string(l.term) + " vs " + to_string(r.term);
    return {};
  };
  const TermPtr code = K.seq(items);
  std::string err;
  if (n < items.size()) {
    err = same(app(K.b, K.numeral(n), code), items[n], "clause b");
    if (!err.empty()) return err;
    const std::vector<TermPtr> suffix(items.begin() + static_cast<long>(n), items.end());
    err = same(app(K.c, K.numeral(n), code), K.seq(suffix), "clause c");
    if (!err.empty()) return err;
  }
  if (!items.empty()) {
    const std::vector<TermPtr> rest(items.begin() + 1, items.end());
    err = same(app(K.d, items[0], K.seq(rest)), code, "clause d");
    if (!err.empty()) return err;
    err = same(app(K.t, items[0]), K.seq({items[0]}), "clause t");
  }
  return err;
}

}  // namespace pcalab
