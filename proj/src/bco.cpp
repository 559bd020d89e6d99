#include "pcalab/bco.hpp"

#include <stdexcept>

#include "pcalab/error.hpp"
#include "pcalab/sequence.hpp"

namespace pcalab {

Mask PartialFn::domain() const {
  Mask m = 0;
  for (Elem a = 0; a < static_cast<Elem>(map.size()); ++a)
    if (map[a] != kUndefined) m |= bit(a);
  return m;
}

bool PartialFn::total() const {
  for (Elem e : map)
    if (e == kUndefined) return false;
  return true;
}

FiniteBco::FiniteBco(std::vector<std::string> names, Poset order, std::vector<PartialFn> fns)
    : names_(std::move(names)), order_(std::move(order)), fns_(std::move(fns)) {
  const int n = order_.size();
  if (names_.empty())
    for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  if (static_cast<int>(names_.size()) != n) throw std::invalid_argument("name count mismatch");
  for (const auto& f : fns_) {
    if (static_cast<int>(f.map.size()) != n)
      throw std::invalid_argument("function " + f.name + " has wrong arity");
    for (Elem e : f.map)
      if (e < kUndefined || e >= n)
        throw std::invalid_argument("function " + f.name + " leaves the carrier");
  }
}

std::optional<Elem> FiniteBco::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> sub_identity(const FiniteBco& B) {
  for (std::size_t i = 0; i < B.fns().size(); ++i) {
    const auto& f = B.fns()[i];
    if (!f.total()) continue;
    bool ok = true;
    for (Elem a = 0; a < B.size() && ok; ++a) ok = B.leq(f(a), a);
    if (ok) return i;
  }
  return std::nullopt;
}

Reports check_bco(const FiniteBco& B) {
  Stopwatch sw;
  Reports out;
  const auto& F = B.fns();
  const int n = B.size();

  std::string bad;
  for (const auto& f : F) {
    if (!bad.empty()) break;
    for (Elem a = 0; a < n && bad.empty(); ++a) {
      if (!f.defined(a)) continue;
      for (Elem b = 0; b < n && bad.empty(); ++b) {
        if (!B.leq(b, a)) continue;
        if (!f.defined(b))
          bad = f.name + ": domain not downward closed (" + B.name(b) + " <= " + B.name(a) + ")";
        else if (!B.leq(f(b), f(a)))
          bad = f.name + ": not monotone at " + B.name(b) + " <= " + B.name(a);
      }
    }
  }
  out.push_back(bad.empty() ? pass(B.subject, "bco.i") : fail(B.subject, "bco.i", bad));

  if (auto i = sub_identity(B))
    out.push_back(pass(B.subject, "bco.ii").witness("i", F[*i].name));
  else
    out.push_back(fail(B.subject, "bco.ii", "no total function below the identity"));

  bad.clear();
  for (std::size_t fi = 0; fi < F.size() && bad.empty(); ++fi)
    for (std::size_t gi = 0; gi < F.size() && bad.empty(); ++gi) {
      bool found = false;
      for (std::size_t hi = 0; hi < F.size() && !found; ++hi) {
        bool ok = true;
        for (Elem a = 0; a < n && ok; ++a) {
          const Elem fa = F[fi](a);
          if (fa == kUndefined) continue;
          const Elem gfa = F[gi](fa);
          if (gfa == kUndefined) continue;
          const Elem ha = F[hi](a);
          ok = ha != kUndefined && B.leq(ha, gfa);
        }
        found = ok;
      }
      if (!found) bad = "no h below " + F[gi].name + " after " + F[fi].name;
    }
  out.push_back(bad.empty() ? pass(B.subject, "bco.iii") : fail(B.subject, "bco.iii", bad));
  sw.stamp(out);
  return out;
}

FiniteBco bco_view(const FiniteOpca& A) {
  std::vector<PartialFn> fns;
  for_each_bit(A.filter_or_all(), [&](Elem a) {
    PartialFn f{A.name(a), std::vector<Elem>(A.size())};
    for (Elem b = 0; b < A.size(); ++b) f.map[b] = A.apply(a, b);
    fns.push_back(std::move(f));
  });
  FiniteBco B(A.names(), A.order(), std::move(fns));
  B.subject = A.subject;
  return B;
}

std::optional<std::size_t> order_witness(const FiniteBco& src, const FiniteBco& dst, const Map& phi) {
  for (std::size_t u = 0; u < dst.fns().size(); ++u) {
    const auto& U = dst.fns()[u];
    bool ok = true;
    for (Elem a = 0; a < src.size() && ok; ++a)
      for (Elem a2 = 0; a2 < src.size() && ok; ++a2) {
        if (!src.leq(a, a2)) continue;
        const Elem v = U(phi[a]);
        ok = v != kUndefined && dst.leq(v, phi[a2]);
      }
    if (ok) return u;
  }
  return std::nullopt;
}

std::optional<std::size_t> tracker(const FiniteBco& src, const FiniteBco& dst, const Map& phi,
                                   std::size_t f) {
  const auto& Fn = src.fns()[f];
  for (std::size_t g = 0; g < dst.fns().size(); ++g) {
    const auto& G = dst.fns()[g];
    bool ok = true;
    for (Elem a = 0; a < src.size() && ok; ++a) {
      if (!Fn.defined(a)) continue;
      const Elem v = G(phi[a]);
      ok = v != kUndefined && dst.leq(v, phi[Fn(a)]);
    }
    if (ok) return g;
  }
  return std::nullopt;
}

Reports check_bco_morphism(const FiniteBco& src, const FiniteBco& dst, const Map& phi) {
  Stopwatch sw;
  Reports out;
  const std::string subj = src.subject + "->" + dst.subject;
  if (static_cast<int>(phi.size()) != src.size()) {
    out.push_back(refused(subj, "morphism", "map size does not match the source carrier"));
    return out;
  }
  for (Elem e : phi)
    if (e < 0 || e >= dst.size()) {
      out.push_back(refused(subj, "morphism", "map leaves the target carrier"));
      return out;
    }
  if (auto u = order_witness(src, dst, phi))
    out.push_back(pass(subj, "morphism.i").witness("u", dst.fns()[*u].name));
  else
    out.push_back(fail(subj, "morphism.i", "no u tracks the order"));
  Report tr = pass(subj, "morphism.ii");
  for (std::size_t f = 0; f < src.fns().size(); ++f) {
    if (auto g = tracker(src, dst, phi, f)) {
      tr.witness(src.fns()[f].name, dst.fns()[*g].name);
    } else {
      tr = fail(subj, "morphism.ii", "no tracker for " + src.fns()[f].name);
      break;
    }
  }
  out.push_back(tr);
  sw.stamp(out);
  return out;
}

bool is_bco_morphism(const FiniteBco& src, const FiniteBco& dst, const Map& phi) {
  if (!order_witness(src, dst, phi)) return false;
  for (std::size_t f = 0; f < src.fns().size(); ++f)
    if (!tracker(src, dst, phi, f)) return false;
  return true;
}

std::optional<std::size_t> morphism_leq(const FiniteBco& dst, const Map& phi, const Map& psi) {
  for (std::size_t g = 0; g < dst.fns().size(); ++g) {
    bool ok = true;
    for (std::size_t a = 0; a < phi.size() && ok; ++a) {
      const Elem v = dst.fns()[g](phi[a]);
      ok = v != kUndefined && dst.leq(v, psi[a]);
    }
    if (ok) return g;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Downsets

namespace {

std::string set_name(const std::vector<std::string>& names, Mask m) {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](Elem e) {
    if (!first) out += ",";
    out += names[e];
    first = false;
  });
  return out + "}";
}

std::optional<Elem> find_set(const std::vector<Mask>& sets, Mask m) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == m) return static_cast<Elem>(i);
  return std::nullopt;
}

}  // namespace

std::optional<Elem> DownsetMonad::index_of(Mask downset) const { return find_set(sets, downset); }
std::optional<Elem> DownsetOpca::index_of(Mask downset) const { return find_set(sets, downset); }

DownsetMonad downset_monad(const FiniteBco& B, std::size_t cap) {
  DownsetMonad M;
  M.sets = enumerate_downsets(B.order(), cap);
  if (M.sets.size() > static_cast<std::size_t>(kMaxCarrier))
    throw CapExceeded("downsets of " + B.subject, kMaxCarrier);
  const int m = static_cast<int>(M.sets.size());
  std::vector<std::string> names;
  for (Mask s : M.sets) names.push_back(set_name(B.names(), s));
  std::vector<PartialFn> fns;
  for (const auto& f : B.fns()) {
    PartialFn F{"D" + f.name, std::vector<Elem>(m, kUndefined)};
    const Mask dom = f.domain();
    for (int i = 0; i < m; ++i) {
      if (!subset_of(M.sets[i], dom)) continue;
      Mask img = 0;
      for_each_bit(M.sets[i], [&](Elem a) { img |= bit(f(a)); });
      F.map[i] = *find_set(M.sets, B.order().down_closure(img));
    }
    fns.push_back(std::move(F));
  }
  M.D = FiniteBco(std::move(names), inclusion_order(M.sets), std::move(fns));
  M.D.subject = "D(" + B.subject + ")";
  for (Elem a = 0; a < B.size(); ++a) M.unit.push_back(*find_set(M.sets, B.order().down(a)));
  M.outer = enumerate_downsets(M.D.order(), cap);
  for (Mask o : M.outer) {
    Mask u = 0;
    for_each_bit(o, [&](Elem i) { u |= M.sets[i]; });
    M.mult.push_back(*find_set(M.sets, u));
  }
  return M;
}

DownsetOpca downset_opca(const FiniteOpca& A, std::size_t cap) {
  DownsetOpca out;
  out.sets = enumerate_downsets(A.order(), cap);
  if (out.sets.size() > static_cast<std::size_t>(kMaxCarrier))
    throw CapExceeded("downsets of " + A.subject, kMaxCarrier);
  const int m = static_cast<int>(out.sets.size());
  std::vector<std::string> names;
  for (Mask s : out.sets) names.push_back(set_name(A.names(), s));
  std::vector<Elem> table(m * m, kUndefined);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Mask img = 0;
      bool ok = true;
      for_each_bit(out.sets[i], [&](Elem a) {
        for_each_bit(out.sets[j], [&](Elem b) {
          const Elem ab = A.apply(a, b);
          if (ab == kUndefined)
            ok = false;
          else
            img |= bit(ab);
        });
      });
      if (ok) table[i * m + j] = *find_set(out.sets, A.order().down_closure(img));
    }
  const Elem k = *find_set(out.sets, A.order().down(A.k()));
  const Elem s = *find_set(out.sets, A.order().down(A.s()));
  out.D = FiniteOpca(std::move(names), inclusion_order(out.sets), std::move(table), k, s);
  out.D.subject = "D(" + A.subject + ")";
  Mask phi = 0;
  for (int i = 0; i < m; ++i)
    if (out.sets[i] & A.filter_or_all()) phi |= bit(i);
  out.D.filter = phi;
  return out;
}

// ---------------------------------------------------------------------------
// Internal meets and truth values

std::optional<std::pair<Elem, std::size_t>> internal_top(const FiniteBco& B) {
  for (Elem t = 0; t < B.size(); ++t)
    for (std::size_t g = 0; g < B.fns().size(); ++g) {
      const auto& G = B.fns()[g];
      if (!G.total()) continue;
      bool ok = true;
      for (Elem a = 0; a < B.size() && ok; ++a) ok = B.leq(G(a), t);
      if (ok) return std::pair{t, g};
    }
  return std::nullopt;
}

namespace {

// Checks that `meet` is a morphism from the product BCO: an order witness
// for componentwise <= and, per pair (f, g), a tracker h with
// h(meet(a,b)) <= meet(f a, g b) on dom f x dom g.
bool meet_is_morphism(const FiniteBco& B, const std::vector<Elem>& meet) {
  const int n = B.size();
  const auto& F = B.fns();
  bool have_u = false;
  for (std::size_t u = 0; u < F.size() && !have_u; ++u) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem a2 = 0; a2 < n && ok; ++a2) {
          if (!B.leq(a, a2)) continue;
          for (Elem b2 = 0; b2 < n && ok; ++b2) {
            if (!B.leq(b, b2)) continue;
            const Elem v = F[u](meet[a * n + b]);
            ok = v != kUndefined && B.leq(v, meet[a2 * n + b2]);
          }
        }
    have_u = ok;
  }
  if (!have_u) return false;
  for (std::size_t f = 0; f < F.size(); ++f)
    for (std::size_t g = 0; g < F.size(); ++g) {
      bool found = false;
      for (std::size_t h = 0; h < F.size() && !found; ++h) {
        bool ok = true;
        for (Elem a = 0; a < n && ok; ++a) {
          if (!F[f].defined(a)) continue;
          for (Elem b = 0; b < n && ok; ++b) {
            if (!F[g].defined(b)) continue;
            const Elem v = F[h](meet[a * n + b]);
            ok = v != kUndefined && B.leq(v, meet[F[f](a) * n + F[g](b)]);
          }
        }
        found = ok;
      }
      if (!found) return false;
    }
  return true;
}

std::optional<std::size_t> unit_for(const FiniteBco& B, const std::vector<Elem>& meet) {
  const int n = B.size();
  for (std::size_t g = 0; g < B.fns().size(); ++g) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      const Elem v = B.fns()[g](a);
      ok = v != kUndefined && B.leq(v, meet[a * n + a]);
    }
    if (ok) return g;
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> counit_for(const FiniteBco& B,
                                                              const std::vector<Elem>& meet) {
  const int n = B.size();
  auto side = [&](bool left) -> std::optional<std::size_t> {
    for (std::size_t g = 0; g < B.fns().size(); ++g) {
      bool ok = true;
      for (Elem a = 0; a < n && ok; ++a)
        for (Elem b = 0; b < n && ok; ++b) {
          const Elem v = B.fns()[g](meet[a * n + b]);
          ok = v != kUndefined && B.leq(v, left ? a : b);
        }
      if (ok) return g;
    }
    return std::nullopt;
  };
  auto l = side(true);
  auto r = side(false);
  if (!l || !r) return std::nullopt;
  return std::pair{*l, *r};
}

std::optional<InternalMeets> accept(const FiniteBco& B, const std::vector<Elem>& meet, Elem top,
                                    std::size_t top_g) {
  for (Elem e : meet)
    if (e == kUndefined) return std::nullopt;
  auto unit = unit_for(B, meet);
  if (!unit) return std::nullopt;
  auto counit = counit_for(B, meet);
  if (!counit) return std::nullopt;
  if (!meet_is_morphism(B, meet)) return std::nullopt;
  return InternalMeets{top, top_g, meet, *unit, *counit};
}

}  // namespace

std::optional<InternalMeets> internal_meets(const FiniteBco& B, const std::vector<Elem>* candidate,
                                            std::string* why) {
  auto top = internal_top(B);
  if (!top) {
    if (why) *why = "no internal top";
    return std::nullopt;
  }
  if (candidate) {
    if (auto r = accept(B, *candidate, top->first, top->second)) return r;
  }
  const int n = B.size();
  const auto& F = B.fns();
  for (std::size_t g1 = 0; g1 < F.size(); ++g1)
    for (std::size_t g2 = 0; g2 < F.size(); ++g2)
      for (std::size_t u = 0; u < F.size(); ++u) {
        if (!F[u].total()) continue;
        std::vector<std::vector<Elem>> cand(n * n);
        double combos = 1;
        bool empty = false;
        for (Elem a = 0; a < n && !empty; ++a)
          for (Elem b = 0; b < n && !empty; ++b) {
            for (Elem c = 0; c < n; ++c) {
              const Elem l = F[g1](c), r = F[g2](c);
              if (l == kUndefined || r == kUndefined || !B.leq(l, a) || !B.leq(r, b)) continue;
              if (a == b && !B.leq(F[u](a), c)) continue;
              cand[a * n + b].push_back(c);
            }
            empty = cand[a * n + b].empty();
            combos *= static_cast<double>(cand[a * n + b].size());
          }
        if (empty || combos > static_cast<double>(1 << 20)) continue;
        std::vector<std::size_t> idx(n * n, 0);
        std::vector<Elem> meet(n * n);
        while (true) {
          for (int i = 0; i < n * n; ++i) meet[i] = cand[i][idx[i]];
          if (auto r = accept(B, meet, top->first, top->second)) return r;
          int i = 0;
          while (i < n * n && ++idx[i] == cand[i].size()) idx[i++] = 0;
          if (i == n * n) break;
        }
      }
  if (why) *why = "no meet map right adjoint to the diagonal";
  return std::nullopt;
}

std::vector<Elem> pairing_meet(const FiniteOpca& A) {
  const auto p = eval_in_opca(sequence_kit().p, A);
  const int n = A.size();
  std::vector<Elem> out(n * n, kUndefined);
  if (!p) return out;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) out[a * n + b] = A.apply(*p, a, b);
  return out;
}

std::optional<InternalMeets> opca_meets(const FiniteOpca& A, std::string* why) {
  const auto cand = pairing_meet(A);
  return internal_meets(bco_view(A), &cand, why);
}

Mask truth_values(const FiniteBco& B, Elem top) {
  Mask tv = 0;
  for (const auto& f : B.fns()) {
    const Elem v = f(top);
    if (v != kUndefined) tv |= B.order().up(v);
  }
  return tv;
}

std::optional<Elem> tv_least(const FiniteBco& B, Elem top) {
  return B.order().least_of(truth_values(B, top));
}

std::optional<Elem> tv_least(const FiniteOpca& A) {
  const FiniteBco B = bco_view(A);
  auto top = internal_top(B);
  if (!top) return std::nullopt;
  return tv_least(B, top->first);
}

// ---------------------------------------------------------------------------
// Applicative morphisms

bool preserves_filter(const FiniteOpca& A, const FiniteOpca& B, const Map& f) {
  const Mask Bf = B.filter_or_all();
  bool ok = true;
  for_each_bit(A.filter_or_all(), [&](Elem a) {
    if (ok) ok = (B.order().down(f[a]) & Bf) != 0;
  });
  return ok;
}

namespace {

template <class Pred>
std::optional<Elem> first_in(Mask m, Pred&& pred) {
  std::optional<Elem> hit;
  for_each_bit(m, [&](Elem e) {
    if (!hit && pred(e)) hit = e;
  });
  return hit;
}

bool below(const FiniteOpca& B, Elem x, Elem y) { return x != kUndefined && B.leq(x, y); }

}  // namespace

ApplicativeResult check_applicative_morphism(const FiniteOpca& A, const FiniteOpca& B, const Map& f) {
  Stopwatch sw;
  ApplicativeResult res;
  const std::string subj = A.subject + "->" + B.subject;
  if (static_cast<int>(f.size()) != A.size()) {
    res.reports.push_back(refused(subj, "applicative", "map size does not match the source"));
    return res;
  }
  const Mask Bf = B.filter_or_all();
  const int n = A.size();

  const bool c1 = preserves_filter(A, B, f);
  res.reports.push_back(c1 ? pass(subj, "applicative.i")
                           : fail(subj, "applicative.i", "some filter element leaves the up-closure of B'"));

  // Clause (ii) is checked for every a' in A, not only the filter: both
  // directions of the meet-preservation equivalence rely on that form.
  auto r = first_in(Bf, [&](Elem r) {
    for (Elem a2 = 0; a2 < n; ++a2)
      for (Elem a = 0; a < n; ++a) {
        const Elem aa = A.apply(a2, a);
        if (aa != kUndefined && !below(B, B.apply(r, f[a2], f[a]), f[aa])) return false;
      }
    return true;
  });
  if (r) {
    res.r = *r;
    res.reports.push_back(pass(subj, "applicative.ii").witness("r", B.name(*r)));
  } else {
    res.reports.push_back(fail(subj, "applicative.ii", "no r in B' tracks application"));
  }

  auto u = first_in(Bf, [&](Elem u) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (A.leq(x, y) && !below(B, B.apply(u, f[x]), f[y])) return false;
    return true;
  });
  if (u) {
    res.u = *u;
    res.reports.push_back(pass(subj, "applicative.iii").witness("u", B.name(*u)));
  } else {
    res.reports.push_back(fail(subj, "applicative.iii", "no u in B' tracks the order"));
  }
  res.applicative = c1 && r && u;

  // Independent verdict through the BCO views and their internal meets.
  const FiniteBco VA = bco_view(A), VB = bco_view(B);
  bool morphism = is_bco_morphism(VA, VB, f);
  std::string why;
  const auto mA = opca_meets(A, &why);
  const auto mB = opca_meets(B, &why);
  bool meets = mA && mB;
  if (meets) {
    const int m = B.size();
    const bool top_ok = first_in(Bf, [&](Elem g) { return below(B, B.apply(g, mB->top), f[mA->top]); })
                            .has_value();
    const bool down = first_in(Bf, [&](Elem g) {
                        for (Elem a = 0; a < n; ++a)
                          for (Elem b = 0; b < n; ++b)
                            if (!below(B, B.apply(g, f[mA->meet[a * n + b]]),
                                       mB->meet[f[a] * m + f[b]]))
                              return false;
                        return true;
                      }).has_value();
    const bool up = first_in(Bf, [&](Elem g) {
                      for (Elem a = 0; a < n; ++a)
                        for (Elem b = 0; b < n; ++b)
                          if (!below(B, B.apply(g, mB->meet[f[a] * m + f[b]]),
                                     f[mA->meet[a * n + b]]))
                            return false;
                      return true;
                    }).has_value();
    meets = top_ok && down && up;
  }
  res.meet_preserving_morphism = morphism && meets;
  Report cross = res.agree() ? pass(subj, "applicative.meet-preserving-agreement")
                             : fail(subj, "applicative.meet-preserving-agreement",
                                    std::string("applicative=") + (res.applicative ? "yes" : "no") +
                                        " meet-preserving morphism=" +
                                        (res.meet_preserving_morphism ? "yes" : "no"));
  cross.witness("meet-preserving-morphism", res.meet_preserving_morphism ? "yes" : "no");
  if (!mA || !mB) cross.note = why;
  res.reports.push_back(cross);
  sw.stamp(res.reports);
  return res;
}

DensityResult check_density(const FiniteOpca& A, const FiniteOpca& B, const Map& f) {
  Stopwatch sw;
  DensityResult res;
  const Mask Af = A.filter_or_all();
  const Mask Bf = B.filter_or_all();
  const int n = A.size();

  for_each_bit(Bf, [&](Elem m) {
    if (res.cd_sk) return;
    Map g(B.size(), kUndefined);
    bool all = true;
    for_each_bit(Bf, [&](Elem b2) {
      if (!all) return;
      auto a2 = first_in(Af, [&](Elem a2) {
        for (Elem a = 0; a < n; ++a) {
          const Elem rhs = B.apply(b2, f[a]);
          if (rhs == kUndefined) continue;
          const Elem aa = A.apply(a2, a);
          if (aa == kUndefined || !below(B, B.apply(m, f[aa]), rhs)) return false;
        }
        return true;
      });
      if (a2)
        g[b2] = *a2;
      else
        all = false;
    });
    if (all) res.cd_sk.emplace(m, std::move(g));
  });

  for_each_bit(Bf, [&](Elem t) {
    if (res.simple) return;
    Map h(B.size(), kUndefined);
    bool all = true;
    for_each_bit(Bf, [&](Elem b2) {
      if (!all) return;
      auto a2 = first_in(Af, [&](Elem a2) { return below(B, B.apply(t, f[a2]), b2); });
      if (a2)
        h[b2] = *a2;
      else
        all = false;
    });
    if (all) res.simple.emplace(t, std::move(h));
  });

  const std::string subj = A.subject + "->" + B.subject;
  res.report = res.agree() ? pass(subj, "density.agreement")
                           : fail(subj, "density.agreement",
                                  std::string("cd-sk ") + (res.cd_sk ? "found" : "absent") +
                                      ", simple " + (res.simple ? "found" : "absent"));
  res.report.witness("dense", res.cd_sk ? "yes" : "no");
  if (res.cd_sk) res.report.witness("m", B.name(res.cd_sk->first));
  if (res.simple) res.report.witness("t", B.name(res.simple->first));
  sw.stamp(res.report);
  return res;
}

std::optional<Map> right_adjoint(const FiniteOpca& A, const FiniteOpca& B, const Map& f,
                                 std::size_t cap) {
  const int na = A.size(), nb = B.size();
  double count = 1;
  for (int i = 0; i < nb; ++i) count *= na;
  if (count > static_cast<double>(cap)) return std::nullopt;
  const FiniteBco VA = bco_view(A), VB = bco_view(B);
  const Mask Af = A.filter_or_all(), Bf = B.filter_or_all();
  Map g(nb, 0);
  while (true) {
    const bool unit = first_in(Af, [&](Elem r) {
                        for (Elem a = 0; a < na; ++a)
                          if (!below(A, A.apply(r, a), g[f[a]])) return false;
                        return true;
                      }).has_value();
    if (unit) {
      const bool counit = first_in(Bf, [&](Elem s) {
                            for (Elem b = 0; b < nb; ++b)
                              if (!below(B, B.apply(s, f[g[b]]), b)) return false;
                            return true;
                          }).has_value();
      if (counit && is_bco_morphism(VB, VA, g)) return g;
    }
    int i = 0;
    while (i < nb && ++g[i] == na) g[i++] = 0;
    if (i == nb) break;
  }
  return std::nullopt;
}

}  // namespace pcalab
