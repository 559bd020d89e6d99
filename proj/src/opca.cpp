#include "pcalab/opca.hpp"

#include <stdexcept>

namespace pcalab {

FiniteOpca::FiniteOpca(std::vector<std::string> names, Poset order, std::vector<Elem> table,
                       Elem k, Elem s)
    : names_(std::move(names)), order_(std::move(order)), table_(std::move(table)) {
  const int n = order_.size();
  if (names_.empty()) {
    for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != n) throw std::invalid_argument("name count mismatch");
  if (static_cast<int>(table_.size()) != n * n)
    throw std::invalid_argument("application table has wrong size");
  for (Elem e : table_)
    if (e < kUndefined || e >= n) throw std::invalid_argument("application entry outside carrier");
  set_ks(k, s);
}

void FiniteOpca::set_ks(Elem k, Elem s) {
  if (k < 0 || k >= size() || s < 0 || s >= size())
    throw std::invalid_argument("k or s outside carrier");
  k_ = k;
  s_ = s;
}

bool FiniteOpca::total() const {
  for (Elem e : table_)
    if (e == kUndefined) return false;
  return true;
}

std::optional<Elem> FiniteOpca::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string FiniteOpca::format_set(Mask m) const {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](Elem e) {
    if (!first) out += ",";
    out += names_[e];
    first = false;
  });
  return out + "}";
}

ConstNamer FiniteOpca::namer() const {
  return [this](Elem e) { return names_[e]; };
}

ConstResolver FiniteOpca::resolver() const {
  return [this](std::string_view s) { return find(s); };
}

std::optional<Elem> FiniteOpca::skk() const {
  const Elem r = apply(s_, k_, k_);
  if (r == kUndefined) return std::nullopt;
  return r;
}

std::string k_law_violation(const FiniteOpca& A, Elem k) {
  const int n = A.size();
  for (Elem x = 0; x < n; ++x) {
    const Elem kx = A.apply(k, x);
    for (Elem y = 0; y < n; ++y) {
      const Elem kxy = kx == kUndefined ? kUndefined : A.apply(kx, y);
      if (kxy == kUndefined || !A.leq(kxy, x))
        return "x=" + A.name(x) + " y=" + A.name(y) +
               (kxy == kUndefined ? ": kxy undefined" : ": kxy=" + A.name(kxy) + " not <= x");
    }
  }
  return {};
}

std::string s_law_violation(const FiniteOpca& A, Elem s) {
  const int n = A.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem xz = A.apply(x, z);
        const Elem yz = A.apply(y, z);
        if (xz == kUndefined || yz == kUndefined) continue;
        const Elem rhs = A.apply(xz, yz);
        if (rhs == kUndefined) continue;
        const Elem sxy = A.apply(s, x, y);
        const Elem lhs = sxy == kUndefined ? kUndefined : A.apply(sxy, z);
        if (lhs == kUndefined || !A.leq(lhs, rhs))
          return "x=" + A.name(x) + " y=" + A.name(y) + " z=" + A.name(z) +
                 (lhs == kUndefined ? ": sxyz undefined"
                                    : ": sxyz=" + A.name(lhs) + " not <= " + A.name(rhs));
      }
  return {};
}

std::string s_partial_violation(const FiniteOpca& A, Elem s) {
  for (Elem x = 0; x < A.size(); ++x)
    for (Elem y = 0; y < A.size(); ++y)
      if (A.apply(s, x, y) == kUndefined)
        return "x=" + A.name(x) + " y=" + A.name(y) + ": sxy undefined";
  return {};
}

namespace {

std::string downward_violation(const FiniteOpca& A) {
  const int n = A.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = A.apply(a, b);
      if (ab == kUndefined) continue;
      for (Elem a2 = 0; a2 < n; ++a2) {
        if (!A.leq(a2, a)) continue;
        for (Elem b2 = 0; b2 < n; ++b2) {
          if (!A.leq(b2, b)) continue;
          const Elem r = A.apply(a2, b2);
          if (r == kUndefined || !A.leq(r, ab))
            return "a=" + A.name(a) + " b=" + A.name(b) + " a'=" + A.name(a2) +
                   " b'=" + A.name(b2) +
                   (r == kUndefined ? ": a'b' undefined"
                                    : ": a'b'=" + A.name(r) + " not <= " + A.name(ab));
        }
      }
    }
  return {};
}

Report clause(const std::string& subject, const std::string& id, const std::string& violation) {
  return violation.empty() ? pass(subject, id) : fail(subject, id, violation);
}

}  // namespace

Reports check_opca_axioms(const FiniteOpca& A, bool search_ks) {
  Stopwatch sw;
  Reports out;
  if (A.size() == 0) {
    out.push_back(refused(A.subject, "opca.carrier", "empty carrier"));
    return out;
  }
  out.push_back(pass(A.subject, "opca.order").witness("elements", std::to_string(A.size())));
  out.push_back(clause(A.subject, "opca.downward", downward_violation(A)));
  out.push_back(clause(A.subject, "opca.k", k_law_violation(A, A.k())));
  out.back().witness("k", A.name(A.k()));
  out.push_back(clause(A.subject, "opca.s", s_law_violation(A, A.s())));
  out.back().witness("s", A.name(A.s()));
  out.push_back(clause(A.subject, "opca.s-total", s_partial_violation(A, A.s())));
  if (search_ks) {
    std::optional<std::pair<Elem, Elem>> found;
    for (Elem k = 0; k < A.size() && !found; ++k) {
      if (!k_law_violation(A, k).empty()) continue;
      for (Elem s = 0; s < A.size(); ++s)
        if (s_law_violation(A, s).empty() && s_partial_violation(A, s).empty()) {
          found.emplace(k, s);
          break;
        }
    }
    if (found)
      out.push_back(pass(A.subject, "opca.ks-search")
                        .witness("k", A.name(found->first))
                        .witness("s", A.name(found->second)));
    else
      out.push_back(fail(A.subject, "opca.ks-search", "no carrier pair satisfies the k and s laws"));
  }
  sw.stamp(out);
  return out;
}

Report check_filter(const FiniteOpca& A, Mask subset) {
  Stopwatch sw;
  Report r = pass(A.subject, "filter");
  if (!subset_of(subset, A.order().all())) {
    r = fail(A.subject, "filter", "subset exceeds carrier");
  } else if (!contains(subset, A.k())) {
    r = fail(A.subject, "filter", "k=" + A.name(A.k()) + " not in subset");
  } else if (!contains(subset, A.s())) {
    r = fail(A.subject, "filter", "s=" + A.name(A.s()) + " not in subset");
  } else {
    std::string bad;
    for_each_bit(subset, [&](Elem a) {
      for_each_bit(subset, [&](Elem b) {
        const Elem ab = A.apply(a, b);
        if (bad.empty() && ab != kUndefined && !contains(subset, ab))
          bad = A.name(a) + "*" + A.name(b) + "=" + A.name(ab) + " leaves the subset";
      });
    });
    if (!bad.empty()) r = fail(A.subject, "filter", bad);
  }
  if (r.passed()) r.witness("filter", A.format_set(subset));
  sw.stamp(r);
  return r;
}

std::optional<Elem> turing_leq(const FiniteOpca& A, Elem a1, Elem a2) {
  std::optional<Elem> hit;
  for_each_bit(A.filter_or_all(), [&](Elem b) {
    if (hit) return;
    const Elem r = A.apply(b, a2);
    if (r != kUndefined && A.leq(r, a1)) hit = b;
  });
  return hit;
}

FiniteOpca semilattice_opca(const Poset& P, std::vector<std::string> names) {
  const int n = P.size();
  const auto top = P.top();
  if (!top) throw std::invalid_argument("poset has no top element");
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto m = P.meet(a, b);
      if (!m) throw std::invalid_argument("poset is not a meet-semilattice");
      table[a * n + b] = *m;
    }
  FiniteOpca A(std::move(names), P, std::move(table), *top, *top);
  A.filter = bit(*top);
  return A;
}

}  // namespace pcalab
