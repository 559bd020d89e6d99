#include "pcalab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pcalab/error.hpp"

namespace pcalab {

const char* to_string(FileKind k) {
  switch (k) {
    case FileKind::Opca: return "opca";
    case FileKind::Bco: return "bco";
    case FileKind::Aks: return "aks";
    case FileKind::Map: return "map";
  }
  return "?";
}

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::vector<std::string> args;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    Line l{n, {}, {}};
    if (!(ls >> l.key)) continue;
    for (std::string t; ls >> t;) l.args.push_back(t);
    out.push_back(std::move(l));
  }
  return out;
}

class Reader {
 public:
  Reader(const std::string& text, std::string source) : lines_(tokenize(text)), source_(std::move(source)) {}

  [[noreturn]] void error(const Line& l, const std::string& what) const {
    throw InputError(source_, l.number, l.key, what);
  }
  [[noreturn]] void error(const std::string& field, const std::string& what) const {
    throw InputError(source_, 0, field, what);
  }

  const std::vector<Line>& lines() const { return lines_; }
  const std::string& source() const { return source_; }

  const Line* single(const std::string& key) const {
    const Line* hit = nullptr;
    for (const auto& l : lines_)
      if (l.key == key) {
        if (hit) error(l, "given more than once");
        hit = &l;
      }
    return hit;
  }

  std::vector<const Line*> all(const std::string& key) const {
    std::vector<const Line*> out;
    for (const auto& l : lines_)
      if (l.key == key) out.push_back(&l);
    return out;
  }

  void only(const std::set<std::string>& keys) const {
    for (const auto& l : lines_)
      if (!keys.count(l.key)) error(l, "unknown keyword");
  }

  void arity(const Line& l, std::size_t n) const {
    if (l.args.size() != n) error(l, "expects " + std::to_string(n) + " value(s), got " + std::to_string(l.args.size()));
  }

 private:
  std::vector<Line> lines_;
  std::string source_;
};

// Name table for one sort.
class Names {
 public:
  Names(const Reader& r, const Line& decl, const std::string& what) : r_(r), what_(what) {
    if (decl.args.empty()) r.error(decl, "no " + what + " listed");
    if (decl.args.size() > static_cast<std::size_t>(kMaxCarrier))
      r.error(decl, "at most " + std::to_string(kMaxCarrier) + " " + what + " supported");
    for (const auto& n : decl.args) {
      if (index_.count(n)) r.error(decl, "duplicate name '" + n + "'");
      index_[n] = static_cast<int>(names_.size());
      names_.push_back(n);
    }
  }
  int operator()(const Line& l, const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) r_.error(l, "unknown " + what_ + " '" + n + "'");
    return it->second;
  }
  Mask set(const Line& l, const std::vector<std::string>& ns, std::size_t from = 0) const {
    Mask m = 0;
    for (std::size_t i = from; i < ns.size(); ++i) m |= bit((*this)(l, ns[i]));
    return m;
  }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  const Reader& r_;
  std::string what_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

const Line& required(const Reader& r, const std::string& key) {
  const Line* l = r.single(key);
  if (!l) r.error(key, "missing");
  return *l;
}

Poset read_order(const Reader& r, const Names& names) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const Line* l : r.all("leq")) {
    if (l->args.size() < 2) r.error(*l, "expects a chain of at least two elements");
    for (std::size_t i = 0; i + 1 < l->args.size(); ++i)
      pairs.emplace_back(names(*l, l->args[i]), names(*l, l->args[i + 1]));
  }
  try {
    return Poset::from_pairs(names.size(), pairs);
  } catch (const std::invalid_argument& e) {
    r.error("leq", e.what());
  }
}

std::string subject_of(const Reader& r) {
  if (const Line* l = r.single("name")) {
    r.arity(*l, 1);
    return l->args[0];
  }
  const std::string& s = r.source();
  auto slash = s.find_last_of('/');
  std::string base = slash == std::string::npos ? s : s.substr(slash + 1);
  if (auto dot = base.find('.'); dot != std::string::npos) base.erase(dot);
  return base;
}

void check_kind(const Reader& r, FileKind want) {
  if (const Line* l = r.single("kind")) {
    r.arity(*l, 1);
    if (l->args[0] != to_string(want)) r.error(*l, std::string("expected kind ") + to_string(want));
  }
}

}  // namespace

FileKind detect_kind(const std::string& text, const std::string& source) {
  Reader r(text, source);
  if (const Line* l = r.single("kind")) {
    r.arity(*l, 1);
    for (FileKind k : {FileKind::Opca, FileKind::Bco, FileKind::Aks, FileKind::Map})
      if (l->args[0] == to_string(k)) return k;
    r.error(*l, "unknown kind '" + l->args[0] + "'");
  }
  if (r.single("terms")) return FileKind::Aks;
  if (!r.all("fn").empty()) return FileKind::Bco;
  if (!r.all("map").empty()) return FileKind::Map;
  return FileKind::Opca;
}

OpcaFile parse_opca(const std::string& text, const std::string& source) {
  Reader r(text, source);
  r.only({"kind", "name", "elements", "leq", "app", "k", "s", "filter", "U", "predicate", "sup"});
  check_kind(r, FileKind::Opca);
  const Names names(r, required(r, "elements"), "element");
  const int n = names.size();
  const Poset order = read_order(r, names);

  std::vector<Elem> table(n * n, kUndefined);
  bool meet = false;
  for (const Line* l : r.all("app")) {
    if (l->args.size() == 1 && l->args[0] == "meet") {
      meet = true;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          auto m = order.meet(a, b);
          if (!m) r.error(*l, "no meet of " + names.names()[a] + " and " + names.names()[b]);
          table[a * n + b] = *m;
        }
      continue;
    }
    r.arity(*l, 3);
    const Elem a = names(*l, l->args[0]), b = names(*l, l->args[1]), c = names(*l, l->args[2]);
    if (table[a * n + b] != kUndefined && table[a * n + b] != c && !meet)
      r.error(*l, "conflicting product for " + l->args[0] + " " + l->args[1]);
    table[a * n + b] = c;
  }

  auto one = [&](const char* key) -> std::optional<Elem> {
    const Line* l = r.single(key);
    if (!l) return std::nullopt;
    r.arity(*l, 1);
    return names(*l, l->args[0]);
  };
  auto k = one("k"), s = one("s");
  if (meet && (!k || !s)) {
    auto top = order.top();
    if (!top) r.error("app", "meet application needs a top element");
    if (!k) k = top;
    if (!s) s = top;
  }

  OpcaFile out;
  out.A = FiniteOpca(names.names(), order, std::move(table), k.value_or(0), s.value_or(0));
  out.A.subject = subject_of(r);
  if (!k || !s) {
    // first pair of carrier elements satisfying both laws
    std::optional<Elem> fk = k, fs = s;
    for (Elem c = 0; c < n && !fk; ++c)
      if (k_law_violation(out.A, c).empty()) fk = c;
    for (Elem c = 0; c < n && !fs; ++c)
      if (s_law_violation(out.A, c).empty() && s_partial_violation(out.A, c).empty()) fs = c;
    if (!fk || !fs) r.error(fk ? "s" : "k", "not given and no element satisfies the law");
    out.A.set_ks(*fk, *fs);
  }
  if (meet && !r.single("filter")) out.A.filter = bit(*order.top());
  if (const Line* l = r.single("filter")) out.A.filter = names.set(*l, l->args);
  if (const Line* l = r.single("U")) {
    const Mask U = names.set(*l, l->args);
    if (!order.is_downset(U)) r.error(*l, "U must be downward closed");
    out.A.U = U;
  }
  for (const Line* l : r.all("predicate")) {
    if (l->args.empty()) r.error(*l, "predicate needs a name");
    NamedPredicate p;
    p.name = l->args[0];
    for (std::size_t i = 1; i < l->args.size(); ++i) {
      const std::string& tok = l->args[i];
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) r.error(*l, "expected index=elements, got '" + tok + "'");
      p.index.push_back(tok.substr(0, eq));
      Mask m = 0;
      std::string rest = tok.substr(eq + 1);
      std::istringstream es(rest);
      for (std::string e; std::getline(es, e, ',');)
        if (!e.empty()) m |= bit(names(*l, e));
      p.values.push_back(order.down_closure(m));
    }
    out.A.predicates.push_back(std::move(p));
  }
  const auto sups = r.all("sup");
  if (!sups.empty()) {
    SupSpec spec;
    for (const Line* l : sups) {
      if (l->args.size() == 1 && l->args[0] == "join") {
        spec.join = true;
        continue;
      }
      if (l->args.empty()) r.error(*l, "expects generators and a value");
      // sup g1 g2 .. -> v, or sup - v for the empty downset
      auto arrow = std::find(l->args.begin(), l->args.end(), "->");
      if (arrow == l->args.end() || arrow + 2 != l->args.end()) r.error(*l, "expected 'sup GENERATORS -> VALUE'");
      Mask gens = 0;
      for (auto it = l->args.begin(); it != arrow; ++it)
        if (*it != "-") gens |= bit(names(*l, *it));
      spec.entries.emplace_back(order.down_closure(gens), names(*l, *(arrow + 1)));
    }
    out.sup = std::move(spec);
  }
  return out;
}

FiniteBco parse_bco(const std::string& text, const std::string& source) {
  Reader r(text, source);
  r.only({"kind", "name", "elements", "leq", "fn"});
  check_kind(r, FileKind::Bco);
  const Names names(r, required(r, "elements"), "element");
  const Poset order = read_order(r, names);
  std::vector<PartialFn> fns;
  std::set<std::string> seen;
  for (const Line* l : r.all("fn")) {
    if (l->args.empty()) r.error(*l, "function needs a name");
    PartialFn f{l->args[0], std::vector<Elem>(names.size(), kUndefined)};
    if (!seen.insert(f.name).second) r.error(*l, "duplicate function '" + f.name + "'");
    for (std::size_t i = 1; i < l->args.size(); ++i) {
      const std::string& tok = l->args[i];
      const auto arrow = tok.find("->");
      if (arrow == std::string::npos) r.error(*l, "expected a->b, got '" + tok + "'");
      const Elem a = names(*l, tok.substr(0, arrow)), b = names(*l, tok.substr(arrow + 2));
      if (f.map[a] != kUndefined) r.error(*l, "two values for '" + tok.substr(0, arrow) + "'");
      f.map[a] = b;
    }
    fns.push_back(std::move(f));
  }
  try {
    FiniteBco B(names.names(), order, std::move(fns));
    B.subject = subject_of(r);
    return B;
  } catch (const std::invalid_argument& e) {
    r.error("fn", e.what());
  }
}

Aks parse_aks(const std::string& text, const std::string& source) {
  Reader r(text, source);
  r.only({"kind", "name", "terms", "stacks", "dot", "push", "kOf", "K", "S", "cc", "QP", "pole"});
  check_kind(r, FileKind::Aks);
  const Names terms(r, required(r, "terms"), "term");
  const Names stacks(r, required(r, "stacks"), "stack");
  const int nt = terms.size(), ns = stacks.size();
  Aks K;
  K.subject = subject_of(r);
  K.term_names = terms.names();
  K.stack_names = stacks.names();
  K.dot.assign(nt * nt, -1);
  K.push.assign(nt * ns, -1);
  K.kof.assign(ns, -1);
  K.pole.assign(nt, 0);
  for (const Line* l : r.all("dot")) {
    r.arity(*l, 3);
    int& slot = K.dot[terms(*l, l->args[0]) * nt + terms(*l, l->args[1])];
    if (slot >= 0) r.error(*l, "dot given twice");
    slot = terms(*l, l->args[2]);
  }
  for (const Line* l : r.all("push")) {
    r.arity(*l, 3);
    int& slot = K.push[terms(*l, l->args[0]) * ns + stacks(*l, l->args[1])];
    if (slot >= 0) r.error(*l, "push given twice");
    slot = stacks(*l, l->args[2]);
  }
  for (const Line* l : r.all("kOf")) {
    r.arity(*l, 2);
    int& slot = K.kof[stacks(*l, l->args[0])];
    if (slot >= 0) r.error(*l, "kOf given twice");
    slot = terms(*l, l->args[1]);
  }
  for (std::size_t i = 0; i < K.dot.size(); ++i)
    if (K.dot[i] < 0)
      r.error("dot", "missing " + terms.names()[i / nt] + " " + terms.names()[i % nt] + " (dot must be total)");
  for (std::size_t i = 0; i < K.push.size(); ++i)
    if (K.push[i] < 0)
      r.error("push", "missing " + terms.names()[i / ns] + " " + stacks.names()[i % ns] + " (push must be total)");
  for (int p = 0; p < ns; ++p)
    if (K.kof[p] < 0) r.error("kOf", "missing stack " + stacks.names()[p]);
  auto one = [&](const char* key) {
    const Line& l = required(r, key);
    r.arity(l, 1);
    return terms(l, l.args[0]);
  };
  K.K = one("K");
  K.S = one("S");
  K.cc = one("cc");
  const Line& qp = required(r, "QP");
  K.qp = terms.set(qp, qp.args);
  for (const Line* l : r.all("pole")) {
    r.arity(*l, 2);
    K.pole[terms(*l, l->args[0])] |= bit(stacks(*l, l->args[1]));
  }
  return K;
}

Map parse_map(const std::string& text, const std::string& source, const FiniteOpca& src,
              const FiniteOpca& dst) {
  Reader r(text, source);
  r.only({"kind", "name", "map"});
  check_kind(r, FileKind::Map);
  Map f(src.size(), kUndefined);
  for (const Line* l : r.all("map")) {
    r.arity(*l, 2);
    auto a = src.find(l->args[0]);
    auto b = dst.find(l->args[1]);
    if (!a) r.error(*l, "unknown source element '" + l->args[0] + "'");
    if (!b) r.error(*l, "unknown target element '" + l->args[1] + "'");
    if (f[*a] != kUndefined) r.error(*l, "two images for '" + l->args[0] + "'");
    f[*a] = *b;
  }
  for (Elem a = 0; a < src.size(); ++a)
    if (f[a] == kUndefined) r.error("map", "no image for '" + src.name(a) + "'");
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, "", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OpcaFile load_opca(const std::string& path) { return parse_opca(read_file(path), path); }
FiniteBco load_bco(const std::string& path) { return parse_bco(read_file(path), path); }
Aks load_aks(const std::string& path) { return parse_aks(read_file(path), path); }

PseudoDAlgebra pseudo_d_from(const FiniteOpca& A, const SupSpec& spec) {
  if (spec.join) return lattice_join_algebra(A);
  std::map<Mask, Elem> table(spec.entries.begin(), spec.entries.end());
  return make_pseudo_d(A, [&](Mask m) {
    auto it = table.find(m);
    if (it == table.end()) throw InputError("", 0, "sup", "no value for downset " + A.format_set(m));
    return it->second;
  });
}

std::string write_opca(const FiniteOpca& A) {
  std::ostringstream o;
  const int n = A.size();
  o << "kind opca\nname " << A.subject << "\nelements";
  for (const auto& s : A.names()) o << ' ' << s;
  o << '\n';
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && A.leq(a, b)) o << "leq " << A.name(a) << ' ' << A.name(b) << '\n';
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (A.defined(a, b)) o << "app " << A.name(a) << ' ' << A.name(b) << ' ' << A.name(A.apply(a, b)) << '\n';
  o << "k " << A.name(A.k()) << "\ns " << A.name(A.s()) << '\n';
  auto set = [&](const char* key, Mask m) {
    o << key;
    for_each_bit(m, [&](Elem e) { o << ' ' << A.name(e); });
    o << '\n';
  };
  if (A.filter) set("filter", *A.filter);
  if (A.U) set("U", *A.U);
  return o.str();
}

std::string write_aks(const Aks& K) {
  std::ostringstream o;
  const int nt = K.nterms(), ns = K.nstacks();
  o << "kind aks\nname " << K.subject << "\nterms";
  for (const auto& s : K.term_names) o << ' ' << s;
  o << "\nstacks";
  for (const auto& s : K.stack_names) o << ' ' << s;
  o << '\n';
  const auto& T = K.term_names;
  const auto& P = K.stack_names;
  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < nt; ++s) o << "dot " << T[t] << ' ' << T[s] << ' ' << T[K.app(t, s)] << '\n';
  for (int t = 0; t < nt; ++t)
    for (int p = 0; p < ns; ++p) o << "push " << T[t] << ' ' << P[p] << ' ' << P[K.push_(t, p)] << '\n';
  for (int p = 0; p < ns; ++p) o << "kOf " << P[p] << ' ' << T[K.kof[p]] << '\n';
  o << "K " << T[K.K] << "\nS " << T[K.S] << "\ncc " << T[K.cc] << "\nQP";
  for_each_bit(K.qp, [&](Elem t) { o << ' ' << T[t]; });
  o << '\n';
  for (int t = 0; t < nt; ++t)
    for_each_bit(K.pole[t], [&](Elem p) { o << "pole " << T[t] << ' ' << P[p] << '\n'; });
  return o.str();
}

}  // namespace pcalab
