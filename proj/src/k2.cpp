#include "pcalab/k2.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace pcalab::k2 {

namespace {

struct OutOfPrefix {
  const Element* owner;
};

class ProgramElement final : public Element {
 public:
  ProgramElement(Program p, std::string name) : p_(std::move(p)), name_(std::move(name)) {}
  Kind kind() const override { return Kind::Expression; }
  bool recursive() const override { return true; }
  std::string describe() const override { return name_.empty() ? "expr:" + p_.source : name_; }

 protected:
  Nat compute(const Nat& n, Fuel&) const override { return evaluate(p_, n); }

 private:
  Program p_;
  std::string name_;
};

class StreamElement final : public Element {
 public:
  StreamElement(std::function<Nat(const Nat&)> f, std::string name) : f_(std::move(f)), name_(std::move(name)) {}
  Kind kind() const override { return Kind::Stream; }
  bool recursive() const override { return false; }
  std::string describe() const override { return name_; }

 protected:
  Nat compute(const Nat& n, Fuel&) const override {
    {
      std::lock_guard<std::mutex> lock(m_);
      if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    }
    Nat v = f_(n);
    std::lock_guard<std::mutex> lock(m_);
    memo_.emplace(n, v);
    return v;
  }

 private:
  std::function<Nat(const Nat&)> f_;
  std::string name_;
  mutable std::mutex m_;
  mutable std::map<Nat, Nat> memo_;
};

// Finite part of an argument seen so far inside a basis combinator's value
// function. Queries beyond it ask the surrounding dialogue for more.
class PrefixElement final : public Element {
 public:
  explicit PrefixElement(Seq items) : items_(std::move(items)) {}
  Kind kind() const override { return Kind::Prefix; }
  bool recursive() const override { return false; }
  std::string describe() const override { return "prefix(" + std::to_string(items_.size()) + ")"; }

 protected:
  Nat compute(const Nat& n, Fuel&) const override {
    if (n >= items_.size()) throw OutOfPrefix{this};
    return items_[n.convert_to<std::size_t>()];
  }

 private:
  Seq items_;
};

class OpaqueElement final : public Element {
 public:
  explicit OpaqueElement(ElemPtr inner) : inner_(std::move(inner)) {}
  Kind kind() const override { return Kind::Opaque; }
  bool recursive() const override { return inner_->recursive(); }
  std::string describe() const override { return "opaque(" + inner_->describe() + ")"; }

 protected:
  Nat compute(const Nat& n, Fuel& fuel) const override { return inner_->value(n, fuel); }

 private:
  ElemPtr inner_;
};

enum class Comb { K, S };

std::size_t arity(Comb c) { return c == Comb::K ? 2 : 3; }
const char* comb_name(Comb c) { return c == Comb::K ? "k" : "s"; }

bool all_recursive(const std::vector<ElemPtr>& xs) {
  for (const auto& x : xs)
    if (!x->recursive()) return false;
  return true;
}

std::string describe_app(const char* head, const std::vector<ElemPtr>& args) {
  std::string s = head;
  for (const auto& a : args) s += " (" + a->describe() + ")";
  return s;
}

Nat apply_internal(const ElemPtr& a, const ElemPtr& b, const Nat& n, Fuel& fuel,
                   std::uint64_t* stage = nullptr);

// Fully applied combinator: k x y = x, s x y z = (x z)(y z).
class ResultElement final : public Element {
 public:
  ResultElement(Comb c, std::vector<ElemPtr> args) : c_(c), args_(std::move(args)) {}
  Kind kind() const override { return Kind::Result; }
  bool recursive() const override { return all_recursive(args_); }
  std::string describe() const override { return describe_app(comb_name(c_), args_); }

 protected:
  Nat compute(const Nat& n, Fuel& fuel) const override {
    if (c_ == Comb::K) return args_[0]->value(n, fuel);
    return apply_internal(app(args_[0], args_[2]), app(args_[1], args_[2]), n, fuel);
  }

 private:
  Comb c_;
  std::vector<ElemPtr> args_;
};

// Basis combinator with fewer arguments than its arity. Its value at a code
// [m, b(0), .., b(l-1)] is (this b)(m) + 1 when that is determined by the
// first l values of b, and 0 otherwise.
class NativeElement final : public Element {
 public:
  NativeElement(Comb c, std::vector<ElemPtr> args) : c_(c), args_(std::move(args)) {}
  Kind kind() const override { return Kind::Native; }
  bool recursive() const override { return all_recursive(args_); }
  std::string describe() const override { return describe_app(comb_name(c_), args_); }

  ElemPtr extend(const ElemPtr& b) const {
    std::vector<ElemPtr> next = args_;
    next.push_back(b);
    if (next.size() == arity(c_)) return std::make_shared<ResultElement>(c_, std::move(next));
    return std::make_shared<NativeElement>(c_, std::move(next));
  }

 protected:
  Nat compute(const Nat& code, Fuel& fuel) const override {
    auto d = decode(code);
    if (!d || d->empty()) return 0;
    const Nat m = d->front();
    auto oracle = std::make_shared<PrefixElement>(Seq(d->begin() + 1, d->end()));
    try {
      return extend(oracle)->value(m, fuel) + 1;
    } catch (const OutOfPrefix& e) {
      if (e.owner != oracle.get()) throw;
      return 0;
    }
  }

 private:
  Comb c_;
  std::vector<ElemPtr> args_;
};

class ApplicationElement final : public Element {
 public:
  ApplicationElement(ElemPtr a, ElemPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  Kind kind() const override { return Kind::Application; }
  bool recursive() const override { return a_->recursive() && b_->recursive(); }
  std::string describe() const override { return "(" + a_->describe() + ")(" + b_->describe() + ")"; }

 protected:
  Nat compute(const Nat& n, Fuel& fuel) const override { return apply_internal(a_, b_, n, fuel); }

 private:
  ElemPtr a_, b_;
};

// Literal dialogue: the first N with a([n, b(0..N-1)]) > 0.
Nat dialogue(const Element& a, const Element& b, const Nat& n, Fuel& fuel, std::uint64_t* stage) {
  Nat code = encode({n});
  for (std::uint64_t N = 0;; ++N) {
    if (N > 0) {
      const Nat w = b.value(N - 1, fuel) + 1;
      const unsigned L = boost::multiprecision::msb(w);
      code <<= 2 * L + 1;
      code |= w;
    }
    const Nat q = a.value(code, fuel);
    if (q > 0) {
      if (stage) *stage = N;
      return q - 1;
    }
  }
}

Nat apply_internal(const ElemPtr& a, const ElemPtr& b, const Nat& n, Fuel& fuel, std::uint64_t* stage) {
  if (a->kind() == Element::Kind::Native) return app(a, b)->value(n, fuel);
  return dialogue(*a, *b, n, fuel, stage);
}

}  // namespace

ElemPtr from_program(Program p, std::string name) {
  return std::make_shared<ProgramElement>(std::move(p), std::move(name));
}

ElemPtr from_expression(const std::string& text, std::string name) {
  return from_program(parse_program(text), std::move(name));
}

ElemPtr constant(const Nat& c) { return from_expression(c.str(), "const:" + c.str()); }

ElemPtr stream(std::function<Nat(const Nat&)> f, std::string name) {
  return std::make_shared<StreamElement>(std::move(f), std::move(name));
}

ElemPtr opaque(ElemPtr inner) { return std::make_shared<OpaqueElement>(std::move(inner)); }

const Basis& k2_basis() {
  static const Basis b{std::make_shared<NativeElement>(Comb::K, std::vector<ElemPtr>{}),
                       std::make_shared<NativeElement>(Comb::S, std::vector<ElemPtr>{})};
  return b;
}

ElemPtr k2_skk() {
  const Basis& b = k2_basis();
  return app(app(b.s, b.k), b.k);
}

ElemPtr app(const ElemPtr& a, const ElemPtr& b) {
  if (a->kind() == Element::Kind::Native) return static_cast<const NativeElement&>(*a).extend(b);
  return std::make_shared<ApplicationElement>(a, b);
}

Answer k2_apply(const ElemPtr& a, const ElemPtr& b, const Nat& n, std::uint64_t budget) {
  Fuel fuel(budget);
  Answer out;
  std::uint64_t stage = 0;
  try {
    out.value = apply_internal(a, b, n, fuel, &stage);
    if (a->kind() != Element::Kind::Native) out.stage = stage;
  } catch (const OutOfFuel&) {
  }
  out.fuel_used = fuel.used();
  return out;
}

Answer k2_value(const ElemPtr& a, const Nat& n, std::uint64_t budget) {
  Fuel fuel(budget);
  Answer out;
  try {
    out.value = a->value(n, fuel);
  } catch (const OutOfFuel&) {
  }
  out.fuel_used = fuel.used();
  return out;
}

std::optional<bool> basic_open_contains(const Seq& sigma, const ElemPtr& alpha, std::uint64_t budget) {
  Fuel fuel(budget);
  try {
    for (std::size_t i = 0; i < sigma.size(); ++i)
      if (alpha->value(i, fuel) != sigma[i]) return false;
  } catch (const OutOfFuel&) {
    return std::nullopt;
  }
  return true;
}

DiscreteResult is_discrete(const std::vector<ElemPtr>& U, std::size_t depth, std::uint64_t budget) {
  DiscreteResult r;
  Fuel fuel(budget);
  std::vector<Seq> vals(U.size());
  try {
    for (std::size_t i = 0; i < U.size(); ++i)
      for (std::size_t p = 0; p < depth; ++p) vals[i].push_back(U[i]->value(p, fuel));
  } catch (const OutOfFuel&) {
    r.exhausted = true;
    return r;
  }
  // first position where i and j differ, depth when they agree throughout
  auto split = [&](std::size_t i, std::size_t j) {
    std::size_t p = 0;
    while (p < depth && vals[i][p] == vals[j][p]) ++p;
    return p;
  };
  r.discrete = true;
  for (std::size_t i = 0; i < U.size(); ++i) {
    std::size_t need = 0;
    for (std::size_t j = 0; j < U.size(); ++j) {
      if (i == j) continue;
      const std::size_t p = split(i, j);
      if (p == depth) {
        r.discrete = false;
        if (!r.clash) r.clash = std::make_pair(i, j);
      } else {
        need = std::max(need, p + 1);
      }
    }
    r.prefix_len.push_back(need);
    r.prefixes.emplace_back(vals[i].begin(), vals[i].begin() + std::min(need, depth));
  }
  return r;
}

Answer tau_extract(const ElemPtr& alpha, const Seq& prefix, std::size_t nprime, const Nat& j,
                   std::uint64_t budget) {
  if (prefix.size() != nprime + 1) throw std::invalid_argument("prefix must hold pi(0..N')");
  Fuel fuel(budget);
  Answer out;
  try {
    Seq q{j};
    for (std::size_t k = 0; k <= prefix.size(); ++k) {
      if (k > 0) q.push_back(prefix[k - 1]);
      const Nat v = alpha->value(encode(q), fuel);
      if (v > 0) {
        out.value = v - 1;
        out.stage = k;
        break;
      }
    }
    // extensions (n0..nm), shortest first, lexicographic, items < budget
    for (std::size_t len = 1; !out.value; ++len) {
      Seq ext(len, 0);
      for (;;) {
        Seq full = q;
        full.insert(full.end(), ext.begin(), ext.end());
        const Nat v = alpha->value(encode(full), fuel);
        if (v > 0) {
          out.value = v - 1;
          out.stage = prefix.size() + 1 + len;
          break;
        }
        std::size_t i = len;
        while (i > 0 && ext[i - 1] + 1 >= budget) ext[--i] = 0;
        if (i == 0) break;
        ext[i - 1] += 1;
      }
    }
  } catch (const OutOfFuel&) {
  }
  out.fuel_used = fuel.used();
  return out;
}

}  // namespace pcalab::k2
