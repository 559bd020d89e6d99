#include "pcalab/term.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "pcalab/opca.hpp"

namespace pcalab {

namespace {

const TermPtr& k_leaf() {
  static const TermPtr t = std::make_shared<const Term>(Term{Term::Kind::K, "K", kUndefined, nullptr, nullptr});
  return t;
}

const TermPtr& s_leaf() {
  static const TermPtr t = std::make_shared<const Term>(Term{Term::Kind::S, "S", kUndefined, nullptr, nullptr});
  return t;
}

}  // namespace

TermPtr var(std::string name) {
  return std::make_shared<const Term>(Term{Term::Kind::Var, std::move(name), kUndefined, nullptr, nullptr});
}
TermPtr K() { return k_leaf(); }
TermPtr S() { return s_leaf(); }
TermPtr cst(Elem e, std::string label) {
  return std::make_shared<const Term>(Term{Term::Kind::Const, std::move(label), e, nullptr, nullptr});
}
TermPtr app(TermPtr f, TermPtr a) {
  return std::make_shared<const Term>(
      Term{Term::Kind::App, {}, kUndefined, std::move(f), std::move(a)});
}

bool occurs_free(const TermPtr& t, std::string_view x) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name == x;
    case Term::Kind::App:
      return occurs_free(t->fun, x) || occurs_free(t->arg, x);
    default:
      return false;
  }
}

namespace {
void collect_vars(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == Term::Kind::Var) out.insert(t->name);
  if (t->kind == Term::Kind::App) {
    collect_vars(t->fun, out);
    collect_vars(t->arg, out);
  }
}
}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

bool is_closed(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return false;
    case Term::Kind::App:
      return is_closed(t->fun) && is_closed(t->arg);
    default:
      return true;
  }
}

std::size_t term_size(const TermPtr& t) {
  if (t->kind != Term::Kind::App) return 1;
  return 1 + term_size(t->fun) + term_size(t->arg);
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var:
      return a->name == b->name;
    case Term::Kind::Const:
      return a->elem == b->elem;
    case Term::Kind::App:
      return equal(a->fun, b->fun) && equal(a->arg, b->arg);
    default:
      return true;
  }
}

TermPtr substitute(const TermPtr& t, std::string_view x, const TermPtr& value) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name == x ? value : t;
    case Term::Kind::App: {
      TermPtr f = substitute(t->fun, x, value);
      TermPtr a = substitute(t->arg, x, value);
      if (f == t->fun && a == t->arg) return t;
      return app(std::move(f), std::move(a));
    }
    default:
      return t;
  }
}

TermPtr bracket_abstract(std::string_view x, const TermPtr& body) {
  if (body->kind == Term::Kind::Var && body->name == x) return app(S(), K(), K());
  if (!occurs_free(body, x)) return app(K(), body);
  return app(S(), bracket_abstract(x, body->fun), bracket_abstract(x, body->arg));
}

TermPtr abstract(std::initializer_list<std::string_view> xs, const TermPtr& body) {
  TermPtr t = body;
  for (auto it = std::rbegin(xs); it != std::rend(xs); ++it) t = bracket_abstract(*it, t);
  return t;
}

TermPtr abstract(const std::vector<std::string>& xs, const TermPtr& body) {
  TermPtr t = body;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) t = bracket_abstract(*it, t);
  return t;
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

struct Fuel {
  std::uint64_t limit;
  std::uint64_t used = 0;
  bool out = false;

  bool spend() {
    if (used >= limit) {
      out = true;
      return false;
    }
    ++used;
    return true;
  }
};

TermPtr rebuild(TermPtr head, const std::vector<TermPtr>& args, std::size_t from) {
  for (std::size_t i = from; i < args.size(); ++i) head = app(std::move(head), args[i]);
  return head;
}

// Contracts head redexes until the head is stable. On return `args` holds the
// spine arguments (leftmost first) and the returned term is the head.
TermPtr head_reduce(TermPtr t, std::vector<TermPtr>& args, Fuel& fuel) {
  args.clear();
  while (true) {
    while (t->kind == Term::Kind::App) {
      args.push_back(t->arg);
      t = t->fun;
    }
    std::reverse(args.begin(), args.end());
    if (t->kind == Term::Kind::K && args.size() >= 2) {
      if (!fuel.spend()) return t;
      TermPtr next = rebuild(args[0], args, 2);
      t = std::move(next);
    } else if (t->kind == Term::Kind::S && args.size() >= 3) {
      if (!fuel.spend()) return t;
      TermPtr next = rebuild(app(app(args[0], args[2]), app(args[1], args[2])), args, 3);
      t = std::move(next);
    } else {
      return t;
    }
    args.clear();
  }
}

TermPtr reduce_rec(const TermPtr& t, Fuel& fuel, bool enter_partial) {
  std::vector<TermPtr> args;
  TermPtr head = head_reduce(t, args, fuel);
  if (fuel.out) return head;
  const bool stuck_head = head->kind == Term::Kind::Const || head->kind == Term::Kind::Var;
  if (!stuck_head && !enter_partial) return rebuild(head, args, 0);
  for (auto& a : args) {
    a = reduce_rec(a, fuel, enter_partial);
    if (fuel.out) return head;
  }
  return rebuild(head, args, 0);
}

}  // namespace

Reduction reduce(const TermPtr& t, std::uint64_t fuel) {
  Fuel f{fuel};
  TermPtr r = reduce_rec(t, f, false);
  return {f.out ? nullptr : r, f.out, f.used};
}

Reduction normalize(const TermPtr& t, std::uint64_t fuel) {
  Fuel f{fuel};
  TermPtr r = reduce_rec(t, f, true);
  return {f.out ? nullptr : r, f.out, f.used};
}

// ---------------------------------------------------------------------------
// Evaluation in a finite opca

namespace {

struct Evaluator {
  const Environment& env;
  const FiniteOpca& A;
  std::unordered_map<const Term*, Elem> memo;

  Elem run(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::K:
        return A.k();
      case Term::Kind::S:
        return A.s();
      case Term::Kind::Const:
        if (t->elem < 0 || t->elem >= A.size())
          throw std::invalid_argument("constant outside carrier: " + std::to_string(t->elem));
        return t->elem;
      case Term::Kind::Var: {
        auto it = env.find(t->name);
        if (it == env.end()) throw std::invalid_argument("unbound variable: " + t->name);
        if (it->second < 0 || it->second >= A.size())
          throw std::invalid_argument("variable bound outside carrier: " + t->name);
        return it->second;
      }
      case Term::Kind::App:
        break;
    }
    if (auto it = memo.find(t.get()); it != memo.end()) return it->second;
    const Elem f = run(t->fun);
    Elem r = kUndefined;
    if (f != kUndefined) {
      const Elem a = run(t->arg);
      if (a != kUndefined) r = A.apply(f, a);
    }
    memo.emplace(t.get(), r);
    return r;
  }
};

}  // namespace

std::optional<Elem> eval_in_opca(const TermPtr& t, const Environment& env, const FiniteOpca& A) {
  Evaluator ev{env, A, {}};
  const Elem r = ev.run(t);
  if (r == kUndefined) return std::nullopt;
  return r;
}

std::optional<Elem> eval_in_opca(const TermPtr& t, const FiniteOpca& A) {
  static const Environment empty;
  return eval_in_opca(t, empty, A);
}

// ---------------------------------------------------------------------------
// Printing and parsing

namespace {

void print(const TermPtr& t, const ConstNamer& namer, std::string& out, bool as_arg) {
  switch (t->kind) {
    case Term::Kind::K:
      out += "K";
      return;
    case Term::Kind::S:
      out += "S";
      return;
    case Term::Kind::Var:
      out += t->name;
      return;
    case Term::Kind::Const:
      if (namer)
        out += namer(t->elem);
      else if (!t->name.empty())
        out += t->name;
      else
        out += "#" + std::to_string(t->elem);
      return;
    case Term::Kind::App:
      if (as_arg) out += "(";
      print(t->fun, namer, out, false);
      out += " ";
      print(t->arg, namer, out, true);
      if (as_arg) out += ")";
      return;
  }
}

class Parser {
 public:
  Parser(std::string_view src, const ConstResolver& resolve) : src_(src), resolve_(resolve) {}

  TermPtr parse() {
    TermPtr t = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("term syntax error at column " + std::to_string(pos_ + 1) + ": " +
                                what);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  bool at_lambda() {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '\\') return true;
    return src_.substr(pos_, 2) == "\xCE\xBB";  // UTF-8 lambda
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    if (start == pos_) fail("identifier expected");
    return std::string(src_.substr(start, pos_ - start));
  }

  TermPtr expr() {
    if (at_lambda()) return lambda();
    TermPtr t = atom();
    while (true) {
      skip_ws();
      if (pos_ >= src_.size() || src_[pos_] == ')') return t;
      if (at_lambda()) return app(t, lambda());
      t = app(t, atom());
    }
  }

  TermPtr lambda() {
    pos_ += src_[pos_] == '\\' ? 1 : 2;
    std::vector<std::string> binders;
    while (true) {
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '.') break;
      std::string x = ident();
      if (x == "K" || x == "S") fail("K and S cannot be bound");
      binders.push_back(std::move(x));
    }
    if (binders.empty()) fail("lambda without binder");
    ++pos_;
    bound_.insert(bound_.end(), binders.begin(), binders.end());
    TermPtr body = expr();
    bound_.resize(bound_.size() - binders.size());
    return abstract(binders, body);
  }

  TermPtr atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("term expected");
    if (src_[pos_] == '(') {
      ++pos_;
      TermPtr t = expr();
      skip_ws();
      if (pos_ >= src_.size() || src_[pos_] != ')') fail("')' expected");
      ++pos_;
      return t;
    }
    std::string x = ident();
    if (x == "K") return K();
    if (x == "S") return S();
    for (const auto& b : bound_)
      if (b == x) return var(x);
    if (resolve_) {
      if (auto e = resolve_(x)) return cst(*e, x);
    }
    return var(x);
  }

  std::string_view src_;
  const ConstResolver& resolve_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

std::string to_string(const TermPtr& t, const ConstNamer& namer) {
  std::string out;
  print(t, namer, out, false);
  return out;
}

TermPtr parse_term(std::string_view src, const ConstResolver& resolve) {
  return Parser(src, resolve).parse();
}

}  // namespace pcalab
