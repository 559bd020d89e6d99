#include "pcalab/k2_expr.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "pcalab/error.hpp"

namespace pcalab::k2 {

namespace {

struct Builtin {
  const char* name;
  std::size_t arity;
};

constexpr Builtin kBuiltins[] = {{"len", 1}, {"at", 2}, {"valid", 1}, {"min", 2}, {"max", 2}};

const Builtin* find_builtin(const std::string& n) {
  for (const auto& b : kBuiltins)
    if (n == b.name) return &b;
  return nullptr;
}

class Parser {
 public:
  Parser(const std::string& text, const std::string& source) : s_(text), source_(source) {}

  Program run() {
    Program p;
    p.source = s_;
    while (peek_word("def")) {
      word("def");
      Definition d;
      d.name = ident();
      if (find_builtin(d.name) || d.name == "x" || defined_.count(d.name))
        error("name '" + d.name + "' is already taken");
      expect("(");
      d.param = ident();
      expect(")");
      expect("=");
      scope_ = {d.param};
      d.body = expr();
      expect(";");
      defined_[d.name] = 1;
      p.defs.push_back(std::move(d));
    }
    scope_ = {"x"};
    p.main = expr();
    skip();
    if (i_ != s_.size()) error("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    throw InputError(source_, 0, "column " + std::to_string(i_ + 1), what);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(const std::string& t) {
    skip();
    return s_.compare(i_, t.size(), t) == 0;
  }
  bool accept(const std::string& t) {
    if (!peek(t)) return false;
    i_ += t.size();
    return true;
  }
  void expect(const std::string& t) {
    if (!accept(t)) error("expected '" + t + "'");
  }
  bool peek_word(const std::string& w) {
    skip();
    if (s_.compare(i_, w.size(), w) != 0) return false;
    const std::size_t j = i_ + w.size();
    return j >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_');
  }
  void word(const std::string& w) {
    if (!peek_word(w)) error("expected '" + w + "'");
    i_ += w.size();
  }
  std::string ident() {
    skip();
    const std::size_t b = i_;
    if (i_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      error("expected a name");
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return s_.substr(b, i_ - b);
  }

  static ExprPtr node(Expr::Op op, std::vector<ExprPtr> args, std::string name = {}) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->args = std::move(args);
    e->name = std::move(name);
    return e;
  }

  ExprPtr expr() {
    if (peek_word("if")) {
      word("if");
      auto c = expr();
      word("then");
      auto a = expr();
      word("else");
      auto b = expr();
      return node(Expr::Op::If, {c, a, b});
    }
    if (peek_word("mu")) {
      word("mu");
      const std::string y = ident();
      expect("<");
      auto bound = expr();
      expect(".");
      scope_.push_back(y);
      auto body = expr();
      scope_.pop_back();
      return node(Expr::Op::Mu, {bound, body}, y);
    }
    return disj();
  }
  ExprPtr disj() {
    auto e = conj();
    while (accept("||")) e = node(Expr::Op::Or, {e, conj()});
    return e;
  }
  ExprPtr conj() {
    auto e = cmp();
    while (accept("&&")) e = node(Expr::Op::And, {e, cmp()});
    return e;
  }
  ExprPtr cmp() {
    auto e = sum();
    static const std::pair<const char*, Expr::Op> ops[] = {
        {"==", Expr::Op::Eq}, {"!=", Expr::Op::Ne}, {"<=", Expr::Op::Le},
        {">=", Expr::Op::Ge}, {"<", Expr::Op::Lt},  {">", Expr::Op::Gt}};
    for (auto [t, op] : ops)
      if (accept(t)) return node(op, {e, sum()});
    return e;
  }
  ExprPtr sum() {
    auto e = product();
    for (;;) {
      if (accept("+"))
        e = node(Expr::Op::Add, {e, product()});
      else if (accept("-"))
        e = node(Expr::Op::Monus, {e, product()});
      else
        return e;
    }
  }
  ExprPtr product() {
    auto e = unary();
    for (;;) {
      if (accept("*"))
        e = node(Expr::Op::Mul, {e, unary()});
      else if (accept("/"))
        e = node(Expr::Op::Div, {e, unary()});
      else if (accept("%"))
        e = node(Expr::Op::Mod, {e, unary()});
      else
        return e;
    }
  }
  ExprPtr unary() {
    if (peek("!") && !peek("!=")) {
      accept("!");
      return node(Expr::Op::Not, {unary()});
    }
    return primary();
  }
  ExprPtr primary() {
    skip();
    if (accept("(")) {
      auto e = expr();
      expect(")");
      return e;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      const std::size_t b = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto e = std::make_shared<Expr>();
      e->num = Nat(s_.substr(b, i_ - b));
      return e;
    }
    const std::size_t at = i_;
    const std::string n = ident();
    if (accept("(")) {
      std::vector<ExprPtr> args;
      if (!accept(")")) {
        do args.push_back(expr());
        while (accept(","));
        expect(")");
      }
      std::size_t arity = 1;
      if (auto b = find_builtin(n))
        arity = b->arity;
      else if (!defined_.count(n)) {
        i_ = at;
        error("unknown function '" + n + "'");
      }
      if (args.size() != arity) {
        i_ = at;
        error("'" + n + "' takes " + std::to_string(arity) + " argument(s)");
      }
      return node(Expr::Op::Call, std::move(args), n);
    }
    for (const auto& v : scope_)
      if (v == n) return node(Expr::Op::Var, {}, n);
    i_ = at;
    error("unbound variable '" + n + "'");
  }

  const std::string& s_;
  std::string source_;
  std::size_t i_ = 0;
  std::vector<std::string> scope_;
  std::map<std::string, int> defined_;
};

class Evaluator {
 public:
  explicit Evaluator(const Program& p) : p_(p) {
    for (const auto& d : p.defs) defs_[d.name] = &d;
  }

  Nat eval(const ExprPtr& e, std::vector<std::pair<std::string, Nat>>& env) {
    if (++steps_ > kStepCap) throw std::runtime_error("expression evaluation exceeded the step cap");
    using Op = Expr::Op;
    auto a = [&](std::size_t i) { return eval(e->args[i], env); };
    auto truth = [](bool b) { return Nat(b ? 1 : 0); };
    switch (e->op) {
      case Op::Num: return e->num;
      case Op::Var:
        for (auto it = env.rbegin(); it != env.rend(); ++it)
          if (it->first == e->name) return it->second;
        throw std::logic_error("unbound variable " + e->name);
      case Op::Add: return a(0) + a(1);
      case Op::Monus: {
        Nat x = a(0), y = a(1);
        return x > y ? Nat(x - y) : Nat(0);
      }
      case Op::Mul: return a(0) * a(1);
      case Op::Div: {
        Nat x = a(0), y = a(1);
        return y == 0 ? Nat(0) : Nat(x / y);
      }
      case Op::Mod: {
        Nat x = a(0), y = a(1);
        return y == 0 ? Nat(0) : Nat(x % y);
      }
      case Op::Eq: return truth(a(0) == a(1));
      case Op::Ne: return truth(a(0) != a(1));
      case Op::Lt: return truth(a(0) < a(1));
      case Op::Le: return truth(a(0) <= a(1));
      case Op::Gt: return truth(a(0) > a(1));
      case Op::Ge: return truth(a(0) >= a(1));
      case Op::And: return truth(a(0) != 0 && a(1) != 0);
      case Op::Or: return truth(a(0) != 0 || a(1) != 0);
      case Op::Not: return truth(a(0) == 0);
      case Op::If: return a(0) != 0 ? a(1) : a(2);
      case Op::Mu: {
        const Nat bound = a(0);
        if (bound > kMuCap) throw std::runtime_error("mu bound " + bound.str() + " exceeds the cap");
        const auto n = bound.convert_to<std::uint64_t>();
        for (std::uint64_t y = 0; y < n; ++y) {
          env.emplace_back(e->name, Nat(y));
          const bool hit = eval(e->args[1], env) != 0;
          env.pop_back();
          if (hit) return Nat(y);
        }
        return bound;
      }
      case Op::Call: return call(e, env);
    }
    throw std::logic_error("bad expression node");
  }

 private:
  Nat call(const ExprPtr& e, std::vector<std::pair<std::string, Nat>>& env) {
    std::vector<Nat> v;
    for (const auto& x : e->args) v.push_back(eval(x, env));
    const std::string& n = e->name;
    if (n == "len") return Nat(code_length(v[0]));
    if (n == "valid") return Nat(decode(v[0]) ? 1 : 0);
    if (n == "at") {
      auto d = decode(v[0]);
      if (!d || v[1] >= d->size()) return Nat(0);
      return (*d)[v[1].convert_to<std::size_t>()];
    }
    if (n == "min") return v[0] < v[1] ? v[0] : v[1];
    if (n == "max") return v[0] < v[1] ? v[1] : v[0];
    const Definition* d = defs_.at(n);
    std::vector<std::pair<std::string, Nat>> inner{{d->param, v[0]}};
    return eval(d->body, inner);
  }

  const Program& p_;
  std::map<std::string, const Definition*> defs_;
  std::uint64_t steps_ = 0;
};

}  // namespace

Program parse_program(const std::string& text, const std::string& source) {
  return Parser(text, source).run();
}

Nat evaluate(const Program& p, const Nat& x) {
  Evaluator ev(p);
  std::vector<std::pair<std::string, Nat>> env{{"x", x}};
  return ev.eval(p.main, env);
}

}  // namespace pcalab::k2
