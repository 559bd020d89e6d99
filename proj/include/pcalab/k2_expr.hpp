#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pcalab/k2_nat.hpp"

namespace pcalab::k2 {

/// Total first-order language over the naturals; see docs/k2-expressions.md.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op {
    Num, Var, Add, Monus, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or, Not, If, Mu, Call
  };
  Op op = Op::Num;
  Nat num;
  std::string name;  // variable, bound variable of mu, or callee
  std::vector<ExprPtr> args;
};

struct Definition {
  std::string name, param;
  ExprPtr body;
};

/// Definitions may only call builtins and earlier definitions, so every
/// program terminates.
struct Program {
  std::vector<Definition> defs;
  ExprPtr main;  // free variable x
  std::string source;
};

inline constexpr std::uint64_t kMuCap = 1'000'000;
inline constexpr std::uint64_t kStepCap = 50'000'000;

/// Throws InputError naming the column on syntax and scope errors.
Program parse_program(const std::string& text, const std::string& source = "<expr>");

/// Evaluates main at x. Throws std::runtime_error when a mu bound exceeds
/// kMuCap or evaluation takes more than kStepCap steps.
Nat evaluate(const Program& p, const Nat& x);

}  // namespace pcalab::k2
