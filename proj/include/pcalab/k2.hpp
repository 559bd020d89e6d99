#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcalab/k2_expr.hpp"
#include "pcalab/k2_nat.hpp"

namespace pcalab::k2 {

/// Thrown when a computation has used up its query budget.
struct OutOfFuel {};

/// Query budget shared by every nested evaluation of one request.
class Fuel {
 public:
  explicit Fuel(std::uint64_t budget) : budget_(budget), left_(budget) {}
  void take() {
    if (left_ == 0) throw OutOfFuel{};
    --left_;
  }
  std::uint64_t used() const { return budget_ - left_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_, left_;
};

class Element;
using ElemPtr = std::shared_ptr<const Element>;

/// A function N -> N. Every query of `value` costs one unit of fuel.
class Element {
 public:
  enum class Kind { Expression, Stream, Native, Result, Application, Prefix, Opaque };
  virtual ~Element() = default;
  virtual Kind kind() const = 0;
  /// Set exactly for elements built from the expression language or from
  /// recursive parts by the basis combinators.
  virtual bool recursive() const = 0;
  virtual std::string describe() const = 0;
  Nat value(const Nat& n, Fuel& fuel) const {
    fuel.take();
    return compute(n, fuel);
  }

 protected:
  virtual Nat compute(const Nat& n, Fuel& fuel) const = 0;
};

ElemPtr from_program(Program p, std::string name = {});
/// Parses `text` with parse_program.
ElemPtr from_expression(const std::string& text, std::string name = {});
ElemPtr constant(const Nat& c);
/// Memoized, untagged.
ElemPtr stream(std::function<Nat(const Nat&)> f, std::string name);
/// Same values as `inner` but always applied through the literal dialogue.
ElemPtr opaque(ElemPtr inner);

struct Basis {
  ElemPtr k, s;
};
const Basis& k2_basis();
/// s k k, built symbolically.
ElemPtr k2_skk();

/// The element a·b: symbolic when `a` is a basis combinator or a partial
/// application of one, the literal dialogue otherwise.
ElemPtr app(const ElemPtr& a, const ElemPtr& b);

struct Answer {
  std::optional<Nat> value;  // nullopt: undefined at this fuel
  std::uint64_t fuel_used = 0;
  /// Dialogue length N at which a literal application answered.
  std::optional<std::uint64_t> stage;
};

/// (a b)(n) with the given query budget.
Answer k2_apply(const ElemPtr& a, const ElemPtr& b, const Nat& n, std::uint64_t fuel);
/// a(n) with the given query budget.
Answer k2_value(const ElemPtr& a, const Nat& n, std::uint64_t fuel);

/// alpha(i) = sigma_i for i < |sigma|; nullopt when fuel runs out.
std::optional<bool> basic_open_contains(const Seq& sigma, const ElemPtr& alpha,
                                        std::uint64_t fuel = 100'000);

struct DiscreteResult {
  bool discrete = false;
  bool exhausted = false;               // some value undefined at fuel
  std::vector<std::size_t> prefix_len;  // isolating prefix length per element
  std::vector<Seq> prefixes;
  std::optional<std::pair<std::size_t, std::size_t>> clash;  // agree up to depth
};

/// For each element, the shortest prefix (length <= depth) whose basic open
/// contains no other member of `U`.
DiscreteResult is_discrete(const std::vector<ElemPtr>& U, std::size_t depth,
                           std::uint64_t fuel = 100'000);

/// Reads tau(j) from alpha and a prefix pi(0..N'): first alpha([j]) and
/// alpha([j, pi(0..k)]) for k <= N', then extensions of the full prefix in
/// order of length, lexicographic within a length, items below the fuel
/// budget. Returns the first positive answer minus one.
Answer tau_extract(const ElemPtr& alpha, const Seq& prefix, std::size_t nprime, const Nat& j,
                   std::uint64_t fuel);

}  // namespace pcalab::k2
