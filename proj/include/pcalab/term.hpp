#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pcalab {

/// Index of an element in a finite carrier.
using Elem = int;
inline constexpr Elem kUndefined = -1;

class FiniteOpca;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Applicative term over K, S, constants and variables. Immutable; subterms
/// are shared freely.
struct Term {
  enum class Kind { Var, K, S, Const, App };

  Kind kind;
  std::string name;  // variable name, or display label of a constant
  Elem elem = kUndefined;
  TermPtr fun;
  TermPtr arg;
};

TermPtr var(std::string name);
TermPtr K();
TermPtr S();
TermPtr cst(Elem e, std::string label = {});
TermPtr app(TermPtr f, TermPtr a);

template <class... Rest>
TermPtr app(TermPtr f, TermPtr a, TermPtr b, Rest... rest) {
  return app(app(std::move(f), std::move(a)), std::move(b), std::move(rest)...);
}

bool occurs_free(const TermPtr& t, std::string_view x);
std::set<std::string> free_vars(const TermPtr& t);
bool is_closed(const TermPtr& t);
std::size_t term_size(const TermPtr& t);

/// Structural equality (constants compare by element handle).
bool equal(const TermPtr& a, const TermPtr& b);

TermPtr substitute(const TermPtr& t, std::string_view x, const TermPtr& value);

/// <x>M with the three classic clauses: <x>x = SKK, <x>M = KM when x is not
/// free in M, <x>(MN) = S(<x>M)(<x>N).
TermPtr bracket_abstract(std::string_view x, const TermPtr& body);

/// <x1 ... xn>M = <x1>(<x2>(...(<xn>M))).
TermPtr abstract(std::initializer_list<std::string_view> xs, const TermPtr& body);
TermPtr abstract(const std::vector<std::string>& xs, const TermPtr& body);

struct Reduction {
  TermPtr term;  // last term reached; meaningful only when !diverged
  bool diverged = false;
  std::uint64_t steps = 0;
};

/// Leftmost-outermost weak reduction. Contracts head redexes until the head
/// is stable; partial K/S applications are values and are not entered, while
/// the arguments of a constant- or variable-headed spine are reduced left to
/// right. Each contraction costs one unit of fuel.
Reduction reduce(const TermPtr& t, std::uint64_t fuel);

/// Like reduce, but also reduces inside partial K/S applications, giving the
/// weak normal form. Normal order, so it finds the normal form whenever one
/// exists and the fuel suffices.
Reduction normalize(const TermPtr& t, std::uint64_t fuel);

using Environment = std::map<std::string, Elem, std::less<>>;

/// Bottom-up evaluation in a finite opca. Returns nullopt when some
/// application is undefined. Throws std::invalid_argument for unbound
/// variables or constants outside the carrier.
std::optional<Elem> eval_in_opca(const TermPtr& t, const Environment& env, const FiniteOpca& A);
std::optional<Elem> eval_in_opca(const TermPtr& t, const FiniteOpca& A);

using ConstNamer = std::function<std::string(Elem)>;
std::string to_string(const TermPtr& t, const ConstNamer& namer = {});

/// Resolves a free identifier to a constant; nullopt keeps it a variable.
using ConstResolver = std::function<std::optional<Elem>(std::string_view)>;

/// Parses `K`, `S`, identifiers, left-associative juxtaposition, parentheses
/// and `\x y. M` (compiled with bracket_abstract). Throws std::invalid_argument
/// with the offending column on syntax errors.
TermPtr parse_term(std::string_view src, const ConstResolver& resolve = {});

}  // namespace pcalab
