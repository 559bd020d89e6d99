#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcalab/opca.hpp"
#include "pcalab/poset.hpp"
#include "pcalab/report.hpp"

namespace pcalab {

/// Partial endofunction on a finite carrier; kUndefined marks points outside
/// the domain.
struct PartialFn {
  std::string name;
  std::vector<Elem> map;

  bool defined(Elem a) const { return map[a] != kUndefined; }
  Elem operator()(Elem a) const { return map[a]; }
  Mask domain() const;
  bool total() const;
};

/// Poset with a finite set of partial endofunctions.
class FiniteBco {
 public:
  FiniteBco() = default;
  FiniteBco(std::vector<std::string> names, Poset order, std::vector<PartialFn> fns);

  int size() const { return order_.size(); }
  const Poset& order() const { return order_; }
  bool leq(Elem a, Elem b) const { return order_.leq(a, b); }
  const std::vector<PartialFn>& fns() const { return fns_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem e) const { return names_[e]; }
  std::optional<Elem> find(std::string_view name) const;

  std::string subject;

 private:
  std::vector<std::string> names_;
  Poset order_;
  std::vector<PartialFn> fns_;
};

/// Total map between carriers.
using Map = std::vector<Elem>;

/// Clauses (i) domains and monotonicity, (ii) a total sub-identity,
/// (iii) composition up to <=, each searched exhaustively.
Reports check_bco(const FiniteBco& B);

/// Index of the first total f with f(a) <= a everywhere.
std::optional<std::size_t> sub_identity(const FiniteBco& B);

/// The BCO of a filtered opca: one function b -> a·b per filter element a,
/// named after a.
FiniteBco bco_view(const FiniteOpca& A);

/// u with u(phi a) <= phi a' for every a <= a' (u defined on the image).
std::optional<std::size_t> order_witness(const FiniteBco& src, const FiniteBco& dst, const Map& phi);
/// g with g(phi a) <= phi(f a) wherever f a is defined.
std::optional<std::size_t> tracker(const FiniteBco& src, const FiniteBco& dst, const Map& phi,
                                   std::size_t f);
Reports check_bco_morphism(const FiniteBco& src, const FiniteBco& dst, const Map& phi);
bool is_bco_morphism(const FiniteBco& src, const FiniteBco& dst, const Map& phi);
/// g in F of `dst` with g(phi a) <= psi a for all a.
std::optional<std::size_t> morphism_leq(const FiniteBco& dst, const Map& phi, const Map& psi);

/// D(Sigma): downsets ordered by inclusion, with F U = down-closure of f[U]
/// defined iff U lies in dom f. `unit` sends a to its principal downset;
/// `mult` sends each downset of D(Sigma) (listed in `outer`) to its union.
struct DownsetMonad {
  FiniteBco D;
  std::vector<Mask> sets;   // element i of D is sets[i]
  Map unit;                 // Sigma -> D
  std::vector<Mask> outer;  // downsets of D, as masks over D's carrier
  std::vector<Elem> mult;   // outer[j] -> index into sets
  std::optional<Elem> index_of(Mask downset) const;
};

DownsetMonad downset_monad(const FiniteBco& B, std::size_t cap = kDefaultDownsetCap);

/// D(A, A') as a filtered opca: a downset product is the down-closure of all
/// products, defined iff each of them is; k and s are principal downsets; the
/// filter holds the downsets meeting A'. Element i is `sets[i]`.
struct DownsetOpca {
  FiniteOpca D;
  std::vector<Mask> sets;
  std::optional<Elem> index_of(Mask downset) const;
};

DownsetOpca downset_opca(const FiniteOpca& A, std::size_t cap = kDefaultDownsetCap);

/// Internal top and binary meet with their adjunction witnesses.
struct InternalMeets {
  Elem top = kUndefined;
  std::size_t top_witness = 0;  // total g with g(a) <= top
  std::vector<Elem> meet;       // meet[a * n + b]
  std::size_t unit_witness = 0;  // g(a) <= meet(a, a)
  std::pair<std::size_t, std::size_t> counit{};  // g1(meet(a,b)) <= a, g2(..) <= b
};

/// A top element: some total g in F with g(a) <= top for all a. Returns the
/// first such top in carrier order together with g.
std::optional<std::pair<Elem, std::size_t>> internal_top(const FiniteBco& B);

/// Searches for a top and a meet map right adjoint to the diagonal, the meet
/// being a morphism from the product BCO (componentwise functions). The
/// candidate, if given, is tried first; then, per counit/unit witness choice,
/// the pointwise-admissible values are enumerated when there are at most
/// 2^20 combinations. `why` receives the failed side.
std::optional<InternalMeets> internal_meets(const FiniteBco& B,
                                            const std::vector<Elem>* candidate = nullptr,
                                            std::string* why = nullptr);

/// a, b -> p·a·b in a filtered opca (kUndefined where undefined).
std::vector<Elem> pairing_meet(const FiniteOpca& A);
/// internal_meets of the opca view with the pairing candidate.
std::optional<InternalMeets> opca_meets(const FiniteOpca& A, std::string* why = nullptr);

/// {a | f(top) <= a for some f}.
Mask truth_values(const FiniteBco& B, Elem top);
std::optional<Elem> tv_least(const FiniteBco& B, Elem top);
/// Filtered opca shortcut: meets via the view, then TV and its least element.
std::optional<Elem> tv_least(const FiniteOpca& A);

// ---------------------------------------------------------------------------
// Applicative morphisms and density

struct ApplicativeResult {
  Reports reports;
  bool applicative = false;
  bool meet_preserving_morphism = false;
  Elem r = kUndefined;  // clause (ii) witness
  Elem u = kUndefined;  // clause (iii) witness
  bool agree() const { return applicative == meet_preserving_morphism; }
};

/// Clauses (i)-(iii) by exhaustive search, plus the independent verdict
/// "morphism of the BCO views that preserves internal finite meets".
ApplicativeResult check_applicative_morphism(const FiniteOpca& A, const FiniteOpca& B, const Map& f);

/// Clause (i): every a in A' has some b in B' below f(a).
bool preserves_filter(const FiniteOpca& A, const FiniteOpca& B, const Map& f);

struct DensityResult {
  /// (m, g): g maps each element of B' (by carrier index) into A'.
  std::optional<std::pair<Elem, Map>> cd_sk;
  /// (t, h): t·f(h(b')) <= b'.
  std::optional<std::pair<Elem, Map>> simple;
  bool agree() const { return cd_sk.has_value() == simple.has_value(); }
  Report report;
};

DensityResult check_density(const FiniteOpca& A, const FiniteOpca& B, const Map& f);

/// Brute-force right adjoint g: B -> A of f in the 2-category of BCO views:
/// g a morphism, id <= g f and f g <= id realized. Refuses (nullopt) when
/// |A|^|B| exceeds `cap`.
std::optional<Map> right_adjoint(const FiniteOpca& A, const FiniteOpca& B, const Map& f,
                                 std::size_t cap = std::size_t{1} << 20);

}  // namespace pcalab
