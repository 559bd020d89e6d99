#include <doctest.h>

#include "oracles.hpp"
#include "pcalab/bco.hpp"
#include "pcalab/fixtures.hpp"
#include "pcalab/opca.hpp"
#include "pcalab/sequence.hpp"

using namespace pcalab;

namespace {

oracle::Rel relation_of(const Poset& P) {
  oracle::Rel r(P.size(), std::vector<bool>(P.size()));
  for (Elem a = 0; a < P.size(); ++a)
    for (Elem b = 0; b < P.size(); ++b) r[a][b] = P.leq(a, b);
  return r;
}

}  // namespace

TEST_SUITE("opca") {

TEST_CASE("lattice fixtures cover every isomorphism type up to five elements") {
  const auto L = small_lattices(5);
  std::set<std::string> ours;
  for (const auto& f : L) {
    const auto r = relation_of(f.order);
    CHECK(oracle::is_lattice(r));
    ours.insert(oracle::canonical(r));
  }
  CHECK(ours.size() == L.size());
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto classes = oracle::lattice_classes(n);
    expected += classes.size();
    for (const auto& c : classes) CHECK(ours.count(c) == 1);
  }
  CHECK(L.size() == expected);
  CHECK(expected == 10);
}

TEST_CASE("meet-semilattice opcas pass the axioms") {
  for (const auto& f : small_lattices(5)) {
    const FiniteOpca A = lattice_opca(f);
    CAPTURE(A.subject);
    for (Elem a = 0; a < A.size(); ++a)
      for (Elem b = 0; b < A.size(); ++b)
        CHECK(A.apply(a, b) == static_cast<Elem>(*oracle::meet(relation_of(f.order), a, b)));
    CHECK(all_pass(check_opca_axioms(A)));
    CHECK(check_filter(A, *A.filter).passed());
  }
}

TEST_CASE("one-element opca passes") {
  CHECK(all_pass(check_opca_axioms(lattice_opca("L1"), true)));
}

TEST_CASE("undefined product below a defined one fails downward compatibility") {
  const Poset P = Poset::from_pairs(2, {{0, 1}});
  const FiniteOpca A({"0", "1"}, P, {0, kUndefined, 0, 1}, 1, 1);
  const Report* down = find_check(check_opca_axioms(A), "opca.downward");
  REQUIRE(down);
  CHECK_FALSE(down->passed());
  CHECK_FALSE(down->counterexample.empty());
}

TEST_CASE("filters") {
  const FiniteOpca A = lattice_opca("L3");
  CHECK(check_filter(A, A.order().all()).passed());
  CHECK(check_filter(A, bit(2)).passed());
  CHECK_FALSE(check_filter(A, bit(1)).passed());  // misses k = s = 1
  const FiniteOpca P = partial_l3();
  CHECK(check_filter(P, *P.filter).passed());
}

TEST_CASE("partial chain is an opca with k = s = m") {
  const FiniteOpca P = partial_l3();
  CHECK(all_pass(check_opca_axioms(P)));
  CHECK_FALSE(P.total());
}

TEST_CASE("Turing reducibility") {
  const FiniteOpca A = lattice_opca("L3");
  for (Elem a = 0; a < 3; ++a) CHECK(turing_leq(A, a, a).has_value());
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b)
      if (A.leq(a, b)) CHECK(turing_leq(A, b, a).has_value() == true);
  // 0 <=_T h needs 1·h <= 0
  CHECK_FALSE(turing_leq(A, 0, 1).has_value());
}

TEST_CASE("upward closure under Turing reducibility implies downward closure") {
  for (const auto& A : filtered_fixtures(4)) {
    const int n = A.size();
    for (Mask m = 0; m <= full_mask(n); ++m) {
      bool upT = true;
      for (Elem a = 0; a < n && upT; ++a)
        for (Elem b = 0; b < n && upT; ++b)
          if (contains(m, a) && turing_leq(A, a, b) && !contains(m, b)) upT = false;
      if (upT) CHECK(A.order().is_downset(m));
    }
  }
}

TEST_CASE("opca views pass the BCO clauses") {
  for (const auto& A : filtered_fixtures(5)) {
    CAPTURE(A.subject);
    if (all_pass(check_opca_axioms(A))) CHECK(all_pass(check_bco(bco_view(A))));
  }
}

}  // TEST_SUITE

TEST_SUITE("sequence") {

TEST_CASE("sequence combinators on every fixture") {
  for (const auto& A : filtered_fixtures(5)) {
    CAPTURE(A.subject);
    const DerivedKit k = derive_sequence_kit(A, 3);
    CHECK(k.ok());
  }
}

TEST_CASE("clause four on the three-chain") {
  const FiniteOpca A = lattice_opca("L3");
  const DerivedKit dk = derive_sequence_kit(A, 3);
  REQUIRE(dk.ok());
  for (Elem a = 0; a < 3; ++a) {
    const Elem ta = A.apply(dk.kit.t, a);
    const auto code = dk.kit.code(A, {a});
    REQUIRE(code);
    REQUIRE(ta != kUndefined);
    CHECK(A.leq(ta, *code));
  }
}

TEST_CASE("projection in a meet-semilattice is the meet of items and constants") {
  const FiniteOpca A = lattice_opca("B4");
  const DerivedKit dk = derive_sequence_kit(A, 3);
  REQUIRE(dk.ok());
  const Poset& P = A.order();
  for (Elem a0 = 0; a0 < 4; ++a0)
    for (Elem a1 = 0; a1 < 4; ++a1) {
      const auto code = dk.kit.code(A, {a0, a1});
      REQUIRE(code);
      for (std::size_t n = 0; n < 2; ++n) {
        const Elem v = A.apply(dk.kit.b, dk.kit.numerals[n], *code);
        REQUIRE(v != kUndefined);
        // with application the meet, everything is a meet of the inputs
        CHECK(P.leq(v, *P.meet(a0, a1)));
        CHECK(P.leq(v, n == 0 ? a0 : a1));
      }
    }
}

TEST_CASE("push onto the empty sequence") {
  const FiniteOpca A = lattice_opca("N5");
  const DerivedKit dk = derive_sequence_kit(A, 2);
  REQUIRE(dk.ok());
  for (Elem a = 0; a < A.size(); ++a)
    CHECK(A.leq(A.apply(dk.kit.d, a, *dk.kit.code(A, {})), *dk.kit.code(A, {a})));
}

TEST_CASE("kit terms are closed") {
  const SequenceKit& k = sequence_kit();
  for (const TermPtr& t : {k.b, k.c, k.d, k.t, k.p, k.p0, k.p1}) CHECK(is_closed(t));
}

TEST_CASE("term model clauses on symbolic sequences") {
  std::vector<TermPtr> items;
  for (int i = 0; i < 3; ++i) items.push_back(cst(i, "a" + std::to_string(i)));
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<TermPtr> xs(items.begin(), items.begin() + len);
    for (std::size_t n = 0; n < len; ++n) CHECK(check_sequence_clauses_term_model(xs, n, 100'000).empty());
  }
}

}  // TEST_SUITE
