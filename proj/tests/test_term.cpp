#include <doctest.h>

#include "pcalab/fixtures.hpp"
#include "pcalab/term.hpp"

using namespace pcalab;

TEST_SUITE("term") {

TEST_CASE("abstraction of a variable is skk") {
  const TermPtr t = bracket_abstract("x", var("x"));
  CHECK(to_string(t) == to_string(app(S(), K(), K())));
}

TEST_CASE("abstraction of a different variable is K applied to it") {
  CHECK(equal(bracket_abstract("x", var("y")), app(K(), var("y"))));
}

TEST_CASE("abstracted variable no longer occurs") {
  const TermPtr body = app(var("x"), app(var("y"), var("x")), K());
  CHECK(occurs_free(body, "x"));
  CHECK_FALSE(occurs_free(bracket_abstract("x", body), "x"));
  CHECK(free_vars(abstract({"x", "y"}, body)).empty());
}

TEST_CASE("first projection reduces to its first argument") {
  const TermPtr a = cst(0, "a"), b = cst(1, "b");
  const TermPtr t = app(abstract({"x", "y"}, var("x")), a, b);
  const Reduction r = normalize(t, 1000);
  REQUIRE_FALSE(r.diverged);
  CHECK(equal(r.term, a));
}

TEST_CASE("K a b and S K K a reduce to a") {
  const TermPtr a = cst(3, "a"), b = cst(4, "b");
  auto r1 = reduce(app(K(), a, b), 10);
  CHECK(equal(r1.term, a));
  CHECK(r1.steps == 1);
  auto r2 = reduce(app(S(), K(), K(), a), 10);
  CHECK(equal(r2.term, a));
  CHECK(r2.steps == 2);
}

TEST_CASE("self-application of the duplicator diverges at every fuel") {
  const TermPtr I = app(S(), K(), K());
  const TermPtr W = app(S(), I, I);
  for (std::uint64_t fuel : {1, 10, 100, 10'000}) CHECK(reduce(app(W, W), fuel).diverged);
}

TEST_CASE("reduction is deterministic") {
  const TermPtr t = app(S(), app(K(), S()), K(), cst(0, "a"), cst(1, "b"));
  for (std::uint64_t fuel : {1, 2, 5, 50}) {
    const auto r1 = reduce(t, fuel), r2 = reduce(t, fuel);
    CHECK(r1.diverged == r2.diverged);
    CHECK(r1.steps == r2.steps);
    if (!r1.diverged) CHECK(equal(r1.term, r2.term));
  }
}

TEST_CASE("identity evaluates to top in the two-chain") {
  const FiniteOpca A = lattice_opca("L2");
  const auto v = eval_in_opca(bracket_abstract("x", var("x")), A);
  REQUIRE(v);
  CHECK(A.name(*v) == "1");
}

TEST_CASE("K a b evaluates below a in every fixture") {
  for (const auto& A : filtered_fixtures(5))
    for (Elem a = 0; a < A.size(); ++a)
      for (Elem b = 0; b < A.size(); ++b) {
        const auto v = eval_in_opca(app(K(), cst(a), cst(b)), A);
        if (v) CHECK(A.leq(*v, a));
      }
}

TEST_CASE("undefined application propagates") {
  const FiniteOpca A = partial_l3();
  const Elem top = *A.find("1");
  CHECK_FALSE(eval_in_opca(app(cst(top), cst(top)), A).has_value());
  CHECK_FALSE(eval_in_opca(app(K(), app(cst(top), cst(top))), A).has_value());
}

TEST_CASE("unbound variables are rejected") {
  CHECK_THROWS_AS(eval_in_opca(var("x"), lattice_opca("L2")), std::invalid_argument);
}

TEST_CASE("parser") {
  const FiniteOpca A = lattice_opca("L3");
  const TermPtr t = parse_term("K h (S K K 1)", A.resolver());
  CHECK(to_string(t, A.namer()) == to_string(app(K(), cst(1), app(S(), K(), K(), cst(2))), A.namer()));
  CHECK(equal(parse_term("\\x y. x"), abstract({"x", "y"}, var("x"))));
  CHECK_THROWS_AS(parse_term("(K S"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("K )"), std::invalid_argument);
}

}  // TEST_SUITE
