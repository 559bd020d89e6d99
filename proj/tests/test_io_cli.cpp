#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "pcalab/cli.hpp"
#include "pcalab/error.hpp"
#include "pcalab/fixtures.hpp"
#include "pcalab/io.hpp"

using namespace pcalab;

namespace {

std::string data(const std::string& f) { return std::string(PCALAB_TEST_DATA) + "/" + f; }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pcalab-test-" + name)).string();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("opca files") {
  const OpcaFile f = load_opca(data("l3.struct"));
  CHECK(f.A.subject == "L3");
  CHECK(f.A.size() == 3);
  CHECK(f.A.apply(1, 2) == 1);
  CHECK(*f.A.U == bit(0));
  CHECK(*f.A.filter == bit(2));
  REQUIRE(f.A.predicates.size() == 2);
  CHECK(f.A.predicates[0].values == std::vector<Mask>{0b011, 0b001});

  const OpcaFile p = load_opca(data("l3_partial.struct"));
  CHECK(p.A.apply(2, 2) == kUndefined);
  CHECK(load_opca(data("l2.struct")).A.subject == "l2");
}

TEST_CASE("written opca parses back to the same structure") {
  for (const auto& A : filtered_fixtures(5)) {
    FiniteOpca B = A;
    B.subject = "x";
    const OpcaFile f = parse_opca(write_opca(B), "mem");
    CHECK(f.A.table() == B.table());
    CHECK(f.A.order() == B.order());
    CHECK(f.A.filter == B.filter);
    CHECK(f.A.k() == B.k());
  }
}

TEST_CASE("errors name the file, line and field") {
  try {
    load_opca(data("dangling.struct"));
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(e.line() == 6);
    CHECK(e.field() == "app");
    CHECK(std::string(e.what()).find("dangling.struct:6") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_opca("elements a b\nleq a b\nleq b a\n", "cyc"), InputError);
  CHECK_THROWS_AS(parse_opca("elements a\nbogus 1\n", "kw"), InputError);
  CHECK_THROWS_AS(parse_aks("terms q\nstacks p\nK q\nS q\ncc q\nQP q\n", "partial"), InputError);
  CHECK_THROWS_AS(load_opca(data("missing.struct")), InputError);
}

TEST_CASE("kind detection") {
  CHECK(detect_kind(read_file(data("l2.bco")), "") == FileKind::Bco);
  CHECK(detect_kind(read_file(data("one_stack.aks")), "") == FileKind::Aks);
  CHECK(detect_kind(read_file(data("l2_id.map")), "") == FileKind::Map);
  CHECK(detect_kind(read_file(data("l2.struct")), "") == FileKind::Opca);
}

TEST_CASE("sup specifications") {
  const OpcaFile f = load_opca(data("m3_join.struct"));
  REQUIRE(f.sup);
  const PseudoDAlgebra alg = pseudo_d_from(f.A, *f.sup);
  CHECK(alg.sup_of(f.A.order().all()) == *f.A.find("1"));
  const OpcaFile g = parse_opca("elements 0 1\nleq 0 1\napp meet\nsup - -> 0\nsup 0 -> 0\nsup 1 -> 1\n", "s");
  REQUIRE(g.sup);
  CHECK(g.sup->entries.size() == 3);
  CHECK(g.sup->entries[0].first == 0);
  CHECK_THROWS_AS(parse_opca("elements 0 1\nleq 0 1\napp meet\nsup 0 0\n", "s"), InputError);
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("check-opca on the two-chain passes") {
  const Run r = run({"check-opca", data("l2.struct")});
  CHECK(r.code == 0);
  CHECK(r.out.find("[pass]") != std::string::npos);
}

TEST_CASE("dangling element reference is an input error") {
  const Run r = run({"check-opca", data("dangling.struct")});
  CHECK(r.code == 2);
  CHECK(r.err.find("dangling.struct:6") != std::string::npos);
  CHECK(r.err.find("'app'") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"--format", "xml", "check-opca", data("l2.struct")}).code == 2);
}

TEST_CASE("build-aks then check-aks round trip") {
  const std::string out = temp_path("l2.aks");
  const Run b = run({"--format", "machine", "--no-timing", "build-aks", data("l2.struct"), "--U", "0", "--max-len",
                     "3", "--out", out});
  REQUIRE(b.code == 0);
  const Run c = run({"--format", "machine", "--no-timing", "check-aks", out});
  CHECK(c.code == 0);
  auto built = lines(b.out);
  REQUIRE_FALSE(built.empty());
  CHECK(built.front().find("\"build-aks\"") != std::string::npos);
  built.erase(built.begin());
  CHECK(built == lines(c.out));
  std::remove(out.c_str());
}

TEST_CASE("machine output is stable") {
  const std::vector<std::string> args{"--format", "machine", "--no-timing", "check-tripos", data("l3.struct"),
                                      "--index-size", "1"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  for (const auto& l : lines(a.out)) CHECK(l.front() == '{');
}

TEST_CASE("subcommands") {
  CHECK(run({"check-bco", data("l2.bco")}).code == 0);
  CHECK(run({"check-filter", data("l3.struct"), "--subset", "h", "1"}).code == 0);
  CHECK(run({"check-filter", data("l3.struct"), "--subset", "h"}).code == 1);
  CHECK(run({"check-order-ca", data("two_stacks.aks")}).code == 0);
  CHECK(run({"check-order-ca", data("l3.struct")}).code == 0);
  CHECK(run({"check-aks", data("pruned_qp.aks")}).code == 1);
  CHECK(run({"check-localic", data("l3.struct")}).code == 0);
  CHECK(run({"check-localic", data("l2.struct")}).code == 2);
  CHECK(run({"check-tripos", data("b4.struct"), "--index-size", "1"}).code == 0);
  CHECK(run({"check-tripos", data("m3_join.struct"), "--index-size", "1"}).code == 1);
  CHECK(run({"check-tripos", data("l3.struct"), "--index-size", "9"}).code == 2);
  CHECK(run({"check-density", data("l3.struct"), data("l2.struct"), data("l3_to_l2.map")}).code == 0);
  CHECK(run({"check-density", data("l3.struct"), data("l2.struct"), data("l2_id.map")}).code == 2);
}

TEST_CASE("k2 subcommands") {
  const Run a = run({"k2", "apply", "expr:if len(x) < 2 then 0 else at(x,1)+1", "const:7", "--n", "0"});
  CHECK(a.code == 0);
  CHECK(a.out.find("value=7") != std::string::npos);
  CHECK(run({"k2", "apply", "const:0", "const:1", "--fuel", "20"}).code == 1);
  const Run t = run({"k2", "tau", "expr:at(x,0) + 8", "--prefix", "1,2", "--j", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("value=10") != std::string::npos);
  CHECK(run({"k2", "discrete", "expr:x", "expr:x+1"}).code == 0);
  CHECK(run({"k2", "discrete", "const:1", "const:1"}).code == 1);
  CHECK(run({"k2", "apply", "expr:x +", "k"}).code == 2);
  CHECK(run({"k2", "tau", "k", "--prefix", "1,2", "--nprime", "5"}).code == 2);
}

}  // TEST_SUITE
