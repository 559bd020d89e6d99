#include "pcalab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcalab/aks.hpp"
#include "pcalab/bco.hpp"
#include "pcalab/error.hpp"
#include "pcalab/implicative.hpp"
#include "pcalab/io.hpp"
#include "pcalab/k2.hpp"
#include "pcalab/pseudo_d.hpp"
#include "pcalab/tripos.hpp"

namespace pcalab {

namespace {

struct Options {
  std::string format = "text";
  bool no_timing = false;
};

void append(Reports& to, Reports from) {
  for (auto& r : from) to.push_back(std::move(r));
}

Mask names_to_mask(const FiniteOpca& A, const std::vector<std::string>& names, const std::string& field) {
  Mask m = 0;
  for (const auto& n : names) {
    auto e = A.find(n);
    if (!e) throw InputError(A.subject, 0, field, "unknown element '" + n + "'");
    m |= bit(*e);
  }
  return m;
}

// Opca file or aks file; an opca needs its U to build the aks.
Aks aks_from_file(const std::string& path, std::size_t max_len, Reports& out) {
  const std::string text = read_file(path);
  if (detect_kind(text, path) == FileKind::Aks) {
    Aks K = parse_aks(text, path);
    try {
      validate(K);
    } catch (const std::invalid_argument& e) {
      throw InputError(path, 0, "", e.what());
    }
    return K;
  }
  const OpcaFile f = parse_opca(text, path);
  if (!f.A.U) throw InputError(path, 0, "U", "an opca file needs U to build the aks");
  AksBuild b = build_aks(f.A, max_len);
  if (!b.aks) {
    append(out, std::move(b.reports));
    throw std::logic_error("aks construction refused");
  }
  return *b.aks;
}

Reports aks_suite(const Aks& K) {
  Reports out = check_aks(K);
  if (all_pass(out)) {
    out.push_back(check_pierce(K));
    out.push_back(check_kprime(K));
  }
  return out;
}

Reports cmd_check_opca(const std::string& path) {
  const OpcaFile f = load_opca(path);
  Reports out = check_opca_axioms(f.A, true);
  if (f.A.filter) out.push_back(check_filter(f.A, *f.A.filter));
  return out;
}

Reports cmd_check_filter(const std::string& path, const std::vector<std::string>& subset) {
  const OpcaFile f = load_opca(path);
  Mask m = f.A.filter_or_all();
  if (!subset.empty()) m = names_to_mask(f.A, subset, "--subset");
  return {check_filter(f.A, m)};
}

Reports cmd_build_aks(const std::string& path, const std::vector<std::string>& U, std::size_t max_len,
                      const std::string& out_path) {
  OpcaFile f = load_opca(path);
  if (!U.empty()) {
    const Mask m = names_to_mask(f.A, U, "--U");
    if (!f.A.order().is_downset(m)) throw InputError(path, 0, "--U", "U must be downward closed");
    f.A.U = m;
  }
  if (!f.A.U) throw InputError(path, 0, "U", "give U in the file or with --U");
  AksBuild b = build_aks(f.A, max_len);
  Reports out = std::move(b.reports);
  if (!b.aks) return out;
  if (!out_path.empty()) {
    std::ofstream o(out_path);
    if (!o) throw InputError(out_path, 0, "--out", "cannot write file");
    o << write_aks(*b.aks);
  }
  append(out, aks_suite(*b.aks));
  return out;
}

Reports cmd_check_tripos(const std::string& path, int index_size) {
  const OpcaFile f = load_opca(path);
  const FiniteOpca& A = f.A;
  Reports out;
  std::optional<PseudoDAlgebra> alg;
  if (f.sup) {
    alg = pseudo_d_from(A, *f.sup);
  } else {
    try {
      SupFromImplication s = sup_from_implication(heyting_kit(A));
      append(out, std::move(s.reports));
      alg = std::move(s.alg);
    } catch (const std::invalid_argument&) {
      out.push_back(refused(A.subject, "pseudo-d", "no sup given and the order is not a Heyting algebra"));
    }
  }
  if (alg) {
    append(out, check_pseudo_d_algebra(*alg).reports);
    out.push_back(star_report(*alg));
    ImplicationFromSup imp = implication_from_sup(*alg);
    append(out, std::move(imp.reports));
    if (imp.kit) append(out, check_implicative(*imp.kit, ImplicativeMode::PreImplicative));
  }
  if (A.U) {
    if (index_size < 0 || index_size > kMaxEnumeratedIndex)
      throw InputError(path, 0, "--index-size", "must be between 0 and " + std::to_string(kMaxEnumeratedIndex));
    append(out, booleanization_suite(A, index_size));
    AksBuild b = build_aks(A);
    if (b.aks)
      out.push_back(streicher_correspondence(A, *b.aks, index_size));
    else
      append(out, std::move(b.reports));

    // named predicates from the file, pairwise in the Boolean order
    const BooleanContext ctx(A);
    for (const auto& p : A.predicates)
      for (const auto& q : A.predicates) {
        if (&p == &q || p.index != q.index) continue;
        const BooleanVerdict v = boolean_leq(p.values, q.values, ctx);
        Report r = v.agree() ? pass(A.subject, "boolean.query")
                             : fail(A.subject, "boolean.query", "double-negation and contrapositive forms disagree");
        r.witness("phi", p.name).witness("psi", q.name).witness("leq", v.form3 ? "yes" : "no");
        if (v.realizer3) r.witness("realizer", ctx.DA.D.name(*v.realizer3));
        out.push_back(std::move(r));
      }
  }
  return out;
}

Reports cmd_check_localic(const std::string& path) {
  const OpcaFile f = load_opca(path);
  if (!f.A.U) throw InputError(path, 0, "U", "the localic criterion needs U");
  Reports out;
  const auto e = localic_criterion(f.A);
  // a negative answer is a verdict, not a failure
  out.push_back(pass(f.A.subject, "localic.criterion").witness("e", e ? f.A.name(*e) : "none"));
  AksBuild b = build_aks(f.A);
  if (!b.aks) {
    append(out, std::move(b.reports));
    return out;
  }
  out.push_back(localic_triangulation(f.A, *b.aks));
  return out;
}

Reports cmd_check_density(const std::string& src, const std::string& dst, const std::string& map) {
  const OpcaFile a = load_opca(src), b = load_opca(dst);
  const Map f = parse_map(read_file(map), map, a.A, b.A);
  ApplicativeResult ar = check_applicative_morphism(a.A, b.A, f);
  Reports out = std::move(ar.reports);
  if (ar.applicative) out.push_back(check_density(a.A, b.A, f).report);
  return out;
}

// ---------------------------------------------------------------------------
// K2

k2::ElemPtr k2_element(const std::string& spec) {
  using namespace k2;
  if (spec == "k") return k2_basis().k;
  if (spec == "s") return k2_basis().s;
  if (spec == "skk") return k2_skk();
  auto starts = [&](const char* p) { return spec.rfind(p, 0) == 0; };
  try {
    if (starts("const:")) return constant(parse_nat(spec.substr(6)));
    if (starts("expr:")) return from_expression(spec.substr(5), spec.substr(5));
    if (starts("opaque:")) return opaque(k2_element(spec.substr(7)));
  } catch (const std::invalid_argument& e) {
    throw InputError("<element>", 0, spec, e.what());
  }
  if (starts("@")) {
    const std::string path = spec.substr(1);
    return from_expression(read_file(path), path);
  }
  throw InputError("<element>", 0, spec, "expected k, s, skk, const:N, expr:TEXT, opaque:SPEC or @FILE");
}

k2::Seq parse_seq(const std::string& text, const std::string& field) {
  k2::Seq out;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    try {
      out.push_back(k2::parse_nat(tok));
    } catch (const std::invalid_argument&) {
      throw InputError("<argument>", 0, field, "not a natural number: '" + tok + "'");
    }
  }
  return out;
}

Report answer_report(const std::string& check, const k2::Answer& a, std::uint64_t fuel) {
  Report r = a.value ? pass("k2", check).witness("value", k2::to_string(*a.value))
                     : fail("k2", check, "undefined at fuel " + std::to_string(fuel));
  r.witness("fuel-used", std::to_string(a.fuel_used));
  if (a.stage) r.witness("stage", std::to_string(*a.stage));
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite models of realizability: opcas, BCOs, Krivine structures, K2", "pcalab"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Report encoding")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--no-timing", opt.no_timing, "Omit timings from machine reports");

  std::string file, file2, file3, out_path;
  std::vector<std::string> names;
  std::size_t max_len = 3;
  int index_size = 1;

  auto* c_opca = app.add_subcommand("check-opca", "Opca axioms and the filter");
  c_opca->add_option("FILE", file)->required();
  auto* c_bco = app.add_subcommand("check-bco", "BCO clauses");
  c_bco->add_option("FILE", file)->required();
  auto* c_filter = app.add_subcommand("check-filter", "Filter closure");
  c_filter->add_option("FILE", file)->required();
  c_filter->add_option("--subset", names, "Elements of the candidate filter")->delimiter(',');
  auto* c_build = app.add_subcommand("build-aks", "Build K(A, A', U) and check it");
  c_build->add_option("FILE", file)->required();
  c_build->add_option("--U", names, "Elements generating U (a downset)")->delimiter(',');
  c_build->add_option("--max-len", max_len, "Longest sequence code used for stacks")->check(CLI::Range(0, 8));
  c_build->add_option("--out", out_path, "Write the aks to this file");
  auto* c_aks = app.add_subcommand("check-aks", "Pole rules, Pierce's law and K'");
  c_aks->add_option("FILE", file)->required();
  auto* c_order = app.add_subcommand("check-order-ca", "Induced filtered order-ca of an aks");
  c_order->add_option("FILE", file)->required();
  c_order->add_option("--max-len", max_len, "Sequence bound when building from an opca")->check(CLI::Range(0, 8));
  auto* c_tripos = app.add_subcommand("check-tripos", "Pseudo-D-algebra, implicative and Boolean suites");
  c_tripos->add_option("FILE", file)->required();
  c_tripos->add_option("--index-size", index_size, "Index set size for exhaustive predicates");
  auto* c_localic = app.add_subcommand("check-localic", "Localic criterion, TV-least and Kr");
  c_localic->add_option("FILE", file)->required();
  auto* c_density = app.add_subcommand("check-density", "Applicative morphism and computational density");
  c_density->add_option("SRC", file)->required();
  c_density->add_option("DST", file2)->required();
  c_density->add_option("MAP", file3)->required();

  auto* c_k2 = app.add_subcommand("k2", "Kleene's second model");
  c_k2->require_subcommand(1);
  std::string alpha, beta, prefix;
  std::vector<std::string> ns{"0"}, elems;
  std::uint64_t fuel = 100'000;
  std::size_t nprime = 0, depth = 8;
  bool nprime_given = false;
  std::string j = "0";
  auto* k_apply = c_k2->add_subcommand("apply", "Dialogue application (alpha beta)(n)");
  k_apply->add_option("ALPHA", alpha)->required();
  k_apply->add_option("BETA", beta)->required();
  k_apply->add_option("--n", ns, "Arguments")->delimiter(',');
  k_apply->add_option("--fuel", fuel, "Query budget");
  auto* k_tau = c_k2->add_subcommand("tau", "Read tau(j) from alpha and a prefix");
  k_tau->add_option("ALPHA", alpha)->required();
  k_tau->add_option("--prefix", prefix, "pi(0),..,pi(N')")->required();
  auto* np = k_tau->add_option("--nprime", nprime, "N' (defaults to prefix length - 1)");
  k_tau->add_option("--j", j, "Index");
  k_tau->add_option("--fuel", fuel, "Query budget");
  auto* k_disc = c_k2->add_subcommand("discrete", "Isolating prefixes for a finite set");
  k_disc->add_option("ELEMENTS", elems)->required();
  k_disc->add_option("--depth", depth, "Longest prefix tried");
  k_disc->add_option("--fuel", fuel, "Query budget per element");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  nprime_given = np->count() > 0;

  Reports reports;
  try {
    if (*c_opca) reports = cmd_check_opca(file);
    else if (*c_bco) reports = check_bco(load_bco(file));
    else if (*c_filter) reports = cmd_check_filter(file, names);
    else if (*c_build) reports = cmd_build_aks(file, names, max_len, out_path);
    else if (*c_aks) reports = aks_suite(aks_from_file(file, max_len, reports));
    else if (*c_order) reports = check_order_ca(aks_from_file(file, max_len, reports));
    else if (*c_tripos) reports = cmd_check_tripos(file, index_size);
    else if (*c_localic) reports = cmd_check_localic(file);
    else if (*c_density) reports = cmd_check_density(file, file2, file3);
    else if (*k_apply) {
      const auto a = k2_element(alpha), b = k2_element(beta);
      for (const auto& n : ns) {
        const k2::Seq v = parse_seq(n, "--n");
        if (v.size() != 1) throw InputError("<argument>", 0, "--n", "expected one natural number");
        Report r = answer_report("k2.apply", k2::k2_apply(a, b, v[0], fuel), fuel);
        r.witness("n", n);
        reports.push_back(std::move(r));
      }
    } else if (*k_tau) {
      const k2::Seq pi = parse_seq(prefix, "--prefix");
      if (pi.empty()) throw InputError("<argument>", 0, "--prefix", "empty prefix");
      if (!nprime_given) nprime = pi.size() - 1;
      if (nprime + 1 != pi.size()) throw InputError("<argument>", 0, "--nprime", "prefix length must be N'+1");
      const k2::Seq jv = parse_seq(j, "--j");
      if (jv.size() != 1) throw InputError("<argument>", 0, "--j", "expected one natural number");
      reports.push_back(answer_report("k2.tau", k2::tau_extract(k2_element(alpha), pi, nprime, jv[0], fuel), fuel));
    } else if (*k_disc) {
      std::vector<k2::ElemPtr> U;
      for (const auto& e : elems) U.push_back(k2_element(e));
      const k2::DiscreteResult d = k2::is_discrete(U, depth, fuel);
      Report r = d.discrete ? pass("k2", "k2.discrete") : fail("k2", "k2.discrete", "");
      if (d.discrete)
        for (std::size_t i = 0; i < U.size(); ++i) {
          std::string s;
          for (const auto& x : d.prefixes[i]) s += (s.empty() ? "" : ",") + k2::to_string(x);
          r.witness(elems[i], "[" + s + "]");
        }
      else if (d.clash)
        r.counterexample = elems[d.clash->first] + " and " + elems[d.clash->second] + " agree up to depth " +
                           std::to_string(depth);
      else
        r.counterexample = "values undefined at fuel " + std::to_string(fuel);
      reports.push_back(std::move(r));
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    reports.push_back(refused(file, "enumeration", e.what()));
  } catch (const std::runtime_error& e) {
    reports.push_back(refused(file.empty() ? "k2" : file, "evaluation", e.what()));
  } catch (const std::logic_error& e) {
    if (reports.empty()) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }

  for (const auto& r : reports)
    out << (opt.format == "machine" ? format_machine(r, !opt.no_timing) : format_text(r)) << "\n";
  return all_pass(reports) ? 0 : 1;
}

}  // namespace pcalab
