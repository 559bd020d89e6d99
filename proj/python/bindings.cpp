#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pcalab/aks.hpp"
#include "pcalab/bco.hpp"
#include "pcalab/cli.hpp"
#include "pcalab/error.hpp"
#include "pcalab/fixtures.hpp"
#include "pcalab/io.hpp"
#include "pcalab/k2.hpp"
#include "pcalab/opca.hpp"
#include "pcalab/tripos.hpp"

namespace py = pybind11;
using namespace pcalab;

namespace {

py::object to_py(const k2::Nat& n) {
  const std::string s = k2::to_string(n);
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

k2::Nat from_py(const py::int_& n) {
  if (n.attr("__lt__")(0).cast<bool>()) throw py::value_error("natural number expected");
  return k2::Nat(n.attr("__str__")().cast<std::string>());
}

std::vector<std::string> element_names(const FiniteOpca& A) {
  std::vector<std::string> out;
  for (Elem e = 0; e < A.size(); ++e) out.push_back(A.name(e));
  return out;
}

std::vector<std::string> members(const FiniteOpca& A, Mask m) {
  std::vector<std::string> out;
  for_each_bit(m, [&](Elem e) { out.push_back(A.name(e)); });
  return out;
}

Mask mask_of(const FiniteOpca& A, const std::vector<std::string>& names) {
  Mask m = 0;
  for (const auto& n : names) {
    auto e = A.find(n);
    if (!e) throw py::key_error("no element named " + n);
    m |= bit(*e);
  }
  return m;
}

void export_reports(py::module_& m) {
  py::class_<Report>(m, "Report")
      .def_readonly("subject", &Report::subject)
      .def_readonly("check", &Report::check)
      .def_property_readonly("verdict", [](const Report& r) { return std::string(to_string(r.verdict)); })
      .def_readonly("witnesses", &Report::witnesses)
      .def_readonly("counterexample", &Report::counterexample)
      .def_readonly("note", &Report::note)
      .def_readonly("elapsed_ms", &Report::elapsed_ms)
      .def_property_readonly("passed", &Report::passed)
      .def("machine", [](const Report& r) { return format_machine(r, false); })
      .def("__repr__", [](const Report& r) { return format_text(r); });
}

void export_structures(py::module_& m) {
  py::class_<FiniteOpca>(m, "Opca")
      .def_property_readonly("size", &FiniteOpca::size)
      .def_property_readonly("names", &element_names)
      .def_readonly("subject", &FiniteOpca::subject)
      .def_property_readonly("filter",
                             [](const FiniteOpca& A) { return members(A, A.filter_or_all()); })
      .def_property_readonly("U", [](const FiniteOpca& A) -> std::optional<std::vector<std::string>> {
        if (!A.U) return std::nullopt;
        return members(A, *A.U);
      })
      .def("apply",
           [](const FiniteOpca& A, const std::string& a, const std::string& b) -> std::optional<std::string> {
             const Elem r = A.apply(*A.find(a), *A.find(b));
             if (r == kUndefined) return std::nullopt;
             return A.name(r);
           })
      .def("leq", [](const FiniteOpca& A, const std::string& a, const std::string& b) {
        return A.leq(*A.find(a), *A.find(b));
      });

  py::class_<Aks>(m, "Aks")
      .def_readonly("subject", &Aks::subject)
      .def_readonly("terms", &Aks::term_names)
      .def_readonly("stacks", &Aks::stack_names)
      .def("to_text", &write_aks);

  m.def("load_opca", [](const std::string& path) { return load_opca(path).A; }, py::arg("path"));
  m.def("load_aks", &load_aks, py::arg("path"));
  m.def("lattice_opca", py::overload_cast<const std::string&>(&lattice_opca), py::arg("name"),
        "Meet-semilattice opca on one of the small lattice fixtures, filter {top}.");
  m.def("lattice_names", [] {
    std::vector<std::string> out;
    for (const auto& L : small_lattices(5)) out.push_back(L.name);
    return out;
  });
  m.def("with_U", [](const FiniteOpca& A, const std::vector<std::string>& U) { return with_U(A, mask_of(A, U)); },
        py::arg("opca"), py::arg("U"));
  m.def("admissible_U", [](const FiniteOpca& A) {
    std::vector<std::vector<std::string>> out;
    for (Mask U : admissible_U(A)) out.push_back(members(A, U));
    return out;
  });
}

void export_checks(py::module_& m) {
  m.def("check_opca", &check_opca_axioms, py::arg("opca"), py::arg("search_ks") = false);
  m.def("check_filter", [](const FiniteOpca& A, const std::vector<std::string>& s) {
    return check_filter(A, mask_of(A, s));
  });
  m.def(
      "build_aks",
      [](const FiniteOpca& A, std::size_t max_len) {
        AksBuild b = build_aks(A, max_len);
        return py::make_tuple(b.aks ? py::cast(*b.aks) : py::none(), b.reports);
      },
      py::arg("opca"), py::arg("max_len") = 3, "Returns (aks or None, reports).");
  m.def("check_aks", &check_aks);
  m.def("check_order_ca", &check_order_ca);
  m.def("check_pierce", &check_pierce);
  m.def("check_kr", [](const Aks& K) -> std::optional<std::string> {
    auto t = check_kr(K);
    if (!t) return std::nullopt;
    return K.term_names[*t];
  });
  m.def("tv_least", [](const Aks& K) -> std::optional<std::string> {
    const OrderCa oc = streicher_order_ca(K);
    auto t = tv_least(oc.A);
    if (!t) return std::nullopt;
    return oc.A.name(*t);
  }, "Least truth value of the order-ca induced by the aks.");
  m.def("localic_criterion", [](const FiniteOpca& A) -> std::optional<std::string> {
    auto e = localic_criterion(A);
    if (!e) return std::nullopt;
    return A.name(*e);
  });
  m.def("localic_triangulation", &localic_triangulation);
  m.def("booleanization", &booleanization_suite, py::arg("opca"), py::arg("index_size") = 2);
  m.def(
      "is_applicative",
      [](const FiniteOpca& A, const FiniteOpca& B, const std::vector<std::string>& image) {
        if (static_cast<int>(image.size()) != A.size()) throw py::value_error("map must list one image per element");
        Map f;
        for (const auto& n : image) {
          auto e = B.find(n);
          if (!e) throw py::key_error("no element named " + n);
          f.push_back(*e);
        }
        const ApplicativeResult r = check_applicative_morphism(A, B, f);
        return py::make_tuple(r.applicative, r.meet_preserving_morphism);
      },
      py::arg("src"), py::arg("dst"), py::arg("image"),
      "(applicative, meet-preserving BCO morphism) for the map listing images of src elements in order.");
}

// pybind11 holders cannot be shared_ptr<const T>
struct K2Elem {
  k2::ElemPtr p;
};

void export_k2(py::module_& m) {
  py::module_ k = m.def_submodule("k2", "Kleene's second model with query-counted fuel.");
  py::class_<K2Elem>(k, "Element")
      .def_property_readonly("recursive", [](const K2Elem& e) { return e.p->recursive(); })
      .def("__repr__", [](const K2Elem& e) { return e.p->describe(); });
  k.def("expression", [](const std::string& t) { return K2Elem{k2::from_expression(t)}; }, py::arg("text"));
  k.def("constant", [](const py::int_& c) { return K2Elem{k2::constant(from_py(c))}; });
  k.def("K", [] { return K2Elem{k2::k2_basis().k}; });
  k.def("S", [] { return K2Elem{k2::k2_basis().s}; });
  k.def("skk", [] { return K2Elem{k2::k2_skk()}; });
  k.def("opaque", [](const K2Elem& e) { return K2Elem{k2::opaque(e.p)}; });
  k.def("app", [](const K2Elem& a, const K2Elem& b) { return K2Elem{k2::app(a.p, b.p)}; });
  k.def(
      "apply",
      [](const K2Elem& a, const K2Elem& b, const py::int_& n, std::uint64_t fuel) {
        const k2::Answer r = k2::k2_apply(a.p, b.p, from_py(n), fuel);
        return py::make_tuple(r.value ? to_py(*r.value) : py::none(), r.fuel_used);
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("fuel") = 100'000,
      "(value or None, fuel used) for (a b)(n).");
  k.def(
      "value",
      [](const K2Elem& a, const py::int_& n, std::uint64_t fuel) {
        const k2::Answer r = k2::k2_value(a.p, from_py(n), fuel);
        return r.value ? to_py(*r.value) : py::none();
      },
      py::arg("a"), py::arg("n"), py::arg("fuel") = 100'000);
  k.def("encode", [](const std::vector<py::int_>& xs) {
    k2::Seq s;
    for (const auto& x : xs) s.push_back(from_py(x));
    return to_py(k2::encode(s));
  });
  k.def("decode", [](const py::int_& c) -> std::optional<std::vector<py::object>> {
    auto d = k2::decode(from_py(c));
    if (!d) return std::nullopt;
    std::vector<py::object> out;
    for (const auto& x : *d) out.push_back(to_py(x));
    return out;
  });
}

}  // namespace

PYBIND11_MODULE(_pcalab, m) {
  m.doc() = "Finite partial combinatory algebras, realizability structures and K2.";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  export_reports(m);
  export_structures(m);
  export_checks(m);
  export_k2(m);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in process: (exit code, stdout, stderr).");
}
