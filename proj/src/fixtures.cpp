#include "pcalab/fixtures.hpp"

#include <stdexcept>

namespace pcalab {

namespace {

LatticeFixture make(std::string name, std::vector<std::string> names,
                    const std::vector<std::pair<Elem, Elem>>& covers, bool distributive) {
  const int n = static_cast<int>(names.size());
  return LatticeFixture{std::move(name), std::move(names), Poset::from_pairs(n, covers), distributive};
}

const std::vector<LatticeFixture>& all_lattices() {
  static const std::vector<LatticeFixture> L = {
      make("L1", {"1"}, {}, true),
      make("L2", {"0", "1"}, {{0, 1}}, true),
      make("L3", {"0", "h", "1"}, {{0, 1}, {1, 2}}, true),
      make("L4", {"0", "a", "b", "1"}, {{0, 1}, {1, 2}, {2, 3}}, true),
      make("B4", {"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, true),
      make("L5", {"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, true),
      make("B4+1", {"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}, true),
      make("1+B4", {"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}, true),
      make("M3", {"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, false),
      make("N5", {"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}}, false),
  };
  return L;
}

}  // namespace

std::vector<LatticeFixture> small_lattices(int max_size) {
  if (max_size > 5) throw std::invalid_argument("lattice fixtures go up to 5 elements");
  std::vector<LatticeFixture> out;
  for (const auto& L : all_lattices())
    if (L.order.size() <= max_size) out.push_back(L);
  return out;
}

const LatticeFixture& lattice(const std::string& name) {
  for (const auto& L : all_lattices())
    if (L.name == name) return L;
  throw std::invalid_argument("unknown lattice fixture " + name);
}

FiniteOpca lattice_opca(const LatticeFixture& L) {
  FiniteOpca A = semilattice_opca(L.order, L.names);
  A.subject = L.name;
  return A;
}

FiniteOpca lattice_opca(const std::string& name) { return lattice_opca(lattice(name)); }

std::vector<Mask> admissible_U(const FiniteOpca& A) {
  std::vector<Mask> out;
  for (Mask U : enumerate_downsets(A.order()))
    if (!(U & A.filter_or_all())) out.push_back(U);
  return out;
}

FiniteOpca with_U(FiniteOpca A, Mask U) {
  A.U = U;
  A.subject += "/U=" + A.format_set(U);
  return A;
}

FiniteOpca partial_l3() {
  const Poset P = Poset::from_pairs(3, {{0, 1}, {1, 2}});
  std::vector<Elem> table(9);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) table[a * 3 + b] = (a == 2 && b == 2) ? kUndefined : std::min(a, b);
  FiniteOpca A({"0", "m", "1"}, P, std::move(table), 1, 1);
  A.subject = "L3p";
  A.filter = bit(1);
  return A;
}

std::vector<FiniteOpca> filtered_fixtures(int max_size) {
  std::vector<FiniteOpca> out;
  for (const auto& L : small_lattices(std::min(max_size, 5))) {
    FiniteOpca A = lattice_opca(L);
    out.push_back(A);
    if (A.size() == 1) continue;
    FiniteOpca whole = A;
    whole.filter = A.order().all();
    whole.subject = L.name + "/all";
    out.push_back(whole);
    // principal upsets other than {top} and the whole carrier
    for (Elem a = 0; a < A.size(); ++a) {
      const Mask up = A.order().up(a);
      if (up == bit(A.k()) || up == A.order().all()) continue;
      FiniteOpca B = A;
      B.filter = up;
      B.subject = L.name + "/" + A.name(a);
      out.push_back(B);
    }
  }
  if (max_size >= 3) out.push_back(partial_l3());
  return out;
}

FiniteOpca boolean_algebra(int atoms) {
  if (atoms < 0 || atoms > 4) throw std::invalid_argument("boolean fixtures have at most 4 atoms");
  const int n = 1 << atoms;
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    std::string s;
    for (int i = 0; i < atoms; ++i)
      if (a >> i & 1) s += static_cast<char>('a' + i);
    names.push_back(a == 0 ? "0" : a == n - 1 ? "1" : s);
    for (int b = 0; b < n; ++b)
      if (a != b && (a & b) == a) pairs.emplace_back(a, b);
  }
  FiniteOpca A = semilattice_opca(Poset::from_pairs(n, pairs), names);
  A.subject = "B" + std::to_string(n);
  return A;
}

Aks one_stack_aks() {
  Aks K;
  K.subject = "one-stack";
  K.term_names = {"q"};
  K.stack_names = {"p"};
  K.dot = {0};
  K.push = {0};
  K.kof = {0};
  K.qp = 1;
  K.pole = {1};
  return K;
}

}  // namespace pcalab
