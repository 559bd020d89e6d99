#pragma once

// Generators shared by the K2 tests: each probe is an expression together
// with the same function written against the reference decoder.

#include <functional>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "pcalab/k2.hpp"

namespace probes {

using oracle::Nat;

// An element of the probe pool: expression text plus the same function
// written directly against the reference decoder.
struct Probe {
  const char* text;
  oracle::Fn fn;
};

inline Nat item(const Nat& code, std::size_t i) {
  const auto d = oracle::decode(code);
  return d && i < d->size() ? (*d)[i] : Nat(0);
}
inline std::size_t length(const Nat& code) {
  const auto d = oracle::decode(code);
  return d ? d->size() : 0;
}

inline const std::vector<Probe>& pool() {
  static const std::vector<Probe> P = {
      {"if len(x) < 2 then 0 else at(x,1) + 1",
       [](const Nat& x) { return length(x) < 2 ? Nat(0) : Nat(item(x, 1) + 1); }},
      {"if len(x) < 2 then 0 else at(x,0) + at(x,1) + 1",
       [](const Nat& x) { return length(x) < 2 ? Nat(0) : Nat(item(x, 0) + item(x, 1) + 1); }},
      {"1", [](const Nat&) { return Nat(1); }},
      {"if len(x) < 3 then 0 else at(x,1) * at(x,2) + 1",
       [](const Nat& x) { return length(x) < 3 ? Nat(0) : Nat(item(x, 1) * item(x, 2) + 1); }},
      {"at(x,0) * 2 + 1", [](const Nat& x) { return Nat(item(x, 0) * 2 + 1); }},
      {"x % 7", [](const Nat& x) { return Nat(x % 7); }},
      {"x * x + 1", [](const Nat& x) { return Nat(x * x + 1); }},
      {"x", [](const Nat& x) { return x; }},
      {"3", [](const Nat&) { return Nat(3); }},
      {"mu y < 5 . y * y > x", [](const Nat& x) {
         for (int y = 0; y < 5; ++y)
           if (Nat(y * y) > x) return Nat(y);
         return Nat(5);
       }},
  };
  return P;
}

inline pcalab::k2::ElemPtr elem(const Probe& p) { return pcalab::k2::from_expression(p.text, p.text); }

inline oracle::Fn applied(const oracle::Fn& a, const oracle::Fn& b) {
  return [a, b](const Nat& m) {
    auto v = oracle::dialogue(a, b, m, 64);
    if (!v) throw std::runtime_error("oracle diverged");
    return *v;
  };
}

}  // namespace probes
