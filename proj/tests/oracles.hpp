#pragma once

// Reference implementations used only by the tests. They follow the
// definitions directly and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rel = std::vector<std::vector<bool>>;  // rel[a][b]: a <= b

inline bool is_partial_order(const Rel& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!r[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && r[a][b] && r[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (r[a][b] && r[b][c] && !r[a][c]) return false;
    }
  }
  return true;
}

inline std::optional<std::size_t> meet(const Rel& r, std::size_t a, std::size_t b) {
  const std::size_t n = r.size();
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < n; ++c) {
    if (!r[c][a] || !r[c][b]) continue;
    bool greatest = true;
    for (std::size_t d = 0; d < n; ++d)
      if (r[d][a] && r[d][b] && !r[d][c]) greatest = false;
    if (greatest) best = c;
  }
  return best;
}

inline bool is_lattice(const Rel& r) {
  const std::size_t n = r.size();
  Rel op(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) op[a][b] = r[b][a];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!meet(r, a, b) || !meet(op, a, b)) return false;
  return true;
}

// Lexicographically least adjacency string over all relabelings.
inline std::string canonical(const Rel& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) s += r[p[a]][p[b]] ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Isomorphism classes of lattices on n elements, by brute force over all
// relations whose strict part respects the labeling 0..n-1.
inline std::set<std::string> lattice_classes(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::set<std::string> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    Rel r(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a) r[a][a] = true;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (m >> i & 1) r[slots[i].first][slots[i].second] = true;
    if (is_partial_order(r) && is_lattice(r)) out.insert(canonical(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sequence coding and K2, straight from the definitions.

using Nat = boost::multiprecision::cpp_int;

// '1', then for each item x the Elias gamma code of x + 1: floor(log2(x+1))
// zeros followed by the binary digits of x + 1.
inline std::string code_bits(const std::vector<Nat>& xs) {
  std::string bits = "1";
  for (const Nat& x : xs) {
    Nat v = x + 1;
    std::string bin;
    while (v > 0) {
      bin.insert(bin.begin(), static_cast<char>('0' + static_cast<int>(v % 2)));
      v /= 2;
    }
    bits += std::string(bin.size() - 1, '0') + bin;
  }
  return bits;
}

inline Nat from_bits(const std::string& bits) {
  Nat v = 0;
  for (char c : bits) v = v * 2 + (c - '0');
  return v;
}

inline Nat code(const std::vector<Nat>& xs) { return from_bits(code_bits(xs)); }

inline std::optional<std::vector<Nat>> decode(const Nat& c) {
  if (c == 0) return std::nullopt;
  std::string bits;
  for (Nat v = c; v > 0; v /= 2) bits.insert(bits.begin(), static_cast<char>('0' + static_cast<int>(v % 2)));
  std::vector<Nat> out;
  std::size_t i = 1;
  while (i < bits.size()) {
    std::size_t z = 0;
    while (i < bits.size() && bits[i] == '0') ++z, ++i;
    if (i + z + 1 > bits.size()) return std::nullopt;
    out.push_back(from_bits(bits.substr(i, z + 1)) - 1);
    i += z + 1;
  }
  return out;
}

using Fn = std::function<Nat(const Nat&)>;

// (alpha beta)(n): the least N with alpha([n, beta(0..N-1)]) > 0, answer - 1.
inline std::optional<Nat> dialogue(const Fn& alpha, const Fn& beta, const Nat& n, std::size_t max_n) {
  std::vector<Nat> q{n};
  for (std::size_t N = 0; N <= max_n; ++N) {
    if (N > 0) q.push_back(beta(N - 1));
    const Nat a = alpha(code(q));
    if (a > 0) return a - 1;
  }
  return std::nullopt;
}

// The two-phase recipe: alpha([j, pi(0..k)]) for k <= N' (and the bare [j]
// first), then extensions of the full prefix by length, lexicographically,
// items below `bound`.
inline std::optional<Nat> tau(const Fn& alpha, const std::vector<Nat>& pi, const Nat& j, std::size_t max_ext,
                              unsigned bound) {
  std::vector<Nat> q{j};
  if (Nat a = alpha(code(q)); a > 0) return a - 1;
  for (const Nat& x : pi) {
    q.push_back(x);
    if (Nat a = alpha(code(q)); a > 0) return a - 1;
  }
  for (std::size_t len = 1; len <= max_ext; ++len) {
    std::vector<unsigned> ext(len, 0);
    for (;;) {
      std::vector<Nat> e = q;
      for (unsigned x : ext) e.push_back(x);
      if (Nat a = alpha(code(e)); a > 0) return a - 1;
      std::size_t i = len;
      while (i > 0 && ext[i - 1] + 1 == bound) ext[--i] = 0;
      if (i == 0) break;
      ++ext[i - 1];
    }
  }
  return std::nullopt;
}

}  // namespace oracle
