#include "pcalab/k2_nat.hpp"

#include <stdexcept>

namespace pcalab::k2 {

namespace {

void append_gamma(Nat& v, const Nat& x) {
  const Nat w = x + 1;
  const unsigned L = boost::multiprecision::msb(w);
  v <<= L;
  v <<= (L + 1);
  v |= w;
}

// Walks the gamma blocks below the leading bit, most significant first.
template <class Sink>
bool walk(const Nat& code, Sink&& sink) {
  if (code <= 0) return false;
  long pos = static_cast<long>(boost::multiprecision::msb(code)) - 1;
  while (pos >= 0) {
    long zeros = 0;
    while (pos >= 0 && !boost::multiprecision::bit_test(code, static_cast<unsigned>(pos))) {
      ++zeros;
      --pos;
    }
    if (pos < 0 || pos - zeros < 0) return false;
    const long low = pos - zeros;
    Nat w = code >> static_cast<unsigned>(low);
    w &= (Nat(1) << static_cast<unsigned>(zeros + 1)) - 1;
    pos = low - 1;
    if (!sink(Nat(w - 1))) return true;
  }
  return true;
}

}  // namespace

Nat encode(const Seq& xs) {
  Nat v = 1;
  for (const Nat& x : xs) {
    if (x < 0) throw std::invalid_argument("negative sequence item");
    append_gamma(v, x);
  }
  return v;
}

Nat encode_cons(const Nat& head, const Seq& rest, std::size_t count) {
  Nat v = 1;
  append_gamma(v, head);
  for (std::size_t i = 0; i < count; ++i) append_gamma(v, rest[i]);
  return v;
}

std::optional<Seq> decode(const Nat& code) {
  Seq out;
  if (!walk(code, [&](Nat x) {
        out.push_back(std::move(x));
        return true;
      }))
    return std::nullopt;
  return out;
}

std::optional<Seq> decode_prefix(const Nat& code, std::size_t limit) {
  auto full = decode(code);
  if (!full) return std::nullopt;
  if (full->size() > limit) full->resize(limit);
  return full;
}

std::size_t code_length(const Nat& code) {
  auto d = decode(code);
  return d ? d->size() : 0;
}

std::string to_string(const Nat& n) { return n.str(); }

Nat parse_nat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  for (char c : s)
    if (c < '0' || c > '9') throw std::invalid_argument("not a natural number: " + s);
  return Nat(s);
}

}  // namespace pcalab::k2
