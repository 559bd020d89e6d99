#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pcalab::k2 {

using Nat = boost::multiprecision::cpp_int;
using Seq = std::vector<Nat>;

/// Sequence code: a leading 1 bit followed by the Elias gamma code of x+1 for
/// each item. The empty sequence is 1; numbers that do not parse (0, or a
/// truncated gamma block) are not codes.
Nat encode(const Seq& xs);
std::optional<Seq> decode(const Nat& code);

/// Decodes at most `limit` items; nullopt when the full code is malformed.
std::optional<Seq> decode_prefix(const Nat& code, std::size_t limit);

/// Item count of a code, 0 for non-codes.
std::size_t code_length(const Nat& code);

/// [head, rest...] without building the whole vector.
Nat encode_cons(const Nat& head, const Seq& rest, std::size_t count);

std::string to_string(const Nat& n);
/// Decimal digits only; throws std::invalid_argument otherwise.
Nat parse_nat(const std::string& s);

}  // namespace pcalab::k2
