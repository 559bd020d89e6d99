#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcalab/opca.hpp"
#include "pcalab/report.hpp"
#include "pcalab/term.hpp"

namespace pcalab {

/// Closed K/S terms for pairing, Curry numerals and sequence coding, plus
/// the four sequence combinators:
///   b n [a0..ak] <= an,  c n [a0..ak] <= [an..ak],
///   d a [a0..an-1] <= [a,a0..an-1],  t a <= [a].
///
/// Numerals: 0 = I, n+1 = p F n. A sequence is p n (p a0 (p a1 (... nil)))
/// with nil = I. Recursion on numerals goes through a guarded fixpoint
/// combinator so that every partial application has a normal form.
struct SequenceKit {
  TermPtr I, T, F;
  TermPtr p, p0, p1;
  TermPtr zero, pred, succ;
  TermPtr nil;
  TermPtr Z;
  TermPtr b, c, d, t;

  TermPtr numeral(std::size_t n) const;
  TermPtr seq(const std::vector<TermPtr>& items) const;
  /// seq over constants naming host elements.
  TermPtr seq_of(const std::vector<Elem>& items) const;
};

/// The kit is independent of any host; built once.
const SequenceKit& sequence_kit();

/// The kit evaluated inside a finite opca.
struct EvaluatedKit {
  Elem b = kUndefined, c = kUndefined, d = kUndefined, t = kUndefined;
  Elem p = kUndefined, nil = kUndefined;
  std::vector<Elem> numerals;  // numerals[n] for n <= max_len

  /// Value of [a0..an-1], or nullopt if some application is undefined.
  std::optional<Elem> code(const FiniteOpca& A, const std::vector<Elem>& items) const;
};

struct DerivedKit {
  EvaluatedKit kit;
  Reports reports;
  bool ok() const { return all_pass(reports); }
};

/// Evaluates the kit in `A` and checks that b, c, d, t land in the filter and
/// that the four clauses hold for all sequences of length <= max_len.
DerivedKit derive_sequence_kit(const FiniteOpca& A, std::size_t max_len);

/// Term-model check of the four clauses for one sequence of symbolic
/// constants: each left side must normalize to the normal form of the right
/// side within `fuel` contractions. `n` indexes clauses (i) and (ii).
/// Returns an empty string on success, otherwise a description.
std::string check_sequence_clauses_term_model(const std::vector<TermPtr>& items, std::size_t n,
                                              std::uint64_t fuel);

}  // namespace pcalab
