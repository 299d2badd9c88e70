#pragma once

#include <optional>

#include "regseq/core.hpp"

namespace regseq {

// Result of an extremal-subsequence solve. The subsequence is always a
// subset of the input attaining `length`, and passes the checker named by
// the witness. Among optimal subsets, solvers return the lexicographically
// smallest element list.
struct SolveResult {
  std::int64_t length = 0;
  SortedSeq subsequence;
  SubseqWitness witness;
};

// Longest subset whose consecutive gaps fit in [X, ratio*X] for some X.
// Exact for every input: the optimal subset's minimum gap is one of the
// pairwise differences of the input, so a longest-chain pass per candidate
// gap is complete. When decision_threshold is given, returns early with the
// first subset found of size > threshold (its witness is valid but not
// necessarily the lexicographic optimum).
SolveResult exact_r_l(const SortedSeq& seq, const Rational& ratio,
                      std::optional<std::int64_t> decision_threshold = std::nullopt);

// Longest subset with strictly increasing consecutive differences
// (non-strict mode relaxes to non-decreasing). Chain DP over ordered pairs
// of consecutive chosen elements.
SolveResult exact_convex(const SortedSeq& seq, bool strict = true);

// Exhaustive oracles: enumerate every subset. Guarded to |seq| <= 20
// (TooLarge beyond). Used to validate the exact solvers, so they must stay
// independent of them.
SolveResult brute_r_l(const SortedSeq& seq, const Rational& ratio);
SolveResult brute_convex(const SortedSeq& seq);

}  // namespace regseq
