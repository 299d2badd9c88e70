#pragma once

#include "regseq/core.hpp"

namespace regseq {

// Covers a non-empty sequence by consecutive half-open intervals of the
// given length, anchored at its minimum. Fails with NoValidCovering
// (reporting the first empty interval index) when some interval misses the
// sequence; the recorded occupancy is the maximum interval count.
Covering build_covering(const SortedSeq& seq, std::int64_t interval_len);

// Checks that `covering` is a valid covering of `seq` (InvalidCovering
// otherwise), then picks the smallest element of `seq` in each interval
// I_j with j = 1 mod 3. The picks are 2-regular with gaps in [2l, 4l] and
// there are ceil(count/3) >= |seq|/(3M) of them.
ExtractionResult extract_from_covering(const SortedSeq& seq, const Covering& covering);

// For a sequence certified ratio-regular by `witness` (X = witness
// min_gap), builds the covering by intervals of length ceil(ratio*X). No
// interval can be empty and none holds more than ceil(ratio) elements.
Covering cover_regular(const SortedSeq& seq, const Rational& ratio,
                       const RegularityWitness& witness);

// Thins a 2-regular sequence to a (1 + 1/l)-regular one, l >= 2: cover by
// intervals of length 2X, keep the smallest element of every (2l+1)-th
// interval. Output size is at least |seq|/(4l+2).
ExtractionResult refine_regularity(const SortedSeq& seq, const RegularityWitness& witness,
                                   std::int64_t l);

}  // namespace regseq
