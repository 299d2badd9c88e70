#include "regseq/covering.hpp"

#include <algorithm>
#include <cassert>

#include "regseq/intmath.hpp"

namespace regseq {

namespace {

// Per-interval element counts for intervals of `length` anchored at
// `start`; assumes seq fits inside the first `count` intervals.
std::vector<std::int64_t> count_occupancies(const SortedSeq& seq, std::int64_t start,
                                            std::int64_t length, std::int64_t count) {
  std::vector<std::int64_t> occ(static_cast<std::size_t>(count), 0);
  for (std::int64_t value : seq) {
    std::int64_t j = (value - start) / length;  // 0-based
    assert(j >= 0 && j < count);
    ++occ[static_cast<std::size_t>(j)];
  }
  return occ;
}

}  // namespace

Covering build_covering(const SortedSeq& seq, std::int64_t interval_len) {
  if (seq.empty()) fail(ErrorKind::EmptyInput, "cannot cover an empty sequence");
  if (interval_len < 1) fail(ErrorKind::InvalidParameter, "interval length must be positive");
  std::int64_t span = checked_add(checked_sub(seq.max(), seq.min()), 1);
  std::int64_t count = ceil_div(span, interval_len);
  Covering covering;
  covering.start = seq.min();
  covering.length = interval_len;
  covering.count = count;
  covering.occupancies = count_occupancies(seq, covering.start, interval_len, count);
  for (std::int64_t j = 0; j < count; ++j) {
    if (covering.occupancies[static_cast<std::size_t>(j)] == 0)
      fail(ErrorKind::NoValidCovering,
           "interval " + std::to_string(j + 1) + " of " + std::to_string(count) +
               " contains no element");
  }
  covering.occupancy =
      *std::max_element(covering.occupancies.begin(), covering.occupancies.end());
  return covering;
}

namespace {

void validate_covering(const SortedSeq& seq, const Covering& covering) {
  if (seq.empty() || covering.count < 1 || covering.length < 1 || covering.occupancy < 1)
    fail(ErrorKind::InvalidCovering, "malformed covering");
  if (static_cast<std::int64_t>(covering.occupancies.size()) != covering.count)
    fail(ErrorKind::InvalidCovering, "occupancy list does not match interval count");
  if (seq.min() < covering.start ||
      seq.max() >= covering.start + covering.count * covering.length)
    fail(ErrorKind::InvalidCovering, "sequence not contained in the covering's intervals");
  auto actual = count_occupancies(seq, covering.start, covering.length, covering.count);
  for (std::int64_t j = 0; j < covering.count; ++j) {
    std::int64_t occ = actual[static_cast<std::size_t>(j)];
    if (occ != covering.occupancies[static_cast<std::size_t>(j)])
      fail(ErrorKind::InvalidCovering, "stale occupancy at interval " + std::to_string(j + 1));
    if (occ < 1 || occ > covering.occupancy)
      fail(ErrorKind::InvalidCovering, "occupancy bound violated at interval " + std::to_string(j + 1));
  }
}

// Smallest element of seq with value >= lo; index into seq, or -1.
std::int64_t first_at_least(const SortedSeq& seq, std::int64_t lo) {
  const auto& e = seq.elements();
  auto it = std::lower_bound(e.begin(), e.end(), lo);
  return it == e.end() ? -1 : static_cast<std::int64_t>(it - e.begin());
}

}  // namespace

ExtractionResult extract_from_covering(const SortedSeq& seq, const Covering& covering) {
  validate_covering(seq, covering);
  std::vector<std::int64_t> picked;
  for (std::int64_t j = 1; j <= covering.count; j += 3) {
    std::int64_t idx = first_at_least(seq, covering.interval_start(j));
    assert(idx >= 0);  // interval non-empty by validation
    assert(seq[idx] < covering.interval_start(j) + covering.length);
    picked.push_back(seq[idx]);
  }
  ExtractionResult result;
  result.sequence = SortedSeq(std::move(picked));
  // Gaps lie in [2l, 4l], so the 2-regularity check cannot fail.
  result.witness = check_regular(result.sequence, Rational(2)).value();
  result.claimed_lower_bound = ceil_div(covering.count, 3);
  result.trace.push_back(TraceStep{TraceKind::CoveringExtract,
                                   {{"l", covering.length},
                                    {"k", covering.count},
                                    {"M", covering.occupancy},
                                    {"X", 2 * covering.length}}});
  return result;
}

Covering cover_regular(const SortedSeq& seq, const Rational& ratio,
                       const RegularityWitness& witness) {
  auto checked = check_regular(seq, ratio);
  if (!checked || !witness_valid_for(seq, witness) ||
      cmp(witness.ratio_bound, ratio) != 0)
    fail(ErrorKind::InvalidWitness, "sequence is not " + ratio.str() + "-regular as witnessed");
  std::int64_t interval_len = ceil_mul(ratio, witness.min_gap);
  Covering covering = build_covering(seq, interval_len);
  // Gaps <= ratio*X <= interval length, so no interval could be empty; and
  // at most ceil(ratio) elements with pairwise gaps >= X fit in one.
  if (covering.occupancy > ceil_mul(ratio, 1))
    fail(ErrorKind::InvalidCovering, "occupancy exceeds ceil(ratio)");
  return covering;
}

ExtractionResult refine_regularity(const SortedSeq& seq, const RegularityWitness& witness,
                                   std::int64_t l) {
  if (l < 2) fail(ErrorKind::InvalidParameter, "refinement parameter must be at least 2");
  if (!check_regular(seq, Rational(2)) || !witness_valid_for(seq, witness) ||
      cmp(witness.ratio_bound, Rational(2)) != 0)
    fail(ErrorKind::InvalidWitness, "sequence is not 2-regular as witnessed");

  const std::int64_t x = witness.min_gap;
  const std::int64_t q = 2 * l + 1;
  Covering covering = build_covering(seq, checked_mul(2, x));  // gaps <= 2X: never empty
  std::vector<std::int64_t> picked;
  for (std::int64_t j = 1; j <= covering.count; j += q) {
    std::int64_t idx = first_at_least(seq, covering.interval_start(j));
    assert(idx >= 0);
    picked.push_back(seq[idx]);
  }

  ExtractionResult result;
  result.sequence = SortedSeq(std::move(picked));
  Rational refined(l + 1, l);
  auto refined_witness = check_regular(result.sequence, refined);
  assert(refined_witness.has_value());  // gaps in [(q-1)2X, (q+1)2X]
  result.witness = *refined_witness;
  result.claimed_lower_bound = ceil_div(seq.size(), 2 * q);
  result.trace.push_back(
      TraceStep{TraceKind::Refine, {{"q", q}, {"X", x}, {"l", l}, {"k", covering.count}}});
  return result;
}

}  // namespace regseq
