#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "regseq/errors.hpp"

namespace regseq {

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

// Exact rational number, always reduced, denominator > 0. Gap-ratio bounds
// and densities are compared through this type so that borderline cases
// (max gap exactly L * min gap) never flip on rounding.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p" or "p/q".
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational half() const;
  Rational twice() const;

  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Sign of (a - b), exact.
int cmp(const Rational& a, const Rational& b);
// Sign of (r*x - y), exact; |x|, |y| may be anywhere in the int64 range.
int cmp_mul(const Rational& r, std::int64_t x, std::int64_t y);
// ceil(r*x) for r >= 0, x >= 0; throws on int64 overflow.
std::int64_t ceil_mul(const Rational& r, std::int64_t x);

// ---------------------------------------------------------------------------
// SortedSeq
// ---------------------------------------------------------------------------

// Strictly increasing finite sequence of 64-bit integers: the carrier for
// ground sets, difference sets and extracted subsequences. May be empty.
class SortedSeq {
 public:
  SortedSeq() = default;
  // Validates strict increase; throws DomainError(InvalidInput) otherwise.
  explicit SortedSeq(std::vector<std::int64_t> elements);

  // Sorts and rejects duplicates.
  static SortedSeq from_unsorted(std::vector<std::int64_t> values);
  // Sorts and drops duplicates.
  static SortedSeq dedup(std::vector<std::int64_t> values);
  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static SortedSeq interval(std::int64_t lo, std::int64_t hi);

  const std::vector<std::int64_t>& elements() const { return elems_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  std::int64_t operator[](std::int64_t i) const { return elems_[static_cast<std::size_t>(i)]; }
  std::int64_t min() const;  // throws EmptyInput on empty
  std::int64_t max() const;
  bool contains(std::int64_t value) const;
  bool subset_of(const SortedSeq& other) const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const SortedSeq& a, const SortedSeq& b) = default;

 private:
  std::vector<std::int64_t> elems_;
};

// Minimum and maximum consecutive difference; absent when size < 2.
struct GapStats {
  std::int64_t min_gap = 0;
  std::int64_t max_gap = 0;
};
std::optional<GapStats> gap_stats(const SortedSeq& seq);

// ---------------------------------------------------------------------------
// Witnesses
// ---------------------------------------------------------------------------

// Certifies that a sequence's consecutive gaps all lie in
// [min_gap, ratio_bound * min_gap]. For sequences shorter than 2 the gaps
// are vacuous and the conventional witness (1, 1) is used.
struct RegularityWitness {
  std::int64_t min_gap = 1;
  std::int64_t max_gap = 1;
  Rational ratio_bound{1};

  friend bool operator==(const RegularityWitness&, const RegularityWitness&) = default;
};

// True iff min_gap/max_gap equal the sequence's actual extreme gaps and
// max_gap <= ratio_bound * min_gap (exact comparison).
bool witness_valid_for(const SortedSeq& seq, const RegularityWitness& witness);

// Tags a subsequence whose validity claim is strict convexity rather than a
// gap-ratio bound.
struct ConvexityMarker {
  friend bool operator==(const ConvexityMarker&, const ConvexityMarker&) = default;
};

using SubseqWitness = std::variant<RegularityWitness, ConvexityMarker>;

// ---------------------------------------------------------------------------
// Covering
// ---------------------------------------------------------------------------

// Consecutive half-open intervals I_j = [start + (j-1)*length,
// start + j*length), j = 1..count, each holding between 1 and `occupancy`
// elements of the covered sequence, whose union contains it.
struct Covering {
  std::int64_t start = 0;
  std::int64_t length = 1;
  std::int64_t count = 0;
  std::int64_t occupancy = 0;
  std::vector<std::int64_t> occupancies;

  std::int64_t interval_start(std::int64_t j) const {  // 1-based
    return start + (j - 1) * length;
  }
  // 1-based index of the interval containing value; 0 when outside.
  std::int64_t interval_index(std::int64_t value) const;
};

// ---------------------------------------------------------------------------
// Colouring
// ---------------------------------------------------------------------------

// A partition of [N] = {1..N} into colour classes 1..r, one colour per
// point. Classes may be empty.
struct Colouring {
  std::int64_t ground_size = 0;                 // N
  std::int64_t colour_count = 0;                // r
  std::vector<std::int32_t> colours;            // colour of point i+1 at index i

  std::int32_t colour_of(std::int64_t point) const {  // point in 1..N
    return colours[static_cast<std::size_t>(point - 1)];
  }
};

void validate(const Colouring& colouring);  // throws InvalidInput
SortedSeq colour_class(const Colouring& colouring, std::int64_t colour);

// ---------------------------------------------------------------------------
// Extraction provenance
// ---------------------------------------------------------------------------

enum class TraceKind {
  CoveringExtract,
  RecurseInterval,
  RuzsaColour,
  FiberDescend,
  DenseBranch,
  Lift,
  Refine,
  Convexify,
};

const char* to_string(TraceKind kind);

struct TraceStep {
  TraceKind kind;
  std::map<std::string, std::int64_t> params;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// An extracted subsequence together with its validity witness, the size
// guarantee claimed for it, and the step-by-step provenance of how it was
// obtained. Lift steps always refer to elements of `sequence`, carrying a
// pair (minuend, subtrahend) from the original input set.
struct ExtractionResult {
  SortedSeq sequence;
  SubseqWitness witness;
  std::int64_t claimed_lower_bound = 0;
  std::vector<TraceStep> trace;
};

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

// Does every consecutive gap of `seq` fit in [X, ratio*X] for some X?
// Equivalently, is max gap <= ratio * min gap? Sequences of length <= 2
// qualify by convention. ratio must be >= 1 (InvalidParameter otherwise).
std::optional<RegularityWitness> check_regular(const SortedSeq& seq, const Rational& ratio);

// Strictly increasing consecutive differences; length <= 2 qualifies.
bool check_convex(const SortedSeq& seq);

// All pairwise differences a - a', sorted and deduplicated. Contains 0 and
// is symmetric about it. Throws EmptyInput on an empty argument.
SortedSeq difference_set(const SortedSeq& seq);

// One canonical witness pair per difference value: the pair with the
// smallest minuend. Sorted by value.
struct DifferencePair {
  std::int64_t value = 0;
  std::int64_t minuend = 0;
  std::int64_t subtrahend = 0;
};
std::vector<DifferencePair> difference_pairs(const SortedSeq& seq);

// Element-wise seq + offset, overflow-checked.
SortedSeq translate(const SortedSeq& seq, std::int64_t offset);

}  // namespace regseq
