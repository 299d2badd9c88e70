#include "regseq/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "regseq/intmath.hpp"

namespace regseq {

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorKind::InvalidParameter, "rational with zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [](std::string_view piece) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size())
      fail(ErrorKind::InvalidInput, "not a rational: '" + std::string(piece) + "'");
    return value;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  return Rational(parse_int(std::string_view(text).substr(0, slash)),
                  parse_int(std::string_view(text).substr(slash + 1)));
}

Rational Rational::half() const { return Rational(num_, checked_mul(den_, 2)); }

Rational Rational::twice() const { return Rational(checked_mul(num_, 2), den_); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int cmp(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num()) * b.den();
  __int128 rhs = static_cast<__int128>(b.num()) * a.den();
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

int cmp_mul(const Rational& r, std::int64_t x, std::int64_t y) {
  __int128 lhs = static_cast<__int128>(r.num()) * x;
  __int128 rhs = static_cast<__int128>(y) * r.den();
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

std::int64_t ceil_mul(const Rational& r, std::int64_t x) {
  if (r.num() < 0 || x < 0) fail(ErrorKind::InvalidParameter, "ceil_mul domain");
  __int128 prod = static_cast<__int128>(r.num()) * x;
  __int128 q = (prod + r.den() - 1) / r.den();
  if (q > INT64_MAX) fail(ErrorKind::OverflowError, "ceil_mul overflow");
  return static_cast<std::int64_t>(q);
}

// ---------------------------------------------------------------------------
// SortedSeq
// ---------------------------------------------------------------------------

SortedSeq::SortedSeq(std::vector<std::int64_t> elements) : elems_(std::move(elements)) {
  for (std::size_t i = 1; i < elems_.size(); ++i)
    if (elems_[i - 1] >= elems_[i])
      fail(ErrorKind::InvalidInput, "sequence not strictly increasing at index " + std::to_string(i));
}

SortedSeq SortedSeq::from_unsorted(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  return SortedSeq(std::move(values));
}

SortedSeq SortedSeq::dedup(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  SortedSeq out;
  out.elems_ = std::move(values);
  return out;
}

SortedSeq SortedSeq::interval(std::int64_t lo, std::int64_t hi) {
  SortedSeq out;
  if (hi >= lo) {
    out.elems_.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t v = lo; v <= hi; ++v) out.elems_.push_back(v);
  }
  return out;
}

std::int64_t SortedSeq::min() const {
  if (elems_.empty()) fail(ErrorKind::EmptyInput, "min of empty sequence");
  return elems_.front();
}

std::int64_t SortedSeq::max() const {
  if (elems_.empty()) fail(ErrorKind::EmptyInput, "max of empty sequence");
  return elems_.back();
}

bool SortedSeq::contains(std::int64_t value) const {
  return std::binary_search(elems_.begin(), elems_.end(), value);
}

bool SortedSeq::subset_of(const SortedSeq& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

std::optional<GapStats> gap_stats(const SortedSeq& seq) {
  if (seq.size() < 2) return std::nullopt;
  GapStats stats{INT64_MAX, 0};
  for (std::int64_t i = 0; i + 1 < seq.size(); ++i) {
    std::int64_t gap = checked_sub(seq[i + 1], seq[i]);
    stats.min_gap = std::min(stats.min_gap, gap);
    stats.max_gap = std::max(stats.max_gap, gap);
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Witnesses, coverings, colourings
// ---------------------------------------------------------------------------

bool witness_valid_for(const SortedSeq& seq, const RegularityWitness& witness) {
  if (witness.min_gap < 1 || witness.min_gap > witness.max_gap) return false;
  if (cmp_mul(witness.ratio_bound, witness.min_gap, witness.max_gap) < 0) return false;
  auto stats = gap_stats(seq);
  if (!stats) return true;  // no gaps to compare against
  return stats->min_gap == witness.min_gap && stats->max_gap == witness.max_gap;
}

std::int64_t Covering::interval_index(std::int64_t value) const {
  if (value < start || value >= start + count * length) return 0;
  return (value - start) / length + 1;
}

void validate(const Colouring& colouring) {
  if (colouring.ground_size < 1) fail(ErrorKind::InvalidInput, "colouring of empty ground set");
  if (colouring.colour_count < 1) fail(ErrorKind::InvalidInput, "colouring with no colours");
  if (static_cast<std::int64_t>(colouring.colours.size()) != colouring.ground_size)
    fail(ErrorKind::InvalidInput, "colouring length does not match ground size");
  for (std::int32_t c : colouring.colours)
    if (c < 1 || c > colouring.colour_count)
      fail(ErrorKind::InvalidInput, "colour index out of range");
}

SortedSeq colour_class(const Colouring& colouring, std::int64_t colour) {
  std::vector<std::int64_t> members;
  for (std::int64_t p = 1; p <= colouring.ground_size; ++p)
    if (colouring.colour_of(p) == colour) members.push_back(p);
  return SortedSeq(std::move(members));
}

const char* to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::CoveringExtract: return "covering-extract";
    case TraceKind::RecurseInterval: return "recurse-interval";
    case TraceKind::RuzsaColour: return "ruzsa-colour";
    case TraceKind::FiberDescend: return "fiber-descend";
    case TraceKind::DenseBranch: return "dense-branch";
    case TraceKind::Lift: return "lift";
    case TraceKind::Refine: return "refine";
    case TraceKind::Convexify: return "convexify";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

std::optional<RegularityWitness> check_regular(const SortedSeq& seq, const Rational& ratio) {
  if (cmp(ratio, Rational(1)) < 0)
    fail(ErrorKind::InvalidParameter, "gap ratio bound must be at least 1, got " + ratio.str());
  auto stats = gap_stats(seq);
  if (!stats) return RegularityWitness{1, 1, ratio};
  if (cmp_mul(ratio, stats->min_gap, stats->max_gap) < 0) return std::nullopt;
  return RegularityWitness{stats->min_gap, stats->max_gap, ratio};
}

bool check_convex(const SortedSeq& seq) {
  if (seq.size() <= 2) return true;
  std::int64_t prev_gap = checked_sub(seq[1], seq[0]);
  for (std::int64_t i = 2; i < seq.size(); ++i) {
    std::int64_t gap = checked_sub(seq[i], seq[i - 1]);
    if (gap <= prev_gap) return false;
    prev_gap = gap;
  }
  return true;
}

SortedSeq difference_set(const SortedSeq& seq) {
  if (seq.empty()) fail(ErrorKind::EmptyInput, "difference set of empty sequence");
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(seq.size()) * static_cast<std::size_t>(seq.size()));
  for (std::int64_t a : seq)
    for (std::int64_t b : seq) values.push_back(checked_sub(a, b));
  return SortedSeq::dedup(std::move(values));
}

std::vector<DifferencePair> difference_pairs(const SortedSeq& seq) {
  if (seq.empty()) fail(ErrorKind::EmptyInput, "difference pairs of empty sequence");
  std::map<std::int64_t, DifferencePair> table;
  for (std::int64_t a : seq)  // ascending minuend, so first insert wins
    for (std::int64_t b : seq)
      table.try_emplace(checked_sub(a, b), DifferencePair{checked_sub(a, b), a, b});
  std::vector<DifferencePair> out;
  out.reserve(table.size());
  for (auto& [value, pair] : table) out.push_back(pair);
  return out;
}

SortedSeq translate(const SortedSeq& seq, std::int64_t offset) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(seq.size()));
  for (std::int64_t a : seq) out.push_back(checked_add(a, offset));
  return SortedSeq(std::move(out));
}

}  // namespace regseq
