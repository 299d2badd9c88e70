#include "regseq/solvers.hpp"

#include <algorithm>
#include <cassert>

#include "regseq/intmath.hpp"

namespace regseq {

namespace {

// Longest chain ending anywhere, with every consecutive gap in
// [min_gap, ratio*min_gap]. Returns per-element "longest chain starting at
// i" values, suitable both for the maximum and for lexicographic
// reconstruction (elements increase with index, so lexicographically
// smallest element list == smallest index list).
std::vector<std::int64_t> chains_from(const SortedSeq& a, std::int64_t min_gap,
                                      const Rational& ratio) {
  const std::int64_t n = a.size();
  std::vector<std::int64_t> g(static_cast<std::size_t>(n), 1);
  for (std::int64_t i = n - 2; i >= 0; --i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      std::int64_t gap = a[j] - a[i];
      if (cmp_mul(ratio, min_gap, gap) < 0) break;  // gap > ratio*min_gap, grows with j
      if (gap < min_gap) continue;
      g[static_cast<std::size_t>(i)] =
          std::max(g[static_cast<std::size_t>(i)], 1 + g[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

SortedSeq reconstruct_chain(const SortedSeq& a, std::int64_t min_gap, const Rational& ratio,
                            const std::vector<std::int64_t>& g, std::int64_t target) {
  const std::int64_t n = a.size();
  std::vector<std::int64_t> picked;
  std::int64_t cur = -1;
  for (std::int64_t i = 0; i < n; ++i)
    if (g[static_cast<std::size_t>(i)] >= target) {
      cur = i;
      break;
    }
  assert(cur >= 0);
  picked.push_back(a[cur]);
  std::int64_t remaining = target - 1;
  while (remaining > 0) {
    for (std::int64_t j = cur + 1; j < n; ++j) {
      std::int64_t gap = a[j] - a[cur];
      if (gap < min_gap) continue;
      if (cmp_mul(ratio, min_gap, gap) < 0) break;
      if (g[static_cast<std::size_t>(j)] >= remaining) {
        picked.push_back(a[j]);
        cur = j;
        break;
      }
    }
    --remaining;
  }
  return SortedSeq(std::move(picked));
}

SolveResult make_regular_result(const SortedSeq& subseq, const Rational& ratio) {
  auto witness = check_regular(subseq, ratio);
  assert(witness.has_value());
  return SolveResult{subseq.size(), subseq, *witness};
}

std::vector<std::int64_t> candidate_gaps(const SortedSeq& a) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < a.size(); ++i)
    for (std::int64_t j = i + 1; j < a.size(); ++j) out.push_back(checked_sub(a[j], a[i]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SolveResult exact_r_l(const SortedSeq& seq, const Rational& ratio,
                      std::optional<std::int64_t> decision_threshold) {
  if (cmp(ratio, Rational(1)) < 0)
    fail(ErrorKind::InvalidParameter, "gap ratio bound must be at least 1, got " + ratio.str());
  if (seq.size() <= 2) return make_regular_result(seq, ratio);
  checked_sub(seq.max(), seq.min());  // span fits => all pairwise gaps fit

  const auto candidates = candidate_gaps(seq);
  std::vector<std::int64_t> best_per_candidate(candidates.size(), 0);
  std::int64_t best = 2;  // every pair qualifies
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    auto g = chains_from(seq, candidates[c], ratio);
    std::int64_t local = *std::max_element(g.begin(), g.end());
    best_per_candidate[c] = local;
    if (local > best) {
      best = local;
      if (decision_threshold && best > *decision_threshold)
        return make_regular_result(reconstruct_chain(seq, candidates[c], ratio, g, best), ratio);
    }
  }

  if (best == 2) return make_regular_result(SortedSeq({seq[0], seq[1]}), ratio);

  // Lexicographic tie-break over every candidate attaining the optimum.
  std::optional<SortedSeq> winner;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (best_per_candidate[c] != best) continue;
    auto g = chains_from(seq, candidates[c], ratio);
    SortedSeq chain = reconstruct_chain(seq, candidates[c], ratio, g, best);
    if (!winner || chain.elements() < winner->elements()) winner = std::move(chain);
  }
  assert(winner.has_value());
  return make_regular_result(*winner, ratio);
}

namespace {

// Chain DP over ordered pairs (first, second) of consecutive chosen
// elements; pair_len[i*n + j] = longest convex chain whose first two
// elements are seq[i], seq[j].
struct ConvexTables {
  std::int64_t n = 0;
  std::vector<std::int32_t> pair_len;
  std::vector<std::int32_t> suffix_max;  // over k of pair_len[j*n + k], k >= index
  std::vector<std::int32_t> row_max;     // over j of pair_len[i*n + j]

  std::int32_t continuation(const SortedSeq& a, std::int64_t j, std::int64_t prev_gap,
                            bool strict) const {
    // Best pair_len[j*n + k] over k with (a[k] - a[j]) >/>= prev_gap.
    // Smallest qualifying k by binary search; gaps grow with k.
    std::int64_t lo = j + 1, hi = n;
    while (lo < hi) {
      std::int64_t mid = lo + (hi - lo) / 2;
      __int128 gap = static_cast<__int128>(a[mid]) - a[j];
      bool ok = strict ? gap > prev_gap : gap >= prev_gap;
      if (ok)
        hi = mid;
      else
        lo = mid + 1;
    }
    if (lo >= n) return 0;
    return suffix_max[static_cast<std::size_t>(j * n + lo)];
  }
};

ConvexTables build_convex_tables(const SortedSeq& a, bool strict) {
  ConvexTables t;
  const std::int64_t n = t.n = a.size();
  t.pair_len.assign(static_cast<std::size_t>(n * n), 0);
  t.suffix_max.assign(static_cast<std::size_t>(n * n), 0);
  t.row_max.assign(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = n - 2; i >= 0; --i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      std::int32_t cont = t.continuation(a, j, a[j] - a[i], strict);
      auto len = static_cast<std::int32_t>(cont > 0 ? cont + 1 : 2);
      t.pair_len[static_cast<std::size_t>(i * n + j)] = len;
      t.row_max[static_cast<std::size_t>(i)] =
          std::max(t.row_max[static_cast<std::size_t>(i)], len);
    }
    // Row i is complete; freeze its suffix maxima for queries from rows < i.
    std::int32_t running = 0;
    for (std::int64_t k = n - 1; k > i; --k) {
      running = std::max(running, t.pair_len[static_cast<std::size_t>(i * n + k)]);
      t.suffix_max[static_cast<std::size_t>(i * n + k)] = running;
    }
  }
  return t;
}

SortedSeq reconstruct_convex(const SortedSeq& a, const ConvexTables& t, std::int64_t target,
                             bool strict) {
  const std::int64_t n = t.n;
  std::vector<std::int64_t> picked;
  std::int64_t first = -1;
  for (std::int64_t i = 0; i < n && first < 0; ++i)
    if (t.row_max[static_cast<std::size_t>(i)] >= target) first = i;
  assert(first >= 0);
  std::int64_t second = -1;
  for (std::int64_t j = first + 1; j < n && second < 0; ++j)
    if (t.pair_len[static_cast<std::size_t>(first * n + j)] >= target) second = j;
  assert(second >= 0);
  picked.push_back(a[first]);
  picked.push_back(a[second]);
  std::int64_t prev = first, cur = second, remaining = target - 2;
  while (remaining > 0) {
    std::int64_t prev_gap = a[cur] - a[prev];
    for (std::int64_t k = cur + 1; k < n; ++k) {
      std::int64_t gap = a[k] - a[cur];
      if (strict ? gap <= prev_gap : gap < prev_gap) continue;
      if (t.pair_len[static_cast<std::size_t>(cur * n + k)] >= remaining + 1) {
        picked.push_back(a[k]);
        prev = cur;
        cur = k;
        break;
      }
    }
    --remaining;
  }
  return SortedSeq(std::move(picked));
}

bool gaps_convex(const std::vector<std::int64_t>& elems, bool strict) {
  for (std::size_t i = 2; i < elems.size(); ++i) {
    std::int64_t prev = elems[i - 1] - elems[i - 2];
    std::int64_t cur = elems[i] - elems[i - 1];
    if (strict ? cur <= prev : cur < prev) return false;
  }
  return true;
}

}  // namespace

SolveResult exact_convex(const SortedSeq& seq, bool strict) {
  if (seq.size() <= 2) return SolveResult{seq.size(), seq, ConvexityMarker{}};
  checked_sub(seq.max(), seq.min());
  auto tables = build_convex_tables(seq, strict);
  std::int64_t best = 2;
  for (std::int64_t i = 0; i < seq.size(); ++i)
    best = std::max<std::int64_t>(best, tables.row_max[static_cast<std::size_t>(i)]);
  SortedSeq witness = reconstruct_convex(seq, tables, best, strict);
  return SolveResult{best, std::move(witness), ConvexityMarker{}};
}

namespace {

constexpr std::int64_t kBruteLimit = 20;

template <typename Accept>
SolveResult brute_force(const SortedSeq& seq, Accept&& accept, SubseqWitness witness) {
  if (seq.size() > kBruteLimit)
    fail(ErrorKind::TooLarge, "exhaustive oracle limited to " + std::to_string(kBruteLimit) +
                                  " elements, got " + std::to_string(seq.size()));
  if (seq.size() >= 2) checked_sub(seq.max(), seq.min());
  const auto n = static_cast<std::uint32_t>(seq.size());
  std::int64_t best_len = 0;
  std::vector<std::int64_t> best;
  std::vector<std::int64_t> current;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    auto len = static_cast<std::int64_t>(__builtin_popcount(mask));
    if (len < best_len) continue;
    current.clear();
    for (std::uint32_t b = 0; b < n; ++b)
      if (mask & (1u << b)) current.push_back(seq[b]);
    if (!accept(current)) continue;
    if (len > best_len || (len == best_len && current < best)) {
      best_len = len;
      best = current;
    }
  }
  return SolveResult{best_len, SortedSeq(std::move(best)), std::move(witness)};
}

}  // namespace

SolveResult brute_r_l(const SortedSeq& seq, const Rational& ratio) {
  if (cmp(ratio, Rational(1)) < 0)
    fail(ErrorKind::InvalidParameter, "gap ratio bound must be at least 1, got " + ratio.str());
  auto accept = [&](const std::vector<std::int64_t>& elems) {
    if (elems.size() <= 2) return true;
    std::int64_t min_gap = INT64_MAX, max_gap = 0;
    for (std::size_t i = 1; i < elems.size(); ++i) {
      std::int64_t gap = elems[i] - elems[i - 1];
      min_gap = std::min(min_gap, gap);
      max_gap = std::max(max_gap, gap);
    }
    return cmp_mul(ratio, min_gap, max_gap) >= 0;
  };
  SolveResult result = brute_force(seq, accept, RegularityWitness{});
  auto witness = check_regular(result.subsequence, ratio);
  assert(witness.has_value());
  result.witness = *witness;
  return result;
}

SolveResult brute_convex(const SortedSeq& seq) {
  auto accept = [](const std::vector<std::int64_t>& elems) { return gaps_convex(elems, true); };
  return brute_force(seq, accept, ConvexityMarker{});
}

}  // namespace regseq
