#pragma once

#include <cstdint>
#include <string>

#include "regseq/errors.hpp"

// Overflow-checked 64-bit arithmetic. Everything here throws
// DomainError(OverflowError) instead of wrapping.

namespace regseq {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    fail(ErrorKind::OverflowError, std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    fail(ErrorKind::OverflowError, std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    fail(ErrorKind::OverflowError, std::to_string(a) + " * " + std::to_string(b));
  return out;
}

// base^exp for base >= 1, exp >= 0.
inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  if (base < 1 || exp < 0) fail(ErrorKind::InvalidParameter, "checked_pow domain");
  std::int64_t acc = 1;
  for (std::int64_t i = 0; i < exp; ++i) acc = checked_mul(acc, base);
  return acc;
}

// True iff base^exp >= bound, never overflowing (saturates early).
inline bool pow_at_least(std::int64_t base, std::int64_t exp, std::int64_t bound) {
  if (bound <= 1) return true;
  if (base <= 1) return exp >= 0 && base >= bound;  // 1^exp = 1 < bound
  std::int64_t acc = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (acc >= (bound + base - 1) / base) return true;  // acc*base >= bound
    acc *= base;
  }
  return acc >= bound;
}

// True iff base^exp <= bound, never overflowing. base >= 1, exp >= 0.
inline bool pow_at_most(std::int64_t base, std::int64_t exp, std::int64_t bound) {
  if (bound < 1) return false;
  if (base == 1) return true;
  std::int64_t acc = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (acc > bound / base) return false;  // acc*base > bound
    acc *= base;
  }
  return acc <= bound;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0, a >= 0
  return a / b + (a % b != 0 ? 1 : 0);
}

inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) fail(ErrorKind::InvalidParameter, "isqrt of negative");
  std::int64_t lo = 0, hi = 3037000499LL;  // floor(sqrt(2^63 - 1))
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// Floor k-th root with the exactness guarantee r^k <= n < (r+1)^k.
inline std::int64_t iroot(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) fail(ErrorKind::InvalidParameter, "iroot domain");
  if (k == 1) return n;
  std::int64_t lo = 1, hi = n;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (pow_at_most(mid, k, n))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace regseq
