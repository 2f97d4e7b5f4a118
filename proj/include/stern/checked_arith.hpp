#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

// Exact-arithmetic helpers. Every operation either returns the exact
// result or throws std::overflow_error; silent wraparound never happens.

namespace stern {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("int64 overflow in addition");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("int64 overflow in multiplication");
  }
  return r;
}

inline std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("uint64 overflow in addition");
  }
  return r;
}

inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("uint64 overflow in multiplication");
  }
  return r;
}

inline std::int64_t checked_to_int64(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("uint64 value does not fit in int64");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace stern
