#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stern/checked_arith.hpp"

// Binary-expansion utilities: digit reversal, run-length profiles and
// continuant numerators.

namespace stern {

// MSB-first bits of a proper base-2 expansion; nonempty, leading bit 1.
struct BinaryWord {
  std::vector<std::uint8_t> bits;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
};

inline BinaryWord bits(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bits: n must be positive");
  BinaryWord w;
  w.bits.reserve(std::bit_width(n));
  for (int k = std::bit_width(n) - 1; k >= 0; --k) {
    w.bits.push_back(static_cast<std::uint8_t>((n >> k) & 1u));
  }
  return w;
}

// The integer read off the binary expansion of n backwards. Trailing zeros
// of n become leading zeros and vanish, so the result is always odd.
inline std::uint64_t reverse(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("reverse: n must be positive");
  std::uint64_t r = 0;
  while (n > 0) {
    r = (r << 1) | (n & 1u);
    n >>= 1;
  }
  return r;
}

// Lengths of the maximal alternating blocks of 1s and 0s, MSB-first. Only
// defined for odd n, so the profile starts and ends with a 1-block and has
// odd length.
struct RunProfile {
  std::vector<std::uint32_t> runs;

  friend bool operator==(const RunProfile&, const RunProfile&) = default;
};

inline RunProfile reversed(const RunProfile& p) {
  return RunProfile{{p.runs.rbegin(), p.runs.rend()}};
}

inline RunProfile runs(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("runs: n must be positive");
  if ((n & 1u) == 0) throw std::invalid_argument("runs: n must be odd");
  RunProfile p;
  std::uint8_t cur = 1;
  std::uint32_t len = 1;
  for (int k = std::bit_width(n) - 2; k >= 0; --k) {
    const std::uint8_t b = static_cast<std::uint8_t>((n >> k) & 1u);
    if (b == cur) {
      ++len;
    } else {
      p.runs.push_back(len);
      cur = b;
      len = 1;
    }
  }
  p.runs.push_back(len);
  return p;
}

// Numerator p_r of the continued fraction [k_0; k_1, ..., k_r], computed
// by p_{-1} = 1, p_0 = k_0, p_t = k_t * p_{t-1} + p_{t-2}.
inline std::uint64_t continuant_numerator(const RunProfile& ks) {
  if (ks.runs.empty()) {
    throw std::invalid_argument("continuant_numerator: empty run profile");
  }
  std::uint64_t prev = 1;
  std::uint64_t cur = ks.runs.front();
  for (std::size_t t = 1; t < ks.runs.size(); ++t) {
    const std::uint64_t next = checked_add_u64(checked_mul_u64(ks.runs[t], cur), prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

inline bool is_power_of_two(std::uint64_t t) { return std::has_single_bit(t); }

}  // namespace stern
