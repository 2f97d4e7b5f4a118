#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stern/bipoly.hpp"
#include "stern/checked_arith.hpp"

// Hyperbinary expansions: representations of an integer as sum(d_i * 2^i)
// with digits in {0,1,2}. Only proper expansions are handled, i.e. the
// empty expansion or one whose leading digit is nonzero. h_n(i,j) counts
// the proper expansions of n-1 with i digits equal to 2 and j digits
// equal to 0; this module computes it both by brute-force enumeration
// (the oracle) and by the counting recurrence.

namespace stern {

// MSB-first digit sequence over {0,1,2}; empty or leading digit nonzero.
struct HyperExpansion {
  std::vector<std::uint8_t> digits;

  friend bool operator==(const HyperExpansion&, const HyperExpansion&) = default;
  friend auto operator<=>(const HyperExpansion&, const HyperExpansion&) = default;
};

inline std::uint64_t expansion_value(const HyperExpansion& e) {
  std::uint64_t v = 0;
  for (const std::uint8_t d : e.digits) {
    v = checked_add_u64(checked_mul_u64(v, 2), d);
  }
  return v;
}

// Digit-string form, e.g. "10020"; the empty expansion renders "()".
inline std::string to_string(const HyperExpansion& e) {
  if (e.digits.empty()) return "()";
  std::string s;
  s.reserve(e.digits.size());
  for (const std::uint8_t d : e.digits) s += static_cast<char>('0' + d);
  return s;
}

namespace detail {

// Builds digits LSB-up: the parity of the remainder forces the low digit
// to be 1 when odd, and branches between 0 and 2 when even. The leading
// digit ends up nonzero because the 0-branch never empties the remainder.
inline void enumerate_rec(std::uint64_t m, std::vector<std::uint8_t>& acc,
                          std::vector<HyperExpansion>& out) {
  if (m == 0) {
    HyperExpansion e;
    e.digits.assign(acc.rbegin(), acc.rend());
    out.push_back(std::move(e));
    return;
  }
  if (m & 1u) {
    acc.push_back(1);
    enumerate_rec((m - 1) / 2, acc, out);
    acc.pop_back();
  } else {
    acc.push_back(0);
    enumerate_rec(m / 2, acc, out);
    acc.pop_back();
    acc.push_back(2);
    enumerate_rec((m - 2) / 2, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

// All proper hyperbinary expansions of m, in lexicographic order of their
// MSB-first digit strings (a prefix sorts before its extensions). The
// list size equals s_{m+1}(1,1), so full listings are practical for
// m up to roughly 10^6; beyond that use the counting recurrence.
inline std::vector<HyperExpansion> enumerate_expansions(std::uint64_t m) {
  std::vector<HyperExpansion> out;
  std::vector<std::uint8_t> acc;
  detail::enumerate_rec(m, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

// One table entry: h_n(i, j) = count.
struct HEntry {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint64_t count = 0;

  friend bool operator==(const HEntry&, const HEntry&) = default;
};

// Sparse table of h_n(i,j); entries in canonical term order, counts >= 1.
struct HCount {
  std::uint64_t n = 0;
  std::vector<HEntry> counts;

  std::uint64_t at(std::uint32_t i, std::uint32_t j) const {
    for (const HEntry& e : counts) {
      if (e.i == i && e.j == j) return e.count;
    }
    return 0;
  }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const HEntry& e : counts) t = checked_add_u64(t, e.count);
    return t;
  }

  friend bool operator==(const HCount&, const HCount&) = default;
};

// Table comparison that ignores which index produced the table.
inline bool tables_equal(const HCount& a, const HCount& b) { return a.counts == b.counts; }

inline std::string table_text(const HCount& h) {
  std::string s = "{";
  bool first = true;
  for (const HEntry& e : h.counts) {
    if (!first) s += ", ";
    first = false;
    s += "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "):" + std::to_string(e.count);
  }
  s += "}";
  return s;
}

inline BiPoly to_bipoly(const HCount& h) {
  BiPoly p;
  for (const HEntry& e : h.counts) {
    p += BiPoly::monomial(e.i, e.j, checked_to_int64(e.count));
  }
  return p;
}

inline bool hentry_less(const HEntry& a, const HEntry& b) {
  const std::uint64_t da = std::uint64_t{a.i} + a.j;
  const std::uint64_t db = std::uint64_t{b.i} + b.j;
  if (da != db) return da < db;
  return a.i > b.i;
}

// Oracle: tally (digit-2 count, digit-0 count) over the enumerated
// expansions of n-1.
inline HCount h_counts_enum(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("h_counts_enum: n must be positive");
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> tally;
  for (const HyperExpansion& e : enumerate_expansions(n - 1)) {
    std::uint32_t twos = 0, zeros = 0;
    for (const std::uint8_t d : e.digits) {
      if (d == 2) ++twos;
      if (d == 0) ++zeros;
    }
    ++tally[{twos, zeros}];
  }
  HCount h;
  h.n = n;
  h.counts.reserve(tally.size());
  for (const auto& [key, count] : tally) h.counts.push_back({key.first, key.second, count});
  std::sort(h.counts.begin(), h.counts.end(), hentry_less);
  return h;
}

namespace detail {

// The odd step of the counting recurrence, for index 2n+1 from the tables
// of n and n+1:
//   (i,0) <- lo(i-1,0)              for i >= 1
//   (0,j) <- hi(0,j-1)              for j >= 1
//   (i,j) <- lo(i-1,j) + hi(i,j-1)  for i,j >= 1
//   (0,0) <- 0
// i.e. lo shifted in i merged with hi shifted in j; a uniform shift keeps
// canonical order, so this is a linear merge.
inline std::vector<HEntry> h_odd_step(const std::vector<HEntry>& lo,
                                      const std::vector<HEntry>& hi) {
  std::vector<HEntry> out;
  out.reserve(lo.size() + hi.size());
  auto a = lo.begin();
  auto b = hi.begin();
  const auto shift_a = [](const HEntry& e) { return HEntry{e.i + 1, e.j, e.count}; };
  const auto shift_b = [](const HEntry& e) { return HEntry{e.i, e.j + 1, e.count}; };
  while (a != lo.end() && b != hi.end()) {
    const HEntry ea = shift_a(*a);
    const HEntry eb = shift_b(*b);
    if (ea.i == eb.i && ea.j == eb.j) {
      out.push_back({ea.i, ea.j, checked_add_u64(ea.count, eb.count)});
      ++a;
      ++b;
    } else if (hentry_less(ea, eb)) {
      out.push_back(ea);
      ++a;
    } else {
      out.push_back(eb);
      ++b;
    }
  }
  for (; a != lo.end(); ++a) out.push_back(shift_a(*a));
  for (; b != hi.end(); ++b) out.push_back(shift_b(*b));
  return out;
}

}  // namespace detail

// h_n(i,j) from the counting recurrence alone, by the same pair descent
// as the polynomial side: the pair (h_m, h_{m+1}) advances along the
// binary digits of n in O(log n) table merges. Base h_1 = h_2 = {(0,0):1}.
inline HCount h_counts_recurrence(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("h_counts_recurrence: n must be positive");
  std::vector<HEntry> lo{{0, 0, 1}};
  std::vector<HEntry> hi{{0, 0, 1}};
  for (int k = std::bit_width(n) - 2; k >= 0; --k) {
    std::vector<HEntry> mid = detail::h_odd_step(lo, hi);
    if ((n >> k) & 1u) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return {n, std::move(lo)};
}

}  // namespace stern
