#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "stern/bipoly.hpp"
#include "stern/checked_arith.hpp"

// The bivariate Stern polynomials s_n(x,y), defined by
//
//   s_1 = 1,  s_{2n} = s_n,  s_{2n+1} = x*s_n + y*s_{n+1},
//
// computed two independent ways: by descending the binary expansion with
// the pair recurrence, and by the digit transition-matrix product. The
// integer specialization s_n(1,1) is the Stern diatomic sequence.

namespace stern {

// 2x2 matrix over the BiPoly ring, row-major.
class PolyMatrix2 {
 public:
  PolyMatrix2() = default;
  PolyMatrix2(BiPoly e00, BiPoly e01, BiPoly e10, BiPoly e11)
      : e_{std::move(e00), std::move(e01), std::move(e10), std::move(e11)} {}

  const BiPoly& at(int r, int c) const { return e_[static_cast<std::size_t>(r * 2 + c)]; }
  BiPoly& at(int r, int c) { return e_[static_cast<std::size_t>(r * 2 + c)]; }

  PolyMatrix2 transposed() const { return {e_[0], e_[2], e_[1], e_[3]}; }

  friend PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b) {
    PolyMatrix2 out;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        out.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
      }
    }
    return out;
  }

  friend bool operator==(const PolyMatrix2&, const PolyMatrix2&) = default;

 private:
  std::array<BiPoly, 4> e_;
};

// 1x2 row vector over BiPoly.
struct PolyRow2 {
  BiPoly a, b;

  friend PolyRow2 operator*(const PolyRow2& r, const PolyMatrix2& m) {
    return {r.a * m.at(0, 0) + r.b * m.at(1, 0), r.a * m.at(0, 1) + r.b * m.at(1, 1)};
  }

  friend PolyRow2 operator*(const BiPoly& s, const PolyRow2& r) { return {s * r.a, s * r.b}; }

  friend PolyRow2 operator+(const PolyRow2& p, const PolyRow2& q) {
    return {p.a + q.a, p.b + q.b};
  }

  friend bool operator==(const PolyRow2&, const PolyRow2&) = default;
};

// Digit transition matrices advancing (s_n, s_{n+1}) along binary digits:
// A(0) = [[1,0],[x,y]] and A(1) = [[x,y],[0,1]].
inline PolyMatrix2 transition_matrix(unsigned d) {
  if (d > 1) throw std::invalid_argument("transition_matrix: digit must be 0 or 1");
  if (d == 0) {
    return {BiPoly::constant(1), BiPoly::zero(), BiPoly::x(), BiPoly::y()};
  }
  return {BiPoly::x(), BiPoly::y(), BiPoly::zero(), BiPoly::constant(1)};
}

// The pair (s_n, s_{n+1}).
struct SternPair {
  BiPoly lo;  // s_n
  BiPoly hi;  // s_{n+1}
  std::uint64_t index = 1;
};

// Pair descent over the bits of n below the leading one, O(log n)
// polynomial operations: (s_1, s_2) = (1, 1), then bit 0 maps
// (p, q) -> (p, x*p + y*q) and bit 1 maps (p, q) -> (x*p + y*q, q).
inline SternPair stern_pair(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("stern_pair: n must be positive");
  BiPoly lo = BiPoly::constant(1);
  BiPoly hi = BiPoly::constant(1);
  for (int k = std::bit_width(n) - 2; k >= 0; --k) {
    BiPoly mid = mul_monomial(lo, 1, 0) + mul_monomial(hi, 0, 1);
    if ((n >> k) & 1u) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return {std::move(lo), std::move(hi), n};
}

inline BiPoly stern_poly(std::uint64_t n) { return stern_pair(n).lo; }

// s_n(x,y) as the product (x y) A(e_1) ... A(e_{v-1}) (1 1)^T over the
// interior binary digits of odd n (e_0 = e_v = 1 are the boundary),
// evaluated as a row-vector fold. n = 1 gives 1 by convention.
inline BiPoly stern_poly_matrix(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("stern_poly_matrix: n must be positive");
  if ((n & 1u) == 0) throw std::invalid_argument("stern_poly_matrix: n must be odd");
  if (n == 1) return BiPoly::constant(1);
  const PolyMatrix2 a0 = transition_matrix(0);
  const PolyMatrix2 a1 = transition_matrix(1);
  PolyRow2 row{BiPoly::x(), BiPoly::y()};
  const int top = std::bit_width(n) - 1;
  for (int k = 1; k < top; ++k) {
    row = row * (((n >> k) & 1u) ? a1 : a0);
  }
  return row.a + row.b;
}

// Integer Stern sequence via the same descent, no polynomials involved.
inline std::uint64_t stern_value(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("stern_value: n must be positive");
  std::uint64_t a = 1, b = 1;  // (s_1, s_2)
  for (int k = std::bit_width(n) - 2; k >= 0; --k) {
    if ((n >> k) & 1u) {
      a = checked_add_u64(a, b);
    } else {
      b = checked_add_u64(a, b);
    }
  }
  return a;
}

}  // namespace stern
