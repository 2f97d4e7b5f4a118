#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "stern/checked_arith.hpp"

// Sparse bivariate polynomials in x and y with exact signed integer
// coefficients. Values are immutable in spirit: every operation returns a
// new polynomial in canonical form (terms sorted, no zero coefficients),
// so structural equality is semantic equality.

namespace stern {

// One monomial c * x^i * y^j.
struct Term {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::int64_t c = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

// Canonical term order: total degree i+j ascending, ties by i descending.
inline bool term_less(const Term& a, const Term& b) {
  const std::uint64_t da = std::uint64_t{a.i} + a.j;
  const std::uint64_t db = std::uint64_t{b.i} + b.j;
  if (da != db) return da < db;
  return a.i > b.i;
}

inline bool same_exponents(const Term& a, const Term& b) {
  return a.i == b.i && a.j == b.j;
}

class BiPoly {
 public:
  BiPoly() = default;

  // Terms may be given in any order and with repeated exponent pairs;
  // the result is normalized.
  BiPoly(std::initializer_list<Term> ts) : terms_(ts) { normalize(); }

  static BiPoly zero() { return BiPoly{}; }

  static BiPoly constant(std::int64_t c) {
    BiPoly p;
    if (c != 0) p.terms_.push_back({0, 0, c});
    return p;
  }

  static BiPoly monomial(std::uint32_t i, std::uint32_t j, std::int64_t c = 1) {
    BiPoly p;
    if (c != 0) p.terms_.push_back({i, j, c});
    return p;
  }

  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Terms in canonical order.
  const std::vector<Term>& terms() const { return terms_; }

  std::int64_t coeff(std::uint32_t i, std::uint32_t j) const {
    const Term probe{i, j, 1};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_less);
    if (it != terms_.end() && same_exponents(*it, probe)) return it->c;
    return 0;
  }

  std::int64_t eval(std::int64_t xv, std::int64_t yv) const {
    std::int64_t acc = 0;
    for (const Term& t : terms_) {
      std::int64_t v = t.c;
      for (std::uint32_t k = 0; k < t.i; ++k) v = checked_mul(v, xv);
      for (std::uint32_t k = 0; k < t.j; ++k) v = checked_mul(v, yv);
      acc = checked_add(acc, v);
    }
    return acc;
  }

  BiPoly operator-() const {
    BiPoly p = *this;
    for (Term& t : p.terms_) t.c = checked_mul(t.c, -1);
    return p;
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
      if (same_exponents(*ia, *ib)) {
        const std::int64_t c = checked_add(ia->c, ib->c);
        if (c != 0) out.terms_.push_back({ia->i, ia->j, c});
        ++ia;
        ++ib;
      } else if (term_less(*ia, *ib)) {
        out.terms_.push_back(*ia++);
      } else {
        out.terms_.push_back(*ib++);
      }
    }
    out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
    out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
    return out;
  }

  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    // A single-term factor is an exponent shift plus a scale, which
    // preserves canonical order.
    if (b.terms_.size() == 1) return scaled_shift(a, b.terms_.front());
    if (a.terms_.size() == 1) return scaled_shift(b, a.terms_.front());
    BiPoly out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_) {
      for (const Term& tb : b.terms_) {
        out.terms_.push_back(
            {add_exponents(ta.i, tb.i), add_exponents(ta.j, tb.j), checked_mul(ta.c, tb.c)});
      }
    }
    out.normalize();
    return out;
  }

  BiPoly& operator+=(const BiPoly& rhs) { return *this = *this + rhs; }
  BiPoly& operator-=(const BiPoly& rhs) { return *this = *this - rhs; }
  BiPoly& operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  static std::uint32_t add_exponents(std::uint32_t a, std::uint32_t b) {
    const std::uint64_t s = std::uint64_t{a} + b;
    if (s > 0xffffffffull) throw std::overflow_error("exponent overflow");
    return static_cast<std::uint32_t>(s);
  }

  static BiPoly scaled_shift(const BiPoly& p, const Term& m) {
    BiPoly out;
    out.terms_.reserve(p.terms_.size());
    for (const Term& t : p.terms_) {
      out.terms_.push_back(
          {add_exponents(t.i, m.i), add_exponents(t.j, m.j), checked_mul(t.c, m.c)});
    }
    return out;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), term_less);
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      Term t = terms_[r++];
      while (r < terms_.size() && same_exponents(terms_[r], t)) {
        t.c = checked_add(t.c, terms_[r++].c);
      }
      if (t.c != 0) terms_[w++] = t;
    }
    terms_.resize(w);
  }

  std::vector<Term> terms_;  // canonical order, no zero coefficients

  friend BiPoly mul_monomial(const BiPoly& p, std::uint32_t i, std::uint32_t j);
};

// Multiply by x^i * y^j: shifts every exponent pair, canonical order kept.
inline BiPoly mul_monomial(const BiPoly& p, std::uint32_t i, std::uint32_t j) {
  return BiPoly::scaled_shift(p, Term{i, j, 1});
}

// Deterministic rendering in canonical term order. Unit coefficients and
// unit exponents are omitted, e.g. "y + x^2 + x*y"; the zero polynomial
// renders as "0".
inline std::string canonical_text(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool neg = t.c < 0;
    // Two's-complement safe magnitude (|INT64_MIN| does not fit in int64).
    const std::uint64_t mag =
        neg ? ~static_cast<std::uint64_t>(t.c) + 1 : static_cast<std::uint64_t>(t.c);
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    if (t.i > 0) {
      vars += 'x';
      if (t.i > 1) {
        vars += '^';
        vars += std::to_string(t.i);
      }
    }
    if (t.j > 0) {
      if (!vars.empty()) vars += '*';
      vars += 'y';
      if (t.j > 1) {
        vars += '^';
        vars += std::to_string(t.j);
      }
    }
    if (vars.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) {
        out += std::to_string(mag);
        out += '*';
      }
      out += vars;
    }
  }
  return out;
}

}  // namespace stern
