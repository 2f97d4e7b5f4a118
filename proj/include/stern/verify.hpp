#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "stern/bipoly.hpp"
#include "stern/digits.hpp"
#include "stern/hyperbinary.hpp"
#include "stern/stern_poly.hpp"

// Range checkers that turn the library's identities into falsification
// harnesses: each one tests a property instance by instance and reports
// counterexamples as data rather than aborting. Checkers may fan out over
// worker threads; reports are merged and sorted so the result is
// independent of scheduling.

namespace stern {

inline constexpr std::size_t kDefaultFailLimit = 10;

struct Failure {
  std::uint64_t key = 0;  // numeric sort key, typically the instance index
  std::string instance;
  std::string expected;
  std::string actual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerifyReport {
  std::uint64_t checked = 0;
  std::uint64_t failure_count = 0;   // total failures found
  std::vector<Failure> failures;     // sorted by key, capped at fail_limit
  std::size_t fail_limit = kDefaultFailLimit;
  std::chrono::milliseconds elapsed{0};

  bool ok() const { return failure_count == 0; }
};

struct CheckOptions {
  unsigned workers = 1;
  std::size_t fail_limit = kDefaultFailLimit;
};

// Per-worker failure collector: counts every failure, stores the first
// fail_limit of them.
class FailureSink {
 public:
  explicit FailureSink(std::size_t limit) : limit_(limit) {}

  void report(std::uint64_t key, std::string instance, std::string expected,
              std::string actual) {
    ++total_;
    if (failures_.size() < limit_) {
      failures_.push_back({key, std::move(instance), std::move(expected), std::move(actual)});
    }
  }

  std::uint64_t total() const { return total_; }
  std::vector<Failure>& failures() { return failures_; }

 private:
  std::size_t limit_;
  std::uint64_t total_ = 0;
  std::vector<Failure> failures_;
};

// Runs body(index, sink) for every index in [0, count), optionally split
// into contiguous blocks across worker threads. Failures are merged,
// sorted by (key, instance) and capped, so the report does not depend on
// the worker count.
template <typename Fn>
VerifyReport run_indexed_check(std::uint64_t count, const CheckOptions& opt, Fn&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t limit = std::max<std::size_t>(opt.fail_limit, 1);
  unsigned workers = std::max(1u, opt.workers);
  if (count < workers) workers = count == 0 ? 1 : static_cast<unsigned>(count);

  std::vector<FailureSink> sinks;
  sinks.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) sinks.emplace_back(limit);

  if (workers == 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i, sinks[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        const std::uint64_t lo = count * w / workers;
        const std::uint64_t hi = count * (w + 1) / workers;
        try {
          for (std::uint64_t i = lo; i < hi; ++i) body(i, sinks[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  VerifyReport rep;
  rep.checked = count;
  rep.fail_limit = limit;
  for (FailureSink& s : sinks) {
    rep.failure_count += s.total();
    rep.failures.insert(rep.failures.end(), std::make_move_iterator(s.failures().begin()),
                        std::make_move_iterator(s.failures().end()));
  }
  std::sort(rep.failures.begin(), rep.failures.end(), [](const Failure& a, const Failure& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.instance < b.instance;
  });
  if (rep.failures.size() > limit) rep.failures.resize(limit);
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return rep;
}

enum class ReversalMode { polynomial, integer };

// s_n = s_{n^R}, either as polynomials (exact term maps) or as integer
// values (usable on much larger ranges).
inline VerifyReport check_reversal_range(std::uint64_t lo, std::uint64_t hi, ReversalMode mode,
                                         const CheckOptions& opt = {}) {
  if (lo == 0 || hi < lo) {
    throw std::invalid_argument("check_reversal_range: need 1 <= lo <= hi");
  }
  return run_indexed_check(hi - lo + 1, opt, [lo, mode](std::uint64_t idx, FailureSink& sink) {
    const std::uint64_t n = lo + idx;
    const std::uint64_t r = reverse(n);
    const std::string instance = "n=" + std::to_string(n) + " vs n^R=" + std::to_string(r);
    if (mode == ReversalMode::integer) {
      const std::uint64_t a = stern_value(n);
      const std::uint64_t b = stern_value(r);
      if (a != b) sink.report(n, instance, std::to_string(a), std::to_string(b));
    } else {
      const BiPoly p = stern_poly(n);
      const BiPoly q = stern_poly(r);
      if (p != q) sink.report(n, instance, canonical_text(p), canonical_text(q));
    }
  });
}

namespace detail {

inline std::string row_text(const PolyRow2& r) {
  return "(" + canonical_text(r.a) + ", " + canonical_text(r.b) + ")";
}

}  // namespace detail

// The eight 1x2-matrix identities behind the digit-reversal induction:
// for each ordered pair (M1, M2) of the digit matrices there are
// polynomial coefficients (alpha, beta) with
//   (x y) M1 M2 = alpha (x y) + beta (x y) M2
// and the same relation for (1 1) against the transposed matrices. The
// matrices are parameters so tests can corrupt them and watch the checker
// fail.
inline VerifyReport check_lemma_identities(const PolyMatrix2& a, const PolyMatrix2& b,
                                           const CheckOptions& opt = {}) {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  struct Case {
    const char* name;
    const PolyMatrix2* m1;
    const PolyMatrix2* m2;
    BiPoly alpha;
    BiPoly beta;
  };
  const Case cases[] = {
      {"AA", &a, &a, -y, y + BiPoly::constant(1)},
      {"AB", &a, &b, x, y},
      {"BA", &b, &a, y, x},
      {"BB", &b, &b, -x, x + BiPoly::constant(1)},
  };
  return run_indexed_check(8, opt, [&](std::uint64_t idx, FailureSink& sink) {
    const Case& c = cases[idx / 2];
    const bool transposed = (idx % 2) != 0;
    PolyRow2 start = transposed ? PolyRow2{BiPoly::constant(1), BiPoly::constant(1)}
                                : PolyRow2{BiPoly::x(), BiPoly::y()};
    const PolyMatrix2 m1 = transposed ? c.m1->transposed() : *c.m1;
    const PolyMatrix2 m2 = transposed ? c.m2->transposed() : *c.m2;
    const PolyRow2 lhs = (start * m1) * m2;
    const PolyRow2 rhs = c.alpha * start + c.beta * (start * m2);
    if (!(lhs == rhs)) {
      const std::string instance =
          std::string(c.name) + (transposed ? ".transposed" : ".row");
      sink.report(idx, instance, detail::row_text(rhs), detail::row_text(lhs));
    }
  });
}

inline VerifyReport check_lemma_identities(const CheckOptions& opt = {}) {
  return check_lemma_identities(transition_matrix(0), transition_matrix(1), opt);
}

// One instance of the reflection identity:
//   (x y) A(e_1)...A(e_k) (1 1)^T  ==  (1 1) tA(e_1)...tA(e_k) (x y)^T.
inline bool check_reflection_product(const std::vector<std::uint8_t>& eps,
                                     const PolyMatrix2& a, const PolyMatrix2& b) {
  const PolyMatrix2 ta = a.transposed();
  const PolyMatrix2 tb = b.transposed();
  PolyRow2 left{BiPoly::x(), BiPoly::y()};
  PolyRow2 right{BiPoly::constant(1), BiPoly::constant(1)};
  for (const std::uint8_t d : eps) {
    left = left * (d ? b : a);
    right = right * (d ? tb : ta);
  }
  const BiPoly lhs = left.a + left.b;
  const BiPoly rhs = right.a * BiPoly::x() + right.b * BiPoly::y();
  return lhs == rhs;
}

inline bool check_reflection_product(const std::vector<std::uint8_t>& eps) {
  return check_reflection_product(eps, transition_matrix(0), transition_matrix(1));
}

namespace detail {

// Words ordered by length then value; index k maps to the word whose
// length is bit_width(k+1)-1 and whose bits are the low digits of
// k+1-2^length, MSB-first.
inline std::vector<std::uint8_t> word_at_index(std::uint64_t idx) {
  const int len = std::bit_width(idx + 1) - 1;
  const std::uint64_t value = idx + 1 - (std::uint64_t{1} << len);
  std::vector<std::uint8_t> word;
  word.reserve(static_cast<std::size_t>(len));
  for (int k = len - 1; k >= 0; --k) {
    word.push_back(static_cast<std::uint8_t>((value >> k) & 1u));
  }
  return word;
}

inline std::string word_text(const std::vector<std::uint8_t>& word) {
  if (word.empty()) return "()";
  std::string s;
  for (const std::uint8_t d : word) s += static_cast<char>('0' + d);
  return s;
}

}  // namespace detail

// Exhaustive reflection check over every digit word of length <= max_len
// (2^(max_len+1) - 1 words, including the empty one).
inline VerifyReport check_reflection_range(unsigned max_len, const PolyMatrix2& a,
                                           const PolyMatrix2& b, const CheckOptions& opt = {}) {
  if (max_len > 62) throw std::invalid_argument("check_reflection_range: max_len too large");
  const std::uint64_t count = (std::uint64_t{1} << (max_len + 1)) - 1;
  return run_indexed_check(count, opt, [&](std::uint64_t idx, FailureSink& sink) {
    const std::vector<std::uint8_t> word = detail::word_at_index(idx);
    if (!check_reflection_product(word, a, b)) {
      sink.report(idx, "word=" + detail::word_text(word), "both sides equal",
                  "sides differ");
    }
  });
}

inline VerifyReport check_reflection_range(unsigned max_len, const CheckOptions& opt = {}) {
  return check_reflection_range(max_len, transition_matrix(0), transition_matrix(1), opt);
}

// For each n: the polynomial assembled from enumerated expansions of n-1
// must equal s_n, and the enumerated table must equal the recurrence
// table.
inline VerifyReport check_oracle_equivalence(std::uint64_t lo, std::uint64_t hi,
                                             const CheckOptions& opt = {}) {
  if (lo == 0 || hi < lo) {
    throw std::invalid_argument("check_oracle_equivalence: need 1 <= lo <= hi");
  }
  return run_indexed_check(hi - lo + 1, opt, [lo](std::uint64_t idx, FailureSink& sink) {
    const std::uint64_t n = lo + idx;
    const HCount he = h_counts_enum(n);
    const HCount hr = h_counts_recurrence(n);
    const BiPoly from_enum = to_bipoly(he);
    const BiPoly direct = stern_poly(n);
    if (from_enum != direct) {
      sink.report(n, "n=" + std::to_string(n) + " (enumeration vs s_n)",
                  canonical_text(direct), canonical_text(from_enum));
    }
    if (!tables_equal(he, hr)) {
      sink.report(n, "n=" + std::to_string(n) + " (enumeration vs recurrence)",
                  table_text(he), table_text(hr));
    }
  });
}

// For odd n: s_n(1,1) equals the continuant numerator of the run profile,
// and the numerator is invariant under reversing the profile.
inline VerifyReport check_continuant_range(std::uint64_t lo, std::uint64_t hi,
                                           const CheckOptions& opt = {}) {
  if (lo == 0 || hi < lo) {
    throw std::invalid_argument("check_continuant_range: need 1 <= lo <= hi");
  }
  const std::uint64_t first = (lo & 1u) ? lo : lo + 1;
  const std::uint64_t count = first > hi ? 0 : (hi - first) / 2 + 1;
  return run_indexed_check(count, opt, [first](std::uint64_t idx, FailureSink& sink) {
    const std::uint64_t n = first + 2 * idx;
    const RunProfile profile = runs(n);
    const std::uint64_t value = stern_value(n);
    const std::uint64_t numerator = continuant_numerator(profile);
    if (value != numerator) {
      sink.report(n, "n=" + std::to_string(n) + " (stern vs continuant)",
                  std::to_string(value), std::to_string(numerator));
    }
    const std::uint64_t mirrored = continuant_numerator(reversed(profile));
    if (numerator != mirrored) {
      sink.report(n, "n=" + std::to_string(n) + " (profile reversal)",
                  std::to_string(numerator), std::to_string(mirrored));
    }
  });
}

// h_t(0,0) is 1 exactly when t is a power of two, otherwise the entry is
// absent.
inline VerifyReport check_power_of_two_clause(std::uint64_t hi, const CheckOptions& opt = {}) {
  if (hi == 0) throw std::invalid_argument("check_power_of_two_clause: need hi >= 1");
  return run_indexed_check(hi, opt, [](std::uint64_t idx, FailureSink& sink) {
    const std::uint64_t t = idx + 1;
    const std::uint64_t got = h_counts_recurrence(t).at(0, 0);
    const std::uint64_t want = is_power_of_two(t) ? 1 : 0;
    if (got != want) {
      sink.report(t, "t=" + std::to_string(t) + " (h_t(0,0))", std::to_string(want),
                  std::to_string(got));
    }
  });
}

// Human-readable rendering. Deliberately excludes elapsed time so the
// text for a fixed command line is byte-identical across runs.
inline std::string render_text(const VerifyReport& rep) {
  std::string out =
      "checked: " + std::to_string(rep.checked) + ", failures: " + std::to_string(rep.failure_count) + "\n";
  for (const Failure& f : rep.failures) {
    out += "  " + f.instance + ": expected " + f.expected + ", got " + f.actual + "\n";
  }
  if (rep.failure_count > rep.failures.size()) {
    out += "  (showing first " + std::to_string(rep.failures.size()) + " of " +
           std::to_string(rep.failure_count) + " failures)\n";
  }
  return out;
}

}  // namespace stern
