#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "golden.hpp"
#include "stern/all.hpp"

using stern::enumerate_expansions;
using stern::expansion_value;
using stern::h_counts_enum;
using stern::h_counts_recurrence;
using stern::HCount;
using stern::HyperExpansion;
using stern::tables_equal;
using stern::to_bipoly;

namespace {

std::vector<std::string> as_strings(const std::vector<HyperExpansion>& es) {
  std::vector<std::string> out;
  out.reserve(es.size());
  for (const HyperExpansion& e : es) out.push_back(stern::to_string(e));
  return out;
}

}  // namespace

TEST_CASE("enumeration base cases") {
  const auto none = enumerate_expansions(0);
  REQUIRE(none.size() == 1);
  CHECK(none[0].digits.empty());
  CHECK(stern::to_string(none[0]) == "()");

  CHECK(as_strings(enumerate_expansions(1)) == std::vector<std::string>{"1"});
  CHECK(as_strings(enumerate_expansions(2)) == std::vector<std::string>{"10", "2"});
}

TEST_CASE("enumeration matches the worked example lists") {
  CHECK(as_strings(enumerate_expansions(18)) == golden::expansions_of_18());
  CHECK(as_strings(enumerate_expansions(20)) == golden::expansions_of_20());
  CHECK(as_strings(enumerate_expansions(24)) == golden::expansions_of_24());
}

TEST_CASE("every expansion is proper, exact and listed once") {
  for (std::uint64_t m = 0; m <= 400; ++m) {
    const auto es = enumerate_expansions(m);
    CHECK(es.size() == stern::stern_value(m + 1));
    for (std::size_t k = 0; k < es.size(); ++k) {
      CHECK(expansion_value(es[k]) == m);
      if (!es[k].digits.empty()) CHECK(es[k].digits.front() != 0);
      if (k > 0) CHECK(es[k - 1] < es[k]);
    }
  }
}

TEST_CASE("expansion_value") {
  CHECK(expansion_value(HyperExpansion{}) == 0);
  CHECK(expansion_value(HyperExpansion{{1, 1, 2, 2}}) == 18);
  CHECK(expansion_value(HyperExpansion{{1, 2, 1, 2}}) == 20);
}

TEST_CASE("h table from enumeration") {
  const HCount h21 = h_counts_enum(21);
  CHECK(h21.counts == golden::h21_entries());
  CHECK(h21.total() == 8);
  CHECK(h21.at(2, 1) == 2);
  CHECK(h21.at(5, 5) == 0);
  CHECK(stern::table_text(h21) == "{(2,0):1, (2,1):2, (1,2):2, (0,3):1, (2,2):1, (1,3):1}");

  CHECK(h_counts_enum(1).counts == std::vector<stern::HEntry>{{0, 0, 1}});
  CHECK(h_counts_enum(2).counts == std::vector<stern::HEntry>{{0, 0, 1}});
}

TEST_CASE("h table from the recurrence") {
  CHECK(tables_equal(h_counts_recurrence(21), h_counts_enum(21)));
  for (int k = 0; k <= 16; ++k) {
    const HCount h = h_counts_recurrence(std::uint64_t{1} << k);
    CHECK(h.counts == std::vector<stern::HEntry>{{0, 0, 1}});
  }

  const HCount h19 = h_counts_recurrence(19);
  const HCount h25 = h_counts_recurrence(25);
  CHECK(tables_equal(h19, h25));
  CHECK(h19.total() == 7);
}

TEST_CASE("enumeration and recurrence agree over a range") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    INFO("n = " << n);
    const HCount he = h_counts_enum(n);
    CHECK(tables_equal(he, h_counts_recurrence(n)));
    CHECK(to_bipoly(he) == stern::stern_poly(n));
    CHECK(he.total() == stern::stern_value(n));
  }
}

TEST_CASE("the (0,0) entry marks powers of two") {
  for (std::uint64_t t = 1; t <= 4096; ++t) {
    const std::uint64_t want = stern::is_power_of_two(t) ? 1 : 0;
    CHECK(h_counts_recurrence(t).at(0, 0) == want);
  }
}

TEST_CASE("digit tallies stay within the expansion length bound") {
  for (std::uint64_t n = 2; n <= 512; ++n) {
    for (const stern::HEntry& e : h_counts_recurrence(n).counts) {
      CHECK(e.i + e.j <= std::bit_width(n - 1));
    }
  }
}
