// Lists the proper hyperbinary expansions of m with their digit tallies
// and assembles the generating polynomial term by term: an expansion with
// i twos and j zeros contributes x^i*y^j, and the sum is s_{m+1}(x,y).
//
// Usage: hyperbinary_demo [m]

#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "stern/all.hpp"

int main(int argc, char** argv) {
  const std::uint64_t m = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20;

  stern::BiPoly sum;
  for (const stern::HyperExpansion& e : stern::enumerate_expansions(m)) {
    std::uint32_t twos = 0, zeros = 0;
    for (const std::uint8_t d : e.digits) {
      if (d == 2) ++twos;
      if (d == 0) ++zeros;
    }
    sum += stern::BiPoly::monomial(twos, zeros);
    std::cout << stern::to_string(e) << "  ->  "
              << stern::canonical_text(stern::BiPoly::monomial(twos, zeros)) << '\n';
  }

  std::cout << "\nsum:        " << stern::canonical_text(sum) << '\n';
  std::cout << "s_" << m + 1 << "(x,y):  " << stern::canonical_text(stern::stern_poly(m + 1))
            << '\n';
  return sum == stern::stern_poly(m + 1) ? 0 : 1;
}
