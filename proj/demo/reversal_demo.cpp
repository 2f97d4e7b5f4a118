// Prints n, its binary digits, the digit reversal n^R and the polynomial
// s_n(x,y), illustrating that s_n and s_{n^R} always agree.
//
// Usage: reversal_demo [max]

#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "stern/all.hpp"

int main(int argc, char** argv) {
  const std::uint64_t max = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 32;

  std::cout << "n\tbits\tn^R\ts_n(1,1)\ts_n(x,y)\n";
  for (std::uint64_t n = 1; n <= max; ++n) {
    const stern::BinaryWord w = stern::bits(n);
    std::string bits;
    for (const std::uint8_t b : w.bits) bits += static_cast<char>('0' + b);

    const std::uint64_t r = stern::reverse(n);
    const stern::BiPoly p = stern::stern_poly(n);
    if (p != stern::stern_poly(r)) {
      std::cerr << "reversal identity failed at n=" << n << "\n";
      return 1;
    }
    std::cout << n << '\t' << bits << '\t' << r << '\t' << stern::stern_value(n) << "\t\t"
              << stern::canonical_text(p) << '\n';
  }
  return 0;
}
