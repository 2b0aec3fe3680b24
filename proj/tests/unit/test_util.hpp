#pragma once

#include <string>
#include <utility>
#include <vector>

#include <knotsum/orbit.hpp>
#include <knotsum/prime_table.hpp>

namespace knotsum::test {

#ifndef KNOTSUM_PRIMES9
#error "KNOTSUM_PRIMES9 must be defined by the build"
#endif
#ifndef KNOTSUM_TEST6
#error "KNOTSUM_TEST6 must be defined by the build"
#endif

inline const PrimeTable& primes9() {
  static PrimeTable table = PrimeTable::load(KNOTSUM_PRIMES9);
  return table;
}

inline const PrimeTable& test6() {
  static PrimeTable table = PrimeTable::load(KNOTSUM_TEST6);
  return table;
}

inline FactorList factors(const PrimeTable& table,
                          std::vector<std::pair<std::string, int>> spec) {
  FactorList P;
  for (auto& [name, mult] : spec) {
    P.entries.push_back(Factor{&table.require(name), mult});
  }
  return P;
}

// Flavor vector from element indices in the fixed Gamma order.
inline FlavorVector flavors(std::vector<std::vector<int>> idx) {
  FlavorVector x;
  for (auto& block : idx) {
    std::vector<GammaElement> b;
    for (int i : block) b.push_back(gamma_from_index(i));
    x.blocks.push_back(std::move(b));
  }
  return x;
}

}  // namespace knotsum::test
