#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "semlat/semilattice.hpp"

namespace semlat::testing {

inline std::vector<Element> randomPermutation(int n, std::mt19937& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Independent isomorphism oracle: try every bijection.
inline bool isomorphicByPermutationSearch(const Semilattice& a, const Semilattice& b) {
  const int n = a.order();
  if (n != b.order()) return false;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s) {
      for (int t = 0; t < n && ok; ++t) ok = p[a.meet(s, t)] == b.meet(p[s], p[t]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace semlat::testing
