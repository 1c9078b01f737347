#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semlat/semilattice.hpp"

namespace semlat {

// Row-major meet table of the canonically labeled semilattice.
using CanonicalKey = std::vector<std::uint8_t>;

struct CanonicalForm {
  Semilattice relabeled;  // bottom = 0, top = n-1
  CanonicalKey key;
  // labeling[e] is the canonical index of input element e.
  std::vector<Element> labeling;
};

// Partition refinement on structural invariants followed by a backtracking
// search for the least relabeled table among labelings that respect the
// refined cells. Deterministic and exact: equal keys iff isomorphic.
CanonicalForm canonicalize(const Semilattice& S);

bool isomorphic(const Semilattice& a, const Semilattice& b);

// One lowercase base-16 digit per table entry.
std::string keyToHex(const CanonicalKey& key);
// Throws Error(kInvalidArgument) on malformed input.
CanonicalKey keyFromHex(std::string_view hex);
Semilattice semilatticeFromKey(const CanonicalKey& key);

// Cell colors after refinement; exposed for tests.
std::vector<int> refinedColors(const Semilattice& S);

}  // namespace semlat
