#pragma once

#include <string>

#include "semlat/semilattice.hpp"

namespace semlat {

// The five-element lattice 0 < b, c < d < 1 with a unique co-atom d.
// Labels: 0=bottom, 1=b, 2=c, 3=d, 4=top.
Semilattice makeDiamondWithTail();

struct FigureCheck {
  std::string text;
  bool matched = false;
};

// Recomputes the cov1 labels of the 5-chain and of makeDiamondWithTail()
// and compares them with (25,17,11,7,5), (25,13,13,7,5) and 65 > 63.
// `perturb` corrupts one computed value, as a negative control.
FigureCheck reproduceFigures(bool perturb = false);

}  // namespace semlat
