#include "semlat/equations.hpp"

#include <bit>

namespace semlat {

namespace {

void checkM(int m) {
  if (m < 1 || m > kMaxVariables) {
    throw Error(ErrorCode::kMTooLarge,
                "MTooLarge: variable count " + std::to_string(m) + " outside [1," +
                    std::to_string(kMaxVariables) + "]");
  }
}

void checkElement(const Semilattice& S, int s) {
  if (s < 0 || s >= S.order()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "element " + std::to_string(s) + " outside order " +
                    std::to_string(S.order()));
  }
}

// Odometer over all n^m assignments.
template <typename F>
void forEachAssignment(int n, int m, F&& f) {
  std::array<Element, kMaxVariables> a{};
  while (true) {
    f(std::span<const Element>(a.data(), m));
    int i = 0;
    while (i < m && ++a[i] == n) a[i++] = 0;
    if (i == m) return;
  }
}

// products[T] = meet of the assigned values of the variables in T.
void subsetProducts(const Semilattice& S, std::span<const Element> a, int m,
                    std::array<Element, 1 << kMaxVariables>& products) {
  products[0] = S.top();
  for (int T = 1; T < (1 << m); ++T) {
    const int low = std::countr_zero(static_cast<unsigned>(T));
    products[T] = S.meet(products[T & (T - 1)], a[low]);
  }
}

}  // namespace

PairSet PairSet::all(int n) {
  PairSet r(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) r.insert(a, b);
  }
  return r;
}

std::vector<std::pair<Element, Element>> PairSet::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (contains(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::uint64_t equationCountFormula(int n, int m) {
  const std::uint64_t p = std::uint64_t{1} << m;
  return p * std::uint64_t(n) * std::uint64_t(n) * (p - 1);
}

void enumerateEquations(const Semilattice& S, int m,
                        const std::function<void(const Equation&)>& visit) {
  checkM(m);
  const int n = S.order();
  const int subsets = (1 << m) - 1;
  for (int T1 = 1; T1 <= subsets; ++T1) {
    for (int c1 = 0; c1 < n; ++c1) {
      for (int T2 = 1; T2 <= subsets; ++T2) {
        for (int c2 = 0; c2 < n; ++c2) {
          visit(Equation{Term{std::uint8_t(T1), Element(c1)},
                         Term{std::uint8_t(T2), Element(c2)}});
        }
      }
    }
  }
  for (int T = 1; T <= subsets; ++T) {
    for (int c = 0; c < n; ++c) {
      for (int b = 0; b < n; ++b) {
        visit(Equation{Term{std::uint8_t(T), Element(c)}, Element(b)});
      }
    }
  }
}

Element evalTerm(const Semilattice& S, const Term& term,
                 std::span<const Element> assignment) {
  Element v = term.constant;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if ((term.vars >> i) & 1u) v = S.meet(v, assignment[i]);
  }
  return v;
}

SolutionSet solutionCount(const Semilattice& S, const Equation& eq, int m) {
  checkM(m);
  SolutionSet out;
  forEachAssignment(S.order(), m, [&](std::span<const Element> a) {
    const Element left = evalTerm(S, eq.lhs, a);
    const Element right = std::holds_alternative<Term>(eq.rhs)
                              ? evalTerm(S, std::get<Term>(eq.rhs), a)
                              : std::get<Element>(eq.rhs);
    if (left == right) {
      ++out.count;
      if (m == 1) out.mask.insert(a[0]);
    }
  });
  return out;
}

bool isConsistent(const Semilattice& S, const Equation& eq, int m) {
  return solutionCount(S, eq, m).count > 0;
}

std::uint64_t inconsistentCount(const Semilattice& S, int m) {
  checkM(m);
  const int n = S.order();
  const int subsets = 1 << m;
  // Which (value of T1, value of T2) pairs and which single values occur
  // over all assignments; consistency depends only on these.
  std::vector<std::bitset<kMaxOrder * kMaxOrder>> realized_pairs(subsets * subsets);
  std::vector<ElementSet> realized_values(subsets);
  std::array<Element, 1 << kMaxVariables> products{};
  forEachAssignment(n, m, [&](std::span<const Element> a) {
    subsetProducts(S, a, m, products);
    for (int T1 = 1; T1 < subsets; ++T1) {
      realized_values[T1].insert(products[T1]);
      for (int T2 = 1; T2 < subsets; ++T2) {
        realized_pairs[T1 * subsets + T2].set(products[T1] * kMaxOrder + products[T2]);
      }
    }
  });

  std::uint64_t inconsistent = 0;
  std::vector<std::pair<Element, Element>> pairs;
  for (int T1 = 1; T1 < subsets; ++T1) {
    for (int T2 = 1; T2 < subsets; ++T2) {
      const auto& bits = realized_pairs[T1 * subsets + T2];
      pairs.clear();
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          if (bits[p * kMaxOrder + q]) pairs.emplace_back(p, q);
        }
      }
      for (int c1 = 0; c1 < n; ++c1) {
        for (int c2 = 0; c2 < n; ++c2) {
          bool ok = false;
          for (auto [p, q] : pairs) {
            if (S.meet(p, c1) == S.meet(q, c2)) {
              ok = true;
              break;
            }
          }
          if (!ok) ++inconsistent;
        }
      }
    }
  }
  for (int T = 1; T < subsets; ++T) {
    const auto values = realized_values[T].elements();
    for (int c = 0; c < n; ++c) {
      ElementSet reachable;
      for (Element p : values) reachable.insert(S.meet(p, c));
      inconsistent += static_cast<std::uint64_t>(n - reachable.size());
    }
  }
  return inconsistent;
}

int cov2Size(const Semilattice& S, int s) { return static_cast<int>(cov2Set(S, s).size()); }

std::vector<std::pair<Element, Element>> cov2Set(const Semilattice& S, int s) {
  checkElement(S, s);
  std::vector<std::pair<Element, Element>> out;
  for (int a = 0; a < S.order(); ++a) {
    for (int b = 0; b < S.order(); ++b) {
      if (S.meet(s, a) == b) out.emplace_back(a, b);
    }
  }
  return out;
}

PairSet cov1Brute(const Semilattice& S, int s) {
  checkElement(S, s);
  const int n = S.order();
  PairSet r(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (S.meet(s, a) == S.meet(s, b)) r.insert(a, b);
    }
  }
  return r;
}

std::vector<PairSet> cov1ByRecurrence(const Semilattice& S) {
  const int n = S.order();
  std::vector<PairSet> cov(n);
  for (Element s : S.linearExtension()) {
    const ElementSet covers = S.lowerCovers(s);
    if (s == S.bottom()) {
      cov[s] = PairSet::all(n);
    } else if (covers == ElementSet::single(S.bottom())) {
      // Atom: pairs on the same side of the up-set.
      const ElementSet up = S.upSet(s);
      PairSet r(n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (up.contains(a) == up.contains(b)) r.insert(a, b);
        }
      }
      cov[s] = r;
    } else if (covers.size() == 1) {
      const Element below = covers.elements().front();
      const ElementSet up_s = S.upSet(s);
      const ElementSet up_below = S.upSet(below);
      PairSet r = cov[below];
      // Remove a >= s, a' >= s', a' not >= s, in both orientations.
      for (Element a : up_s.elements()) {
        for (Element b : up_below.minus(up_s).elements()) {
          r.erase(a, b);
          r.erase(b, a);
        }
      }
      cov[s] = r;
    } else {
      PairSet r = PairSet::all(n);
      for (Element t : covers.elements()) r = r.intersect(cov[t]);
      cov[s] = r;
    }
  }
  return cov;
}

PairSet cov1ByRecurrence(const Semilattice& S, int s) {
  checkElement(S, s);
  return cov1ByRecurrence(S)[s];
}

CovSets covSets(const Semilattice& S, int s) {
  return CovSets{Element(s), cov1ByRecurrence(S, s), cov2Size(S, s)};
}

std::int64_t cov1SizeChain(int n, int i) {
  if (n < 2 || i < 0 || i >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "chain index " + std::to_string(i) + " invalid for n=" + std::to_string(n));
  }
  const std::int64_t d = n - i;
  return d * d + i;
}

std::int64_t cov1SizeFan(int n, int i) {
  if (n < 4 || i < 1 || i > n - 2) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "fan index " + std::to_string(i) + " is not a middle element for n=" +
                    std::to_string(n));
  }
  const std::int64_t d = n - 2;
  return d * d + 4;
}

std::int64_t sigmaCov1(const Semilattice& S) {
  std::int64_t total = 0;
  for (int s = 0; s < S.order(); ++s) total += cov1Brute(S, s).size();
  return total;
}

std::int64_t sigma(const Semilattice& S) {
  const std::int64_t n = S.order();
  return sigmaCov1(S) + n * n;
}

std::int64_t sigmaByEquations(const Semilattice& S) {
  std::int64_t total = 0;
  enumerateEquations(S, 1, [&](const Equation& eq) {
    total += static_cast<std::int64_t>(solutionCount(S, eq, 1).count);
  });
  return total;
}

std::map<ElementSet, std::uint64_t> solutionSetHistogram(const Semilattice& S) {
  const int n = S.order();
  std::map<ElementSet, std::uint64_t> hist;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      ElementSet first;
      ElementSet second;
      for (int s = 0; s < n; ++s) {
        if (S.meet(s, a) == S.meet(s, b)) first.insert(s);
        if (S.meet(s, a) == b) second.insert(s);
      }
      ++hist[first];
      ++hist[second];
    }
  }
  return hist;
}

}  // namespace semlat
