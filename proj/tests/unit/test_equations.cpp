#include <doctest.h>

#include <set>

#include "semlat/catalog.hpp"
#include "semlat/equations.hpp"
#include "semlat/figures.hpp"

using namespace semlat;

namespace {

std::uint64_t countEquations(const Semilattice& S, int m) {
  std::uint64_t count = 0;
  enumerateEquations(S, m, [&](const Equation&) { ++count; });
  return count;
}

// Oracle: one brute-force solve per enumerated equation.
std::uint64_t inconsistentByEnumeration(const Semilattice& S, int m) {
  std::uint64_t count = 0;
  enumerateEquations(S, m, [&](const Equation& eq) {
    if (!isConsistent(S, eq, m)) ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("enumerateEquations matches the counting formula") {
  CHECK(countEquations(makeFan(5), 1) == 50);
  CHECK(countEquations(makeChain(2), 1) == 8);
  CHECK(countEquations(makeChain(5), 2) == 300);
  for (int n = 2; n <= 6; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      for (int m = 1; m <= 3; ++m) {
        CHECK(countEquations(e.canonical.relabeled, m) == equationCountFormula(n, m));
      }
    }
  }
  CHECK_THROWS_AS(enumerateEquations(makeChain(3), 7, [](const Equation&) {}), Error);
  CHECK_THROWS_AS(enumerateEquations(makeChain(3), 0, [](const Equation&) {}), Error);
}

TEST_CASE("enumerateEquations yields each equation once, both kinds, ordered pairs") {
  const Semilattice S = makeChain(3);
  std::uint64_t first = 0, second = 0;
  std::set<std::tuple<int, int, int, int, int>> seen;
  enumerateEquations(S, 2, [&](const Equation& eq) {
    if (eq.kind() == EquationKind::kFirst) {
      ++first;
      const Term r = std::get<Term>(eq.rhs);
      CHECK(eq.lhs.vars != 0);
      CHECK(r.vars != 0);
      CHECK(seen.emplace(0, eq.lhs.vars, eq.lhs.constant, r.vars, r.constant).second);
    } else {
      ++second;
      CHECK(seen.emplace(1, eq.lhs.vars, eq.lhs.constant, 0, std::get<Element>(eq.rhs)).second);
    }
  });
  CHECK(first == 9 * 9);
  CHECK(second == 3 * 9);
  // (x1*0 = x2*1) and (x2*1 = x1*0) are distinct.
  CHECK(seen.count({0, 1, 0, 2, 2}) == 1);
  CHECK(seen.count({0, 2, 2, 1, 0}) == 1);
}

TEST_CASE("evalTerm") {
  const Semilattice L5 = makeChain(5);
  const std::vector<Element> one{3};
  CHECK(evalTerm(L5, Term{1, L5.top()}, one) == 3);
  CHECK(evalTerm(L5, Term{1, 2}, std::vector<Element>{4}) == 2);
  const Semilattice F5 = makeFan(5);
  const std::vector<Element> two{1, 4};
  CHECK(evalTerm(F5, Term{3, 2}, two) == F5.meet(F5.meet(1, 4), 2));
  CHECK(evalTerm(F5, Term{2, 4}, two) == 4);
}

TEST_CASE("solutionCount") {
  const Semilattice L5 = makeChain(5);
  const Semilattice S = makeDiamondWithTail();
  for (const Semilattice* X : {&L5, &S}) {
    const SolutionSet all = solutionCount(*X, Equation{Term{1, X->top()}, Term{1, X->top()}}, 1);
    CHECK(all.count == 5);
    CHECK(all.mask == X->all());
    const SolutionSet bot =
        solutionCount(*X, Equation{Term{1, X->bottom()}, Term{1, X->bottom()}}, 1);
    CHECK(bot.mask == X->all());
  }
  const SolutionSet none = solutionCount(L5, Equation{Term{1, 1}, Element{3}}, 1);
  CHECK(none.count == 0);
  CHECK(none.mask.empty());
  // x1*x2 = a2 over L5
  std::uint64_t expected = 0;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) expected += std::min(a, b) == 2;
  }
  CHECK(solutionCount(L5, Equation{Term{3, 4}, Element{2}}, 2).count == expected);
  CHECK(solutionCount(L5, Equation{Term{3, 4}, Element{2}}, 2).mask.empty());
}

TEST_CASE("inconsistentCount examples") {
  CHECK(inconsistentCount(makeChain(5), 1) == 10);
  CHECK(inconsistentCount(makeFan(5), 1) == 13);
  CHECK(inconsistentCount(makeChain(4), 2) == 18);
  CHECK(inconsistentByEnumeration(makeChain(4), 2) == 18);
}

TEST_CASE("inconsistentCount agrees with per-equation brute force") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      for (int m = 1; m <= (n <= 4 ? 3 : 2); ++m) {
        CHECK(inconsistentCount(e.canonical.relabeled, m) ==
              inconsistentByEnumeration(e.canonical.relabeled, m));
      }
    }
  }
}

TEST_CASE("cov2") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      for (int s = 0; s < n; ++s) CHECK(cov2Size(e.canonical.relabeled, s) == n);
    }
  }
  using P = std::pair<Element, Element>;
  CHECK(cov2Set(makeChain(3), 1) == std::vector<P>{{0, 0}, {1, 1}, {2, 1}});
  const Semilattice F5 = makeFan(5);
  std::vector<P> diag;
  for (int a = 0; a < 5; ++a) diag.emplace_back(a, a);
  CHECK(cov2Set(F5, F5.top()) == diag);
}

TEST_CASE("cov1Brute examples") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      const Semilattice& S = e.canonical.relabeled;
      CHECK(cov1Brute(S, S.bottom()).size() == n * n);
      const PairSet top = cov1Brute(S, S.top());
      CHECK(top.size() == n);
      for (int a = 0; a < n; ++a) CHECK(top.contains(a, a));
    }
  }
  const Semilattice L5 = makeChain(5);
  const std::vector<int> expected{25, 17, 11, 7, 5};
  for (int i = 0; i < 5; ++i) CHECK(cov1Brute(L5, i).size() == expected[i]);
}

TEST_CASE("cov1ByRecurrence examples") {
  const Semilattice F5 = makeFan(5);
  CHECK(cov1ByRecurrence(F5, 1).size() == 13);
  const Semilattice S5 = makeDiamondWithTail();
  CHECK(cov1ByRecurrence(S5, 4).size() == 5);
  CHECK(cov1ByRecurrence(S5, 3).size() == 7);
  CHECK(cov1ByRecurrence(S5, 3) == cov1ByRecurrence(S5, 1).intersect(cov1ByRecurrence(S5, 2)));
  CHECK(covSets(S5, 3).cov2size == 5);
}

TEST_CASE("cov1ByRecurrence equals brute force on the n <= 7 catalog") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      const Semilattice& S = e.canonical.relabeled;
      const auto rec = cov1ByRecurrence(S);
      for (int s = 0; s < n; ++s) CHECK(rec[s] == cov1Brute(S, s));
    }
  }
}

TEST_CASE("single-cover step must strip both orientations") {
  // Literal one-orientation removal on L3 at a1 leaves 7 pairs; the true set has 5.
  const Semilattice L3 = makeChain(3);
  PairSet literal = cov1Brute(L3, 0);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (L3.leq(1, a) && L3.leq(0, b) && !L3.leq(1, b)) literal.erase(a, b);
    }
  }
  CHECK(literal.size() == 7);
  CHECK(cov1Brute(L3, 1).size() == 5);
  CHECK(cov1ByRecurrence(L3, 1).size() == 5);
}

TEST_CASE("cov1 shrinks as elements grow") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      const Semilattice& S = e.canonical.relabeled;
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          if (S.leq(s, t)) CHECK(cov1Brute(S, t).subsetOf(cov1Brute(S, s)));
        }
      }
      // The reverse inclusion fails already for bottom <= top.
      CHECK_FALSE(cov1Brute(S, S.bottom()).subsetOf(cov1Brute(S, S.top())));
    }
  }
}

TEST_CASE("atom formulas") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      const Semilattice& S = e.canonical.relabeled;
      const ElementSet at = atoms(S);
      for (Element a : at.elements()) {
        const int up = S.upSet(a).size();
        CHECK(cov1Brute(S, a).size() == up * up + (n - up) * (n - up));
      }
      if (at.size() == 1) {
        CHECK(cov1Brute(S, at.elements().front()).size() == (n - 1) * (n - 1) + 1);
      }
    }
  }
}

TEST_CASE("closed forms for chains and fans") {
  CHECK(cov1SizeChain(5, 1) == 17);
  CHECK(cov1SizeFan(5, 2) == 13);
  for (int n = 2; n <= 12; ++n) {
    CHECK(cov1SizeChain(n, 0) == n * n);
    const Semilattice L = makeChain(n);
    for (int i = 0; i < n; ++i) CHECK(cov1Brute(L, i).size() == cov1SizeChain(n, i));
  }
  for (int n = 4; n <= 12; ++n) {
    const Semilattice F = makeFan(n);
    for (int i = 1; i <= n - 2; ++i) CHECK(cov1Brute(F, i).size() == cov1SizeFan(n, i));
  }
  CHECK_THROWS_AS(cov1SizeChain(5, 5), Error);
  CHECK_THROWS_AS(cov1SizeChain(5, -1), Error);
  CHECK_THROWS_AS(cov1SizeFan(5, 0), Error);
  CHECK_THROWS_AS(cov1SizeFan(5, 4), Error);
  CHECK_THROWS_AS(cov1SizeFan(3, 1), Error);
}

TEST_CASE("sigma") {
  CHECK(sigmaCov1(makeChain(5)) == 65);
  CHECK(sigmaCov1(makeDiamondWithTail()) == 63);
  CHECK(sigmaCov1(makeFan(5)) == 69);
  CHECK(sigma(makeFan(5)) == 69 + 25);
  for (int n = 2; n <= 6; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      const Semilattice& S = e.canonical.relabeled;
      CHECK(sigmaByEquations(S) == sigma(S));
      CHECK(sigma(S) == sigmaCov1(S) + n * n);
    }
  }
}

TEST_CASE("solutionSetHistogram") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      const Semilattice& S = e.canonical.relabeled;
      const auto hist = solutionSetHistogram(S);
      std::uint64_t total = 0;
      for (const auto& [set, count] : hist) total += count;
      CHECK(total == std::uint64_t(2 * n * n));
      CHECK(hist.at(S.all()) >= std::uint64_t(n));
      CHECK(hist.at(ElementSet()) > 0);
      CHECK(hist.at(ElementSet()) == inconsistentCount(S, 1));
      if (n >= 6) {
        for (const auto& [set, count] : hist) CHECK(count <= hist.at(ElementSet()));
      }
    }
  }
}
