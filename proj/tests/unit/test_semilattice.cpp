#include <doctest.h>

#include <random>

#include "semlat/canonical.hpp"
#include "semlat/catalog.hpp"
#include "semlat/figures.hpp"
#include "semlat/semilattice.hpp"
#include "test_support.hpp"

using namespace semlat;

namespace {

ErrorCode validationCode(int n, std::vector<Element> table) {
  try {
    Semilattice::fromTable(n, table);
  } catch (const ValidationError& e) {
    return e.code();
  }
  FAIL("table was accepted");
  return ErrorCode::kInvalidArgument;
}

ElementSet setOf(std::initializer_list<int> elems) {
  ElementSet s;
  for (int e : elems) s.insert(e);
  return s;
}

}  // namespace

TEST_CASE("validateMeetTable accepts the 3-chain") {
  const Semilattice S = Semilattice::fromTable(3, std::vector<Element>{0, 0, 0, 0, 1, 1, 0, 1, 2});
  CHECK(S.bottom() == 0);
  CHECK(S.top() == 2);
}

TEST_CASE("validateMeetTable places bottom and top anywhere") {
  // Chain 2 < 0 < 1.
  const Semilattice S = Semilattice::fromTable(3, std::vector<Element>{0, 0, 2, 0, 1, 2, 2, 2, 2});
  CHECK(S.bottom() == 2);
  CHECK(S.top() == 1);
  CHECK(S.leq(2, 0));
}

TEST_CASE("validateMeetTable reports the first violation") {
  CHECK(validationCode(2, {0, 1, 0, 1}) == ErrorCode::kNotCommutative);
  CHECK(validationCode(2, {1, 0, 0, 1}) == ErrorCode::kNotIdempotent);
  // 0, a, b with a*b = 0 and no greatest element.
  CHECK(validationCode(3, {0, 0, 0, 0, 1, 0, 0, 0, 2}) == ErrorCode::kNoTop);
  CHECK(validationCode(2, {0, 2, 2, 1}) == ErrorCode::kEntryOutOfRange);
  // Commutative, idempotent, not associative: (1*2)*3 = 0*3 = 0, 1*(2*3) = 1*1 = 1.
  std::vector<Element> t(16);
  for (int s = 0; s < 4; ++s) {
    for (int u = 0; u < 4; ++u) t[s * 4 + u] = static_cast<Element>(s == u ? s : 0);
  }
  t[2 * 4 + 3] = t[3 * 4 + 2] = 1;
  t[1 * 4 + 3] = t[3 * 4 + 1] = 1;
  t[1 * 4 + 2] = t[2 * 4 + 1] = 0;
  CHECK(validationCode(4, t) == ErrorCode::kNotAssociative);
  CHECK_THROWS_AS(Semilattice::fromTable(1, std::vector<Element>{0}), ValidationError);
}

TEST_CASE("validation messages name the violating pair") {
  try {
    Semilattice::fromTable(2, std::vector<Element>{0, 1, 0, 1});
    FAIL("accepted");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
}

TEST_CASE("leq examples") {
  CHECK(leq(makeChain(5), 0, 3));
  CHECK_FALSE(leq(makeFan(5), 1, 2));
  const Semilattice S = makeDiamondWithTail();
  for (int s = 0; s < 5; ++s) CHECK(leq(S, S.bottom(), s));
}

TEST_CASE("elementView examples") {
  const Semilattice F5 = makeFan(5);
  const ElementView a1 = elementView(F5, 1);
  CHECK(a1.upSet == setOf({1, 4}));
  CHECK(a1.perpSet == setOf({0, 2, 3}));
  CHECK(a1.isAtom);
  CHECK(a1.isCoatom);

  const ElementView bottom = elementView(F5, 0);
  CHECK(bottom.lowerCovers.empty());
  CHECK(bottom.perpSet == F5.all());

  const ElementView a2 = elementView(makeChain(5), 2);
  CHECK(a2.lowerCovers == setOf({1}));
  CHECK(a2.upSet == setOf({2, 3, 4}));
}

TEST_CASE("atoms and coatoms") {
  const Semilattice F5 = makeFan(5);
  CHECK(atoms(F5) == setOf({1, 2, 3}));
  CHECK(coatoms(F5) == setOf({1, 2, 3}));
  for (int n = 2; n <= 8; ++n) {
    const Semilattice L = makeChain(n);
    CHECK(atoms(L) == setOf({1}));
    CHECK(coatoms(L) == setOf({n - 2}));
  }
  const Semilattice S5 = makeDiamondWithTail();
  CHECK(atoms(S5) == setOf({1, 2}));
  CHECK(coatoms(S5) == setOf({3}));
}

TEST_CASE("perpRelative examples") {
  CHECK(perpRelative(makeChain(5), 1, 2) == setOf({1}));
  // Unique atom 1 covered by 2, 3, 4 (then top 5).
  std::vector<Element> t(36);
  auto below = [](int s, int u) { return s == u || s == 0 || u == 5 || (s == 1 && u > 1); };
  for (int s = 0; s < 6; ++s) {
    for (int u = 0; u < 6; ++u) {
      int m;
      if (below(s, u)) m = s;
      else if (below(u, s)) m = u;
      else m = (s > 1 && u > 1) ? 1 : 0;
      t[s * 6 + u] = static_cast<Element>(m);
    }
  }
  const Semilattice S = Semilattice::fromTable(6, t);
  REQUIRE(atoms(S) == setOf({1}));
  for (int i : {2, 3, 4}) {
    const ElementSet perp = perpRelative(S, 1, i);
    CHECK(perp.contains(1));
    for (int j : {2, 3, 4}) CHECK(perp.contains(j) == (j != i));
  }
  for (const auto& e : generateCatalog(5).entries) {
    const Semilattice& L = e.canonical.relabeled;
    for (int s = 0; s < 5; ++s) CHECK(perpRelative(L, L.bottom(), s) == elementView(L, s).perpSet);
  }
}

TEST_CASE("makeChain and makeFan") {
  const Semilattice L5 = makeChain(5);
  for (int s = 0; s < 5; ++s) {
    for (int t = 0; t < 5; ++t) CHECK(L5.meet(s, t) == std::min(s, t));
  }
  const Semilattice F5 = makeFan(5);
  CHECK(F5.bottom() == 0);
  CHECK(F5.top() == 4);
  CHECK(F5.meet(1, 2) == 0);
  CHECK(isomorphic(makeFan(3), makeChain(3)));
  CHECK_THROWS_AS(makeChain(1), Error);
  CHECK_THROWS_AS(makeFan(2), Error);
  try {
    makeFan(2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOrderTooSmall);
  }
}

TEST_CASE("structural invariants hold on every catalog member up to n=7") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      const Semilattice& S = e.canonical.relabeled;
      for (int s = 0; s < n; ++s) {
        CHECK(S.meet(s, s) == s);
        if (s != S.top()) CHECK(S.upSet(s).size() >= 2);
        const ElementView v = elementView(S, s);
        if (s != S.bottom()) CHECK((v.upSet & v.perpSet).empty());
        for (Element c : v.lowerCovers.elements()) {
          CHECK(S.leq(c, s));
          CHECK(c != s);
          // Nothing strictly between a cover and s.
          for (int u = 0; u < n; ++u) {
            if (u != c && u != s) CHECK_FALSE((S.leq(c, u) && S.leq(u, s)));
          }
        }
        if (v.isAtom) CHECK(v.perpSet.size() == n - v.upSet.size());
        for (int t = 0; t < n; ++t) {
          CHECK(S.meet(s, t) == S.meet(t, s));
          const Element j = S.join(s, t);
          CHECK(S.leq(s, j));
          CHECK(S.leq(t, j));
          for (int u = 0; u < n; ++u) {
            CHECK(S.meet(S.meet(s, t), u) == S.meet(s, S.meet(t, u)));
            if (S.leq(s, u) && S.leq(t, u)) CHECK(S.leq(j, u));
            if (S.leq(s, t) && S.leq(t, u)) CHECK(S.leq(s, u));
          }
          if (S.leq(s, t) && S.leq(t, s)) CHECK(s == t);
        }
      }
    }
  }
}

TEST_CASE("canonicalize is idempotent and places bottom first and top last") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      const CanonicalForm again = canonicalize(e.canonical.relabeled);
      CHECK(again.key == e.canonical.key);
      CHECK(again.relabeled.bottom() == 0);
      CHECK(again.relabeled.top() == n - 1);
    }
  }
}

TEST_CASE("canonicalize is invariant under every relabeling for n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& e : generateCatalog(n).entries) {
      const Semilattice& S = e.canonical.relabeled;
      std::vector<Element> p(n);
      std::iota(p.begin(), p.end(), Element{0});
      do {
        CHECK(canonicalize(S.relabel(p)).key == e.canonical.key);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
}

TEST_CASE("canonicalize is invariant under random relabelings for 6 <= n <= 10") {
  std::mt19937 rng(20261014);
  for (int n = 6; n <= 10; ++n) {
    const Catalog c = generateCatalog(n);
    const std::size_t stride = std::max<std::size_t>(1, c.size() / 200);
    for (std::size_t i = 0; i < c.size(); i += stride) {
      const Semilattice& S = c.entries[i].canonical.relabeled;
      for (int trial = 0; trial < 3; ++trial) {
        const auto p = testing::randomPermutation(n, rng);
        const CanonicalForm f = canonicalize(S.relabel(p));
        CHECK(f.key == c.entries[i].canonical.key);
        CHECK(f.relabeled == c.entries[i].canonical.relabeled);
      }
    }
  }
}

TEST_CASE("canonical labeling maps the input onto the relabeled form") {
  std::mt19937 rng(7);
  const Semilattice S = makeFan(6).relabel(testing::randomPermutation(6, rng));
  const CanonicalForm f = canonicalize(S);
  CHECK(S.relabel(f.labeling) == f.relabeled);
}

TEST_CASE("canonical keys of highly symmetric lattices") {
  std::mt19937 rng(99);
  for (int n : {8, 10, 12}) {
    const Semilattice F = makeFan(n);
    const auto a = canonicalize(F.relabel(testing::randomPermutation(n, rng))).key;
    const auto b = canonicalize(F.relabel(testing::randomPermutation(n, rng))).key;
    CHECK(a == b);
    CHECK(a != canonicalize(makeChain(n)).key);
  }
}

TEST_CASE("isomorphic agrees with permutation search on the n <= 5 catalog") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 5; ++n) {
    const Catalog c = generateCatalog(n);
    std::vector<Semilattice> pool;
    for (const auto& e : c.entries) {
      pool.push_back(e.canonical.relabeled);
      pool.push_back(e.canonical.relabeled.relabel(testing::randomPermutation(n, rng)));
    }
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        CHECK(isomorphic(a, b) == testing::isomorphicByPermutationSearch(a, b));
      }
    }
  }
  CHECK_FALSE(isomorphic(makeChain(5), makeFan(5)));
  CHECK_FALSE(isomorphic(makeChain(4), makeChain(5)));
}

TEST_CASE("hex keys") {
  const CanonicalKey k = canonicalize(makeFan(5)).key;
  CHECK(keyFromHex(keyToHex(k)) == k);
  CHECK(semilatticeFromKey(k) == canonicalize(makeFan(5)).relabeled);
  CHECK_THROWS_AS(keyFromHex("012"), Error);
  CHECK_THROWS_AS(keyFromHex("00z1"), Error);
}
