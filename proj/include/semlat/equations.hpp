#pragma once

#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "semlat/semilattice.hpp"

namespace semlat {

inline constexpr int kMaxVariables = 6;

// Product of the variables in `vars` (bit i = x_{i+1}) met with `constant`.
// A term without a constant uses the top element.
struct Term {
  std::uint8_t vars = 1;
  Element constant = 0;

  bool operator==(const Term&) const = default;
};

enum class EquationKind { kFirst, kSecond };

// Ordered pair: lhs = rhs, where rhs is a term (first kind) or a bare
// constant (second kind).
struct Equation {
  Term lhs;
  std::variant<Term, Element> rhs;

  EquationKind kind() const {
    return std::holds_alternative<Term>(rhs) ? EquationKind::kFirst
                                             : EquationKind::kSecond;
  }
  bool operator==(const Equation&) const = default;
};

struct SolutionSet {
  ElementSet mask;  // populated for one-variable equations only
  std::uint64_t count = 0;
};

// Set of ordered element pairs (a, a'), standing for the one-variable
// first-kind equations x*a = x*a'.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(int n) : n_(n) {}

  static PairSet all(int n);

  int order() const { return n_; }
  bool contains(int a, int b) const { return bits_[index(a, b)]; }
  void insert(int a, int b) { bits_.set(index(a, b)); }
  void erase(int a, int b) { bits_.reset(index(a, b)); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool subsetOf(const PairSet& o) const { return (bits_ & ~o.bits_).none(); }
  PairSet intersect(const PairSet& o) const {
    PairSet r(n_);
    r.bits_ = bits_ & o.bits_;
    return r;
  }
  std::vector<std::pair<Element, Element>> pairs() const;
  bool operator==(const PairSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  static int index(int a, int b) { return a * kMaxOrder + b; }
  int n_ = 0;
  std::bitset<kMaxOrder * kMaxOrder> bits_;
};

struct CovSets {
  Element element = 0;
  PairSet cov1;
  int cov2size = 0;
};

// 2^m n^2 (2^m - 1)
std::uint64_t equationCountFormula(int n, int m);

// Visits every equation in at most m variables exactly once: first-kind
// equations ordered by (lhs vars, lhs const, rhs vars, rhs const), then
// second-kind ones by (vars, const, rhs). Throws Error(kMTooLarge).
void enumerateEquations(const Semilattice& S, int m,
                        const std::function<void(const Equation&)>& visit);

Element evalTerm(const Semilattice& S, const Term& term,
                 std::span<const Element> assignment);

// Exhaustive over all n^m assignments.
SolutionSet solutionCount(const Semilattice& S, const Equation& eq, int m);
bool isConsistent(const Semilattice& S, const Equation& eq, int m);
std::uint64_t inconsistentCount(const Semilattice& S, int m);

int cov2Size(const Semilattice& S, int s);
std::vector<std::pair<Element, Element>> cov2Set(const Semilattice& S, int s);

// {(a, a') | s*a = s*a'}
PairSet cov1Brute(const Semilattice& S, int s);
// Bottom-up over a linear extension: bottom gets every pair, atoms use the
// up-set split, single-cover elements strip pairs separated by s from the
// cover's set, and multi-cover elements intersect their covers' sets.
std::vector<PairSet> cov1ByRecurrence(const Semilattice& S);
PairSet cov1ByRecurrence(const Semilattice& S, int s);
CovSets covSets(const Semilattice& S, int s);

// (n - i)^2 + i for a_i of the n-chain.
std::int64_t cov1SizeChain(int n, int i);
// (n - 2)^2 + 4 for a middle element a_i (1 <= i <= n-2) of the n-fan, n >= 4.
std::int64_t cov1SizeFan(int n, int i);

std::int64_t sigmaCov1(const Semilattice& S);
// sigmaCov1 + n^2
std::int64_t sigma(const Semilattice& S);
// Sum of solution-set sizes over all one-variable equations.
std::int64_t sigmaByEquations(const Semilattice& S);

// Buckets the 2n^2 one-variable equations by their exact solution set.
std::map<ElementSet, std::uint64_t> solutionSetHistogram(const Semilattice& S);

}  // namespace semlat
