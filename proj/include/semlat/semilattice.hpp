#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semlat/error.hpp"

namespace semlat {

inline constexpr int kMaxOrder = 12;

using Element = std::uint8_t;

// Subset of the carrier of a semilattice of order <= kMaxOrder.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint16_t bits) : bits_(bits) {}

  static constexpr ElementSet full(int n) {
    return ElementSet(static_cast<std::uint16_t>((1u << n) - 1u));
  }
  static constexpr ElementSet single(int e) {
    return ElementSet(static_cast<std::uint16_t>(1u << e));
  }

  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr void insert(int e) { bits_ |= static_cast<std::uint16_t>(1u << e); }
  constexpr void erase(int e) { bits_ &= static_cast<std::uint16_t>(~(1u << e)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool subsetOf(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(static_cast<std::uint16_t>(bits_ & o.bits_));
  }
  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(static_cast<std::uint16_t>(bits_ | o.bits_));
  }
  constexpr ElementSet minus(ElementSet o) const {
    return ElementSet(static_cast<std::uint16_t>(bits_ & ~o.bits_));
  }
  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

  std::vector<Element> elements() const;

 private:
  std::uint16_t bits_ = 0;
};

// Finite meet-semilattice with bottom and top, stored as a dense meet table.
// Immutable once constructed; the order relation and covers are derived
// eagerly so queries are table lookups.
class Semilattice {
 public:
  // Validates `table` (row-major, n*n entries). Throws ValidationError.
  static Semilattice fromTable(int n, std::span<const Element> table);

  int order() const { return n_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  Element meet(int s, int t) const { return table_[s * n_ + t]; }
  bool leq(int s, int t) const { return meet(s, t) == s; }
  std::span<const Element> table() const { return table_; }

  ElementSet all() const { return ElementSet::full(n_); }
  ElementSet upSet(int s) const { return up_[s]; }
  ElementSet downSet(int s) const { return down_[s]; }
  ElementSet lowerCovers(int s) const { return lower_covers_[s]; }
  ElementSet upperCovers(int s) const { return upper_covers_[s]; }
  // Length of the longest chain from bottom to s.
  int rank(int s) const { return rank_[s]; }
  // Elements sorted so every element follows all elements below it.
  std::span<const Element> linearExtension() const { return linear_; }

  // Least upper bound, computed as the meet of all common upper bounds.
  Element join(int s, int t) const;

  // Applies a relabeling: element e of *this becomes perm[e].
  Semilattice relabel(std::span<const Element> perm) const;

  bool operator==(const Semilattice& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

 private:
  Semilattice() = default;
  void derive();

  int n_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<Element> table_;
  std::array<ElementSet, kMaxOrder> up_{};
  std::array<ElementSet, kMaxOrder> down_{};
  std::array<ElementSet, kMaxOrder> lower_covers_{};
  std::array<ElementSet, kMaxOrder> upper_covers_{};
  std::array<int, kMaxOrder> rank_{};
  std::vector<Element> linear_;
};

struct ElementView {
  Element element = 0;
  ElementSet upSet;        // {t | t >= s}
  ElementSet perpSet;      // {t | ts = 0}
  ElementSet lowerCovers;  // Anc(s)
  bool isAtom = false;
  bool isCoatom = false;
};

bool leq(const Semilattice& S, int s, int t);
ElementView elementView(const Semilattice& S, int s);
ElementSet atoms(const Semilattice& S);
ElementSet coatoms(const Semilattice& S);
// {t | meet(t, s) = a}
ElementSet perpRelative(const Semilattice& S, int a, int s);

// a_0 < a_1 < ... < a_{n-1}; element i is a_i.
Semilattice makeChain(int n);
// 0, an antichain a_1..a_{n-2}, 1; element 0 is bottom, n-1 is top.
Semilattice makeFan(int n);

// Human-readable cover list such as "0<1 0<2 1<3 2<3".
std::string coverList(const Semilattice& S);

}  // namespace semlat
