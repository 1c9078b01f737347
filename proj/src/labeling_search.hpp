#pragma once

// Backtracking search for the lexicographically least relabeling of a meet
// table. Positions are filled cell by cell; the sequence being minimized is
// the lower triangle of the relabeled table in row-major order, i.e. row k
// lists pos(meet(e_k, e_j)) for j < k. Every cell must contain only elements
// whose strict lower bounds lie in earlier cells, so that each row is fully
// determined once its prefix is placed.

#include <cstdint>
#include <span>
#include <vector>

#include "semlat/semilattice.hpp"

namespace semlat::detail {

class LabelingSearch {
 public:
  // color[e] gives the cell of element e; cells are visited in increasing
  // color order.
  LabelingSearch(int n, std::span<const Element> table, std::span<const int> color);

  // Full minimization. Returns perm with perm[e] = position of e.
  std::vector<Element> minimize();

  // True iff no allowed labeling is smaller than the identity labeling.
  // Requires color to be non-decreasing along element indices.
  bool identityIsMinimal();

 private:
  Element meet(int s, int t) const { return table_[s * n_ + t]; }
  void dfs(int depth);
  void recordAutomorphism();
  bool sameOrbitAsExplored(int depth, Element candidate,
                           std::span<const Element> explored) const;
  bool transpositionIsAutomorphism(Element a, Element b) const;

  int n_;
  std::span<const Element> table_;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;

  std::vector<int> pos_;         // element -> position, -1 if unplaced
  std::vector<Element> at_;      // position -> element
  std::vector<Element> cur_seq_;
  std::vector<Element> best_seq_;
  std::vector<Element> best_at_;
  bool have_best_ = false;
  bool abort_on_smaller_ = false;
  bool found_smaller_ = false;
  std::vector<std::vector<Element>> automorphisms_;
};

}  // namespace semlat::detail
