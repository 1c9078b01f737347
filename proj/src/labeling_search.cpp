#include "labeling_search.hpp"

#include <algorithm>
#include <numeric>

namespace semlat::detail {

namespace {

constexpr std::size_t kMaxStoredAutomorphisms = 256;

int compareSeq(const std::vector<Element>& a, const std::vector<Element>& b,
               std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int rowOffset(int k) { return k * (k - 1) / 2; }

}  // namespace

LabelingSearch::LabelingSearch(int n, std::span<const Element> table,
                               std::span<const int> color)
    : n_(n), table_(table), color_(color.begin(), color.end()) {
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return color_[a] < color_[b]; });
  cell_of_position_.resize(n_);
  for (int p = 0; p < n_; ++p) cell_of_position_[p] = color_[order[p]];
  pos_.assign(n_, -1);
  at_.assign(n_, 0);
  cur_seq_.assign(rowOffset(n_), 0);
}

std::vector<Element> LabelingSearch::minimize() {
  have_best_ = false;
  abort_on_smaller_ = false;
  dfs(0);
  std::vector<Element> perm(n_);
  for (int p = 0; p < n_; ++p) perm[best_at_[p]] = static_cast<Element>(p);
  return perm;
}

bool LabelingSearch::identityIsMinimal() {
  best_at_.resize(n_);
  std::iota(best_at_.begin(), best_at_.end(), Element{0});
  best_seq_.assign(rowOffset(n_), 0);
  for (int k = 1; k < n_; ++k) {
    for (int j = 0; j < k; ++j) best_seq_[rowOffset(k) + j] = meet(k, j);
  }
  have_best_ = true;
  abort_on_smaller_ = true;
  found_smaller_ = false;
  dfs(0);
  return !found_smaller_;
}

void LabelingSearch::dfs(int depth) {
  if (found_smaller_) return;
  const std::size_t total = static_cast<std::size_t>(rowOffset(n_));
  if (depth == n_) {
    int cmp = have_best_ ? compareSeq(cur_seq_, best_seq_, total) : -1;
    if (cmp < 0) {
      if (abort_on_smaller_) {
        found_smaller_ = true;
        return;
      }
      best_seq_ = cur_seq_;
      best_at_ = at_;
      have_best_ = true;
    } else if (cmp == 0) {
      recordAutomorphism();
    }
    return;
  }

  const int cell = cell_of_position_[depth];
  const int offset = rowOffset(depth);
  std::array<Element, kMaxOrder> cands{};
  std::array<std::array<Element, kMaxOrder>, kMaxOrder> rows{};
  int nc = 0;
  for (int e = 0; e < n_; ++e) {
    if (pos_[e] >= 0 || color_[e] != cell) continue;
    for (int j = 0; j < depth; ++j) {
      rows[nc][j] = static_cast<Element>(pos_[meet(e, at_[j])]);
    }
    cands[nc++] = static_cast<Element>(e);
  }
  int best_row = 0;
  for (int c = 1; c < nc; ++c) {
    if (std::lexicographical_compare(rows[c].begin(), rows[c].begin() + depth,
                                     rows[best_row].begin(),
                                     rows[best_row].begin() + depth)) {
      best_row = c;
    }
  }
  const auto min_row = rows[best_row];

  std::vector<Element> explored;
  for (int c = 0; c < nc; ++c) {
    if (!std::equal(rows[c].begin(), rows[c].begin() + depth, min_row.begin())) continue;
    const Element e = cands[c];
    if (sameOrbitAsExplored(depth, e, explored)) continue;

    std::copy(min_row.begin(), min_row.begin() + depth, cur_seq_.begin() + offset);
    if (have_best_) {
      int cmp = compareSeq(cur_seq_, best_seq_, static_cast<std::size_t>(offset + depth));
      if (cmp > 0) return;  // every remaining sibling has the same row
      if (cmp < 0 && abort_on_smaller_) {
        found_smaller_ = true;
        return;
      }
    }
    pos_[e] = depth;
    at_[depth] = e;
    dfs(depth + 1);
    pos_[e] = -1;
    explored.push_back(e);
    if (found_smaller_) return;
  }
}

void LabelingSearch::recordAutomorphism() {
  if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
  std::vector<Element> gamma(n_);
  bool identity = true;
  for (int x = 0; x < n_; ++x) {
    gamma[x] = best_at_[pos_[x]];
    identity = identity && gamma[x] == x;
  }
  if (!identity) automorphisms_.push_back(std::move(gamma));
}

bool LabelingSearch::transpositionIsAutomorphism(Element a, Element b) const {
  auto sigma = [&](int x) -> int { return x == a ? b : (x == b ? a : x); };
  for (int y = 0; y < n_; ++y) {
    for (int z : {int(a), int(b)}) {
      if (meet(sigma(y), sigma(z)) != sigma(meet(y, z))) return false;
    }
  }
  return true;
}

bool LabelingSearch::sameOrbitAsExplored(int depth, Element candidate,
                                         std::span<const Element> explored) const {
  if (explored.empty()) return false;
  for (Element x : explored) {
    if (transpositionIsAutomorphism(x, candidate)) return true;
  }
  // Orbits of the group generated by stored automorphisms fixing the prefix.
  std::array<int, kMaxOrder> parent{};
  std::iota(parent.begin(), parent.begin() + n_, 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool any = false;
  for (const auto& g : automorphisms_) {
    bool fixes = true;
    for (int j = 0; j < depth && fixes; ++j) fixes = g[at_[j]] == at_[j];
    if (!fixes) continue;
    any = true;
    for (int x = 0; x < n_; ++x) parent[find(x)] = find(g[x]);
  }
  if (!any) return false;
  const int root = find(candidate);
  return std::any_of(explored.begin(), explored.end(),
                     [&](Element x) { return find(x) == root; });
}

}  // namespace semlat::detail
