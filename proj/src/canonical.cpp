#include "semlat/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "labeling_search.hpp"

namespace semlat {

namespace {

template <typename Sig>
std::vector<int> rankSignatures(const std::vector<Sig>& sigs) {
  std::vector<Sig> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) -
                              sorted.begin());
  }
  return out;
}

int countColors(const std::vector<int>& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

}  // namespace

std::vector<int> refinedColors(const Semilattice& S) {
  const int n = S.order();
  std::vector<std::tuple<int, int, int>> initial(n);
  for (int s = 0; s < n; ++s) {
    initial[s] = {S.rank(s), S.upSet(s).size(),
                  perpRelative(S, S.bottom(), s).size()};
  }
  std::vector<int> color = rankSignatures(initial);
  int classes = countColors(color);
  while (classes < n) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Sig> sigs(n);
    for (int s = 0; s < n; ++s) {
      sigs[s].first = color[s];
      auto& row = sigs[s].second;
      row.reserve(n);
      for (int t = 0; t < n; ++t) row.emplace_back(color[t], color[S.meet(s, t)]);
      std::sort(row.begin(), row.end());
    }
    std::vector<int> next = rankSignatures(sigs);
    int next_classes = countColors(next);
    color = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return color;
}

CanonicalForm canonicalize(const Semilattice& S) {
  const std::vector<int> color = refinedColors(S);
  detail::LabelingSearch search(S.order(), S.table(), color);
  std::vector<Element> perm = search.minimize();
  Semilattice relabeled = S.relabel(perm);
  CanonicalKey key(relabeled.table().begin(), relabeled.table().end());
  return CanonicalForm{std::move(relabeled), std::move(key), std::move(perm)};
}

bool isomorphic(const Semilattice& a, const Semilattice& b) {
  if (a.order() != b.order()) return false;
  return canonicalize(a).key == canonicalize(b).key;
}

std::string keyToHex(const CanonicalKey& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(key.size());
  for (std::uint8_t v : key) out.push_back(kDigits[v & 0xf]);
  return out;
}

CanonicalKey keyFromHex(std::string_view hex) {
  const auto n = static_cast<std::size_t>(std::lround(std::sqrt(double(hex.size()))));
  if (n * n != hex.size() || n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "key length " + std::to_string(hex.size()) + " is not a square >= 4");
  }
  CanonicalKey key;
  key.reserve(hex.size());
  for (char c : hex) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw Error(ErrorCode::kInvalidArgument, std::string("bad hex digit '") + c + "'");
    key.push_back(static_cast<std::uint8_t>(v));
  }
  return key;
}

Semilattice semilatticeFromKey(const CanonicalKey& key) {
  const auto n = static_cast<int>(std::lround(std::sqrt(double(key.size()))));
  return Semilattice::fromTable(n, key);
}

}  // namespace semlat
