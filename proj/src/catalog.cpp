#include "semlat/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <regex>
#include <set>
#include <string>

#include "labeling_search.hpp"
#include "parallel.hpp"

namespace semlat {

std::optional<std::size_t> Catalog::find(const CanonicalKey& key) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), key,
      [](const CatalogEntry& e, const CanonicalKey& k) { return e.canonical.key < k; });
  if (it == entries.end() || it->canonical.key != key) return std::nullopt;
  return static_cast<std::size_t>(it - entries.begin());
}

bool Catalog::operator==(const Catalog& o) const {
  if (n != o.n || complete != o.complete || entries.size() != o.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].canonical.key != o.entries[i].canonical.key ||
        entries[i].index != o.entries[i].index || entries[i].n != o.entries[i].n) {
      return false;
    }
  }
  return true;
}

namespace {

void checkCatalogOrder(int n, int limit) {
  if (n < 2) {
    throw Error(ErrorCode::kOrderTooSmall, "catalog order " + std::to_string(n) + " < 2");
  }
  if (n > limit) {
    throw Error(ErrorCode::kOrderTooLarge,
                "OrderTooLarge: catalog order " + std::to_string(n) + " > " +
                    std::to_string(limit));
  }
}

// Meet-semilattice without a top under construction: bottom is element 0,
// element indices follow a rank-sorted linear extension.
struct Partial {
  int k = 1;
  std::array<Element, kMaxOrder * kMaxOrder> meet{};  // stride kMaxOrder
  std::array<ElementSet, kMaxOrder> down{};
  std::array<int, kMaxOrder> rank{};
  int max_rank = 0;

  static Partial root() {
    Partial p;
    p.down[0] = ElementSet::single(0);
    return p;
  }
};

bool isCanonical(const Partial& p) {
  const int k = p.k;
  std::vector<Element> table(k * k);
  for (int s = 0; s < k; ++s) {
    for (int t = 0; t < k; ++t) table[s * k + t] = p.meet[s * kMaxOrder + t];
  }
  std::vector<int> color(p.rank.begin(), p.rank.begin() + k);
  return detail::LabelingSearch(k, table, color).identityIsMinimal();
}

// Adds a maximal element whose lower covers are `covers`. Returns false if
// some meet with the new element would not exist.
bool tryExtend(const Partial& p, ElementSet covers, Partial& out) {
  ElementSet below;
  int r = 0;
  for (Element c : covers.elements()) {
    below = below | p.down[c];
    r = std::max(r, p.rank[c] + 1);
  }
  if (r < p.max_rank) return false;
  const int x = p.k;
  out = p;
  out.k = p.k + 1;
  for (int y = 0; y < p.k; ++y) {
    const ElementSet common = below & p.down[y];
    int greatest = -1;
    for (Element m : common.elements()) {
      if (common.subsetOf(p.down[m])) {
        greatest = m;
        break;
      }
    }
    if (greatest < 0) return false;
    out.meet[x * kMaxOrder + y] = static_cast<Element>(greatest);
    out.meet[y * kMaxOrder + x] = static_cast<Element>(greatest);
  }
  out.meet[x * kMaxOrder + x] = static_cast<Element>(x);
  out.down[x] = below | ElementSet::single(x);
  out.rank[x] = r;
  out.max_rank = std::max(p.max_rank, r);
  return true;
}

bool isAntichain(const Partial& p, ElementSet set) {
  for (Element c : set.elements()) {
    if (!(p.down[c] & set).subsetOf(ElementSet::single(c))) return false;
  }
  return true;
}

std::vector<Partial> children(const Partial& p) {
  std::vector<Partial> out;
  Partial next;
  const auto limit = static_cast<std::uint16_t>(1u << p.k);
  for (std::uint16_t bits = 1; bits < limit; ++bits) {
    const ElementSet covers(bits);
    if (!isAntichain(p, covers)) continue;
    if (!tryExtend(p, covers, next)) continue;
    if (isCanonical(next)) out.push_back(next);
  }
  return out;
}

void grow(const Partial& p, int target, std::vector<Partial>& out) {
  if (p.k == target) {
    out.push_back(p);
    return;
  }
  for (const Partial& c : children(p)) grow(c, target, out);
}

Semilattice withTop(const Partial& p) {
  const int n = p.k + 1;
  const int top = p.k;
  std::vector<Element> table(n * n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      Element v;
      if (s == top) v = static_cast<Element>(t);
      else if (t == top) v = static_cast<Element>(s);
      else v = p.meet[s * kMaxOrder + t];
      table[s * n + t] = v;
    }
  }
  return Semilattice::fromTable(n, table);
}

Catalog sortedCatalog(int n, std::vector<CanonicalForm> forms, bool complete) {
  std::sort(forms.begin(), forms.end(),
            [](const CanonicalForm& a, const CanonicalForm& b) { return a.key < b.key; });
  forms.erase(std::unique(forms.begin(), forms.end(),
                          [](const CanonicalForm& a, const CanonicalForm& b) {
                            return a.key == b.key;
                          }),
              forms.end());
  Catalog c;
  c.n = n;
  c.complete = complete;
  c.entries.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    c.entries.push_back(CatalogEntry{std::move(forms[i]), i, n});
  }
  return c;
}

}  // namespace

Catalog generateCatalog(int n, const GenerateOptions& options) {
  checkCatalogOrder(n, options.allowLarge ? kMaxOrder : kDefaultMaxCatalogOrder);
  const int target = n - 1;
  // Expand sequentially to a frontier, then fan subtrees out to workers.
  const int frontier_order = std::max(1, target - 3);
  std::vector<Partial> frontier;
  grow(Partial::root(), frontier_order, frontier);

  std::vector<std::vector<Partial>> leaves(frontier.size());
  detail::parallelFor(frontier.size(), options.jobs,
                      [&](std::size_t i) { grow(frontier[i], target, leaves[i]); });

  std::vector<const Partial*> flat;
  for (const auto& group : leaves) {
    for (const Partial& p : group) flat.push_back(&p);
  }
  std::vector<std::optional<CanonicalForm>> forms(flat.size());
  detail::parallelFor(flat.size(), options.jobs,
                      [&](std::size_t i) { forms[i] = canonicalize(withTop(*flat[i])); });
  std::vector<CanonicalForm> out;
  out.reserve(forms.size());
  for (auto& f : forms) out.push_back(std::move(*f));
  const std::size_t generated = out.size();
  Catalog c = sortedCatalog(n, std::move(out), true);
  if (c.size() != generated) {
    throw Error(ErrorCode::kInvalidArgument,
                "orderly generation produced isomorphic duplicates at n=" + std::to_string(n));
  }
  return c;
}

namespace {

using Table = std::vector<Element>;

bool associative(int n, const Table& t) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = t[a * n + b];
      for (int c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) return false;
      }
    }
  }
  return true;
}

// Least relabeled table over all permutations fixing bottom (0) and top.
Table minimalRelabeling(int n, const Table& t) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  Table best;
  Table cur(n * n);
  do {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) cur[perm[a] * n + perm[b]] = perm[t[a * n + b]];
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

}  // namespace

Catalog generateCatalogNaive(int n) {
  checkCatalogOrder(n, kMaxNaiveOrder);
  const int top = n - 1;
  std::vector<std::pair<int, int>> free_pairs;
  for (int a = 1; a < top; ++a) {
    for (int b = a + 1; b < top; ++b) free_pairs.emplace_back(a, b);
  }
  Table t(n * n);
  for (int a = 0; a < n; ++a) {
    t[a * n + a] = Element(a);
    t[0 * n + a] = t[a * n + 0] = 0;
    t[top * n + a] = t[a * n + top] = Element(a);
  }
  // Middle meets range over everything except top.
  std::set<Table> classes;
  std::vector<int> digits(free_pairs.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < free_pairs.size(); ++i) {
      auto [a, b] = free_pairs[i];
      t[a * n + b] = t[b * n + a] = Element(digits[i]);
    }
    if (associative(n, t)) classes.insert(minimalRelabeling(n, t));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == top) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  std::vector<Semilattice> members;
  for (const Table& c : classes) members.push_back(Semilattice::fromTable(n, c));
  return catalogFromSemilattices(n, members, true);
}

Catalog catalogFromSemilattices(int n, const std::vector<Semilattice>& members,
                                bool complete) {
  std::vector<CanonicalForm> forms;
  forms.reserve(members.size());
  for (const auto& s : members) {
    if (s.order() != n) {
      throw Error(ErrorCode::kInvalidArgument, "member order differs from catalog order");
    }
    forms.push_back(canonicalize(s));
  }
  return sortedCatalog(n, std::move(forms), complete);
}

void saveCatalog(const Catalog& c, std::ostream& out) {
  out << "SLX1 n=" << c.n << " count=" << c.size() << '\n';
  out << (c.complete ? "# complete" : "# partial") << '\n';
  for (const auto& e : c.entries) out << keyToHex(e.canonical.key) << '\n';
}

Catalog loadCatalog(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next_line()) throw FormatError("empty catalog file", 1);
  static const std::regex header(R"(SLX1 n=(\d+) count=(\d+))");
  std::smatch m;
  if (!std::regex_match(line, m, header)) {
    throw FormatError("bad header '" + line + "'", line_no);
  }
  const int n = std::stoi(m[1].str());
  const std::size_t count = std::stoul(m[2].str());
  if (n < 2 || n > kMaxOrder) {
    throw FormatError("order " + std::to_string(n) + " outside [2," +
                          std::to_string(kMaxOrder) + "]",
                      line_no);
  }
  Catalog c;
  c.n = n;
  c.complete = false;
  while (next_line()) {
    if (line.empty()) throw FormatError("blank line", line_no);
    if (line[0] == '#') {
      if (line == "# complete") c.complete = true;
      continue;
    }
    if (line.size() != static_cast<std::size_t>(n * n)) {
      throw FormatError("record has " + std::to_string(line.size()) + " digits, expected " +
                            std::to_string(n * n),
                        line_no);
    }
    if (c.entries.size() == count) {
      throw FormatError("more records than header count " + std::to_string(count), line_no);
    }
    CanonicalKey key;
    try {
      key = keyFromHex(line);
    } catch (const Error& e) {
      throw FormatError(e.what(), line_no);
    }
    if (keyToHex(key) != line) throw FormatError("hex digits must be lowercase", line_no);
    std::optional<Semilattice> s;
    try {
      s = semilatticeFromKey(key);
    } catch (const ValidationError& e) {
      throw FormatError(e.what(), line_no);
    }
    CanonicalForm form = canonicalize(*s);
    if (form.key != key) throw FormatError("record is not in canonical form", line_no);
    if (!c.entries.empty() && !(c.entries.back().canonical.key < key)) {
      throw FormatError("records not strictly sorted by key", line_no);
    }
    const std::size_t index = c.entries.size();
    c.entries.push_back(CatalogEntry{std::move(form), index, n});
  }
  if (c.entries.size() != count) {
    throw FormatError("header count " + std::to_string(count) + " but " +
                          std::to_string(c.entries.size()) + " records",
                      line_no + 1);
  }
  return c;
}

void saveCatalogFile(const Catalog& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for writing");
  saveCatalog(c, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + path.string() + "'");
}

Catalog loadCatalogFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  return loadCatalog(in);
}

}  // namespace semlat
