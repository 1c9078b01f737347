#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "semlat/canonical.hpp"
#include "semlat/semilattice.hpp"

namespace semlat {

// Largest order generateCatalog accepts without allowLarge.
inline constexpr int kDefaultMaxCatalogOrder = 10;
inline constexpr int kMaxNaiveOrder = 6;

struct CatalogEntry {
  CanonicalForm canonical;
  std::size_t index = 0;
  int n = 0;
};

// Representatives of isomorphism classes of semilattices of order n,
// sorted by canonical key.
struct Catalog {
  int n = 0;
  std::vector<CatalogEntry> entries;
  bool complete = false;

  std::size_t size() const { return entries.size(); }
  std::optional<std::size_t> find(const CanonicalKey& key) const;
  bool operator==(const Catalog& o) const;
};

struct GenerateOptions {
  int jobs = 1;
  bool allowLarge = false;  // permit n up to kMaxOrder
};

// Orderly generation: semilattices of order n-1 are grown one maximal
// element at a time and accepted only in canonical labeling; the top is
// adjoined at the end. Throws Error(kOrderTooLarge / kOrderTooSmall).
Catalog generateCatalog(int n, const GenerateOptions& options = {});

// Labeled meet-table enumeration deduplicated by permutation search.
// Test oracle only; n <= kMaxNaiveOrder.
Catalog generateCatalogNaive(int n);

// Canonicalizes, deduplicates and sorts.
Catalog catalogFromSemilattices(int n, const std::vector<Semilattice>& members,
                                bool complete);

// .slx text format: header "SLX1 n=<n> count=<k>", '#' comment lines, then
// one record per line holding the canonical meet table as n^2 hex digits.
void saveCatalog(const Catalog& c, std::ostream& out);
// Throws FormatError carrying the offending line number.
Catalog loadCatalog(std::istream& in);

// Throws Error(kIoError) when the file cannot be opened.
void saveCatalogFile(const Catalog& c, const std::filesystem::path& path);
Catalog loadCatalogFile(const std::filesystem::path& path);

}  // namespace semlat
