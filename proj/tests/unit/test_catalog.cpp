#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "semlat/canonical.hpp"
#include "semlat/catalog.hpp"

using namespace semlat;

namespace {

std::string serialized(const Catalog& c) {
  std::ostringstream out;
  saveCatalog(c, out);
  return out.str();
}

int formatErrorLine(const std::string& text) {
  std::istringstream in(text);
  try {
    loadCatalog(in);
  } catch (const FormatError& e) {
    CHECK(e.code() == ErrorCode::kFormatError);
    return e.line();
  }
  FAIL("malformed catalog was accepted");
  return -1;
}

}  // namespace

TEST_CASE("catalog sizes for n = 2..10") {
  const std::vector<std::size_t> expected{1, 1, 2, 5, 15, 53, 222, 1078, 5994};
  for (int n = 2; n <= 10; ++n) {
    const Catalog c = generateCatalog(n);
    CHECK(c.n == n);
    CHECK(c.complete);
    CHECK(c.size() == expected[n - 2]);
  }
}

TEST_CASE("orderly generation matches the naive enumerator") {
  for (int n = 2; n <= kMaxNaiveOrder; ++n) {
    const Catalog fast = generateCatalog(n);
    const Catalog slow = generateCatalogNaive(n);
    CHECK(fast == slow);
  }
  CHECK_THROWS_AS(generateCatalogNaive(7), Error);
}

TEST_CASE("catalog entries are canonical, sorted and valid") {
  for (int n = 2; n <= 9; ++n) {
    const Catalog c = generateCatalog(n);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const CatalogEntry& e = c.entries[i];
      CHECK(e.index == i);
      CHECK(e.n == n);
      CHECK(canonicalize(e.canonical.relabeled).key == e.canonical.key);
      CHECK_NOTHROW(Semilattice::fromTable(n, e.canonical.relabeled.table()));
      if (i > 0) CHECK(c.entries[i - 1].canonical.key < e.canonical.key);
    }
  }
}

TEST_CASE("chains and fans are present") {
  for (int n = 4; n <= 10; ++n) {
    const Catalog c = generateCatalog(n);
    CHECK(c.find(canonicalize(makeChain(n)).key).has_value());
    CHECK(c.find(canonicalize(makeFan(n)).key).has_value());
  }
  const Catalog c3 = generateCatalog(3);
  CHECK(c3.find(canonicalize(makeChain(3)).key) == std::size_t{0});
  CHECK_FALSE(c3.find(canonicalize(makeChain(4)).key).has_value());
}

TEST_CASE("generation is deterministic across job counts") {
  for (int n : {7, 9}) {
    const Catalog a = generateCatalog(n, {.jobs = 1});
    const Catalog b = generateCatalog(n, {.jobs = 4});
    CHECK(serialized(a) == serialized(b));
    CHECK(serialized(a) == serialized(generateCatalog(n, {.jobs = 1})));
  }
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(generateCatalog(1), Error);
  try {
    generateCatalog(11);
    FAIL("n = 11 accepted without override");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOrderTooLarge);
  }
  CHECK_THROWS_AS(generateCatalog(13, {.allowLarge = true}), Error);
}

TEST_CASE("catalogFromSemilattices deduplicates") {
  const Catalog c = catalogFromSemilattices(
      5, {makeChain(5), makeFan(5), makeChain(5).relabel(std::vector<Element>{0, 3, 1, 2, 4})},
      false);
  CHECK(c.size() == 2);
  CHECK_FALSE(c.complete);
}

TEST_CASE(".slx round trip") {
  for (int n = 2; n <= 8; ++n) {
    const Catalog c = generateCatalog(n);
    const std::string text = serialized(c);
    std::istringstream in(text);
    const Catalog back = loadCatalog(in);
    CHECK(back == c);
    CHECK(back.complete);
    CHECK(serialized(back) == text);
  }
  const std::string l3 = serialized(generateCatalog(3));
  CHECK(l3.rfind("SLX1 n=3 count=1\n", 0) == 0);
  CHECK(l3.find("# complete\n") != std::string::npos);
  CHECK(l3.find(keyToHex(canonicalize(makeChain(3)).key)) != std::string::npos);

  const Catalog partial = catalogFromSemilattices(5, {makeFan(5)}, false);
  std::istringstream in(serialized(partial));
  CHECK_FALSE(loadCatalog(in).complete);
}

TEST_CASE(".slx file I/O") {
  const auto path = std::filesystem::temp_directory_path() / "semlat_unit_catalog.slx";
  const Catalog c = generateCatalog(6);
  saveCatalogFile(c, path);
  CHECK(loadCatalogFile(path) == c);
  std::filesystem::remove(path);
  try {
    loadCatalogFile(path);
    FAIL("missing file accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIoError);
  }
}

TEST_CASE(".slx malformed input") {
  const std::string good = serialized(generateCatalog(5));
  std::vector<std::string> lines;
  {
    std::istringstream in(good);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  REQUIRE(lines.size() == 7);
  auto join = [](const std::vector<std::string>& ls) {
    std::string out;
    for (const auto& l : ls) out += l + "\n";
    return out;
  };

  // truncated: last record cut short
  auto truncated = lines;
  truncated.back().pop_back();
  CHECK(formatErrorLine(join(truncated)) == 7);

  // too few records
  auto missing = lines;
  missing.pop_back();
  CHECK(formatErrorLine(join(missing)) > 0);

  // header count disagrees
  auto count = lines;
  count[0] = "SLX1 n=5 count=4";
  CHECK(formatErrorLine(join(count)) > 0);

  CHECK(formatErrorLine("SLX2 n=5 count=5\n") == 1);
  CHECK(formatErrorLine("") == 1);

  // valid table, but not in canonical labeling
  const Semilattice reversed = makeChain(5).relabel(std::vector<Element>{4, 3, 2, 1, 0});
  const std::string raw =
      keyToHex(CanonicalKey(reversed.table().begin(), reversed.table().end()));
  REQUIRE(raw != keyToHex(canonicalize(reversed).key));
  CHECK(formatErrorLine("SLX1 n=5 count=1\n" + raw + "\n") == 2);

  // not a semilattice
  CHECK(formatErrorLine("SLX1 n=2 count=1\n0100\n") == 2);

  // uppercase hex
  auto upper = lines;
  for (char& ch : upper[3]) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper[3] != lines[3]) CHECK(formatErrorLine(join(upper)) == 4);

  // records out of order
  auto swapped = lines;
  std::swap(swapped[2], swapped[3]);
  CHECK(formatErrorLine(join(swapped)) > 0);
}
