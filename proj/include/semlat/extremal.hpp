#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semlat/catalog.hpp"
#include "semlat/semilattice.hpp"

namespace semlat {

struct HistogramSummary {
  std::uint64_t emptyBucketSize = 0;
  std::uint64_t maxBucketSize = 0;  // over nonempty solution sets
  std::size_t numRealizedSolutionSets = 0;

  bool operator==(const HistogramSummary&) const = default;
};

// Equational profile of one semilattice, computed on its canonical form.
struct StatsRecord {
  std::string canonicalKey;
  int n = 0;
  std::vector<std::uint64_t> inconsistentCount;  // [m-1] for m = 1..maxM
  std::vector<std::int64_t> cov1Vector;          // canonical element order
  std::int64_t sigmaCov1 = 0;
  std::int64_t sigma = 0;
  HistogramSummary histogramSummary;
  int coatomCount = 0;
  int atomCount = 0;

  bool operator==(const StatsRecord&) const = default;
};

struct ProfileOptions {
  int maxM = 2;
};

StatsRecord profile(const Semilattice& S, const ProfileOptions& options = {});
// One record per entry, in catalog order.
std::vector<StatsRecord> profileCatalog(const Catalog& c, const ProfileOptions& options,
                                        int jobs);

enum class VerificationStatus { kVerified, kCounterexampleFound, kSkipped };
const char* statusName(VerificationStatus s);

struct Witness {
  std::string key;
  int n = 0;
  std::string detail;
};

struct VerificationReport {
  std::string claim;
  int nLo = 0;
  int nHi = 0;
  VerificationStatus status = VerificationStatus::kSkipped;
  std::vector<Witness> witnesses;  // sorted by (n, key)
  std::vector<std::string> notes;  // one summary line per n
  double elapsedSeconds = 0.0;
};

// Catalogs must be complete and given in increasing order of n.
VerificationReport verifyTheorem1(std::span<const Catalog> catalogs, int m, int jobs = 1);
VerificationReport verifyTheorem2(std::span<const Catalog> catalogs, int jobs = 1);
// Case inequalities used in bounding sigmaCov1 by the fan value.
VerificationReport verifyTheorem2Bounds(std::span<const Catalog> catalogs, int jobs = 1);
VerificationReport verifyTheorem4(std::span<const Catalog> catalogs, int jobs = 1);
VerificationReport verifyConjecture(std::span<const Catalog> catalogs, int jobs = 1);
// Recurrence = brute force for cov1, |cov2| = n, monotonicity, atom
// formulas and the double-counting identity for sigma.
VerificationReport verifyCovLemmas(std::span<const Catalog> catalogs, int jobs = 1);

// n^2 + n + (n-2)((n-2)^2 + 4)
std::int64_t fanSigmaCov1(int n);
std::uint64_t chainInconsistentFormula(int n, int m);
std::uint64_t fanInconsistentFormula(int n, int m);

struct Metric {
  enum class Kind { kSigma, kSigmaCov1, kInconsistent };
  Kind kind = Kind::kSigma;
  int m = 1;
};
enum class Direction { kMin, kMax };

// Accepts "sigma", "sigmaCov1", "inconsistent(m)" or "inconsistent:m".
// Throws Error(kUnknownMetric).
Metric parseMetric(std::string_view text);
std::string metricName(const Metric& metric);

struct ExtremalHit {
  std::size_t index = 0;  // into the catalog
  std::string key;
  std::int64_t value = 0;
};

// All optimal entries, sorted by canonical key.
std::vector<ExtremalHit> findExtremal(const Catalog& c, const Metric& metric,
                                      Direction direction, int jobs = 1);

}  // namespace semlat
