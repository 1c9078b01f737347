#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "semlat/extremal.hpp"
#include "semlat/semilattice.hpp"

namespace semlat {

enum class OutputFormat { kJson, kCsv, kText };

// Throws Error(kInvalidArgument).
OutputFormat parseFormat(std::string_view text);

// CSV columns, in order:
//   canonicalKey,n,inconsistentCount_m1..inconsistentCount_mK,cov1Vector,
//   sigmaCov1,sigma,emptyBucketSize,maxBucketSize,numRealizedSolutionSets,
//   coatomCount,atomCount
// cov1Vector is space-separated inside its column.
std::string formatStats(const std::vector<StatsRecord>& records, OutputFormat format);

// Elapsed time is omitted unless `timing` is set, so output is reproducible.
std::string formatReport(const VerificationReport& report, bool timing);

std::string formatExtremal(int n, const Metric& metric, Direction direction,
                           const std::vector<ExtremalHit>& hits);

// Element names default to decimal indices.
std::string describeSemilattice(const Semilattice& S,
                                const std::vector<std::string>& names = {});
std::vector<std::string> chainNames(int n);
std::vector<std::string> fanNames(int n);

}  // namespace semlat
