#include "semlat/formats.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "semlat/canonical.hpp"
#include "semlat/equations.hpp"

namespace semlat {

namespace {

std::string joinInts(const auto& values, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (auto v : values) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

std::string nameSet(ElementSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.elements()) {
    out += (first ? "" : ",") + names[e];
    first = false;
  }
  return out + "}";
}

}  // namespace

OutputFormat parseFormat(std::string_view text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "text") return OutputFormat::kText;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown format '" + std::string(text) + "' (json|csv|text)");
}

std::string formatStats(const std::vector<StatsRecord>& records, OutputFormat format) {
  std::ostringstream os;
  const std::size_t max_m = records.empty() ? 0 : records.front().inconsistentCount.size();
  switch (format) {
    case OutputFormat::kJson: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json inc = nlohmann::ordered_json::object();
        for (std::size_t m = 0; m < r.inconsistentCount.size(); ++m) {
          inc[std::to_string(m + 1)] = r.inconsistentCount[m];
        }
        nlohmann::ordered_json j;
        j["canonicalKey"] = r.canonicalKey;
        j["n"] = r.n;
        j["inconsistentCount"] = inc;
        j["cov1Vector"] = r.cov1Vector;
        j["sigmaCov1"] = r.sigmaCov1;
        j["sigma"] = r.sigma;
        j["histogramSummary"] = {
            {"emptyBucketSize", r.histogramSummary.emptyBucketSize},
            {"maxBucketSize", r.histogramSummary.maxBucketSize},
            {"numRealizedSolutionSets", r.histogramSummary.numRealizedSolutionSets}};
        j["coatomCount"] = r.coatomCount;
        j["atomCount"] = r.atomCount;
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      os << "canonicalKey,n";
      for (std::size_t m = 1; m <= max_m; ++m) os << ",inconsistentCount_m" << m;
      os << ",cov1Vector,sigmaCov1,sigma,emptyBucketSize,maxBucketSize,"
            "numRealizedSolutionSets,coatomCount,atomCount\n";
      for (const auto& r : records) {
        os << r.canonicalKey << ',' << r.n;
        for (auto v : r.inconsistentCount) os << ',' << v;
        os << ',' << joinInts(r.cov1Vector, " ") << ',' << r.sigmaCov1 << ',' << r.sigma
           << ',' << r.histogramSummary.emptyBucketSize << ','
           << r.histogramSummary.maxBucketSize << ','
           << r.histogramSummary.numRealizedSolutionSets << ',' << r.coatomCount << ','
           << r.atomCount << '\n';
      }
      break;
    }
    case OutputFormat::kText: {
      for (const auto& r : records) {
        os << r.canonicalKey << "  n=" << r.n;
        for (std::size_t m = 0; m < r.inconsistentCount.size(); ++m) {
          os << " inc" << m + 1 << '=' << r.inconsistentCount[m];
        }
        os << " cov1=(" << joinInts(r.cov1Vector, ",") << ") sigmaCov1=" << r.sigmaCov1
           << " sigma=" << r.sigma << " empty=" << r.histogramSummary.emptyBucketSize
           << " maxNonempty=" << r.histogramSummary.maxBucketSize
           << " sets=" << r.histogramSummary.numRealizedSolutionSets
           << " atoms=" << r.atomCount << " coatoms=" << r.coatomCount << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string formatReport(const VerificationReport& report, bool timing) {
  std::ostringstream os;
  os << "claim " << report.claim << " n=" << report.nLo << ".." << report.nHi << ": "
     << statusName(report.status);
  if (timing) os << " (" << std::fixed << std::setprecision(3) << report.elapsedSeconds << " s)";
  os << '\n';
  for (const auto& note : report.notes) os << "  " << note << '\n';
  for (const auto& w : report.witnesses) {
    os << "    witness n=" << w.n << ' ' << w.key << ' ' << w.detail << '\n';
  }
  return os.str();
}

std::string formatExtremal(int n, const Metric& metric, Direction direction,
                           const std::vector<ExtremalHit>& hits) {
  std::ostringstream os;
  os << "n=" << n << " metric=" << metricName(metric)
     << " direction=" << (direction == Direction::kMin ? "min" : "max")
     << " ties=" << hits.size() << '\n';
  for (const auto& h : hits) {
    os << "  #" << h.index << ' ' << h.key << " value=" << h.value << '\n';
  }
  return os.str();
}

std::vector<std::string> chainNames(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

std::vector<std::string> fanNames(int n) {
  std::vector<std::string> names{"0"};
  for (int i = 1; i <= n - 2; ++i) names.push_back("a" + std::to_string(i));
  names.push_back("1");
  return names;
}

std::string describeSemilattice(const Semilattice& S, const std::vector<std::string>& given) {
  const int n = S.order();
  std::vector<std::string> names = given;
  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  std::ostringstream os;
  os << "order " << n << '\n';
  os << "key " << keyToHex(canonicalize(S).key) << '\n';
  os << "bottom " << names[S.bottom()] << " top " << names[S.top()] << '\n';
  os << "covers";
  for (Element s : S.linearExtension()) {
    for (Element t : S.upperCovers(s).elements()) os << ' ' << names[s] << '<' << names[t];
  }
  os << '\n';
  os << "atoms " << nameSet(atoms(S), names) << '\n';
  os << "coatoms " << nameSet(coatoms(S), names) << '\n';
  os << "cov1";
  std::int64_t total = 0;
  for (int s = 0; s < n; ++s) {
    const int size = cov1Brute(S, s).size();
    total += size;
    os << ' ' << names[s] << '=' << size;
  }
  os << '\n';
  os << "sigmaCov1 " << total << '\n';
  os << "sigma " << total + std::int64_t(n) * n << '\n';
  return os.str();
}

}  // namespace semlat
