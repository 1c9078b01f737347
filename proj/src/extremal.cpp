#include "semlat/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

#include "parallel.hpp"
#include "semlat/equations.hpp"

namespace semlat {

namespace {

using Clock = std::chrono::steady_clock;

std::string keyOf(const CatalogEntry& e) { return keyToHex(e.canonical.key); }

// Per-n outcome folded into the report status.
struct Outcome {
  bool any_verified = false;
  bool any_counterexample = false;

  void add(VerificationStatus s) {
    any_verified = any_verified || s == VerificationStatus::kVerified;
    any_counterexample = any_counterexample || s == VerificationStatus::kCounterexampleFound;
  }
  VerificationStatus status() const {
    if (any_counterexample) return VerificationStatus::kCounterexampleFound;
    return any_verified ? VerificationStatus::kVerified : VerificationStatus::kSkipped;
  }
};

VerificationReport startReport(std::string claim, std::span<const Catalog> catalogs) {
  VerificationReport r;
  r.claim = std::move(claim);
  if (!catalogs.empty()) {
    r.nLo = catalogs.front().n;
    r.nHi = catalogs.back().n;
  }
  for (const Catalog& c : catalogs) {
    if (!c.complete) {
      throw Error(ErrorCode::kInvalidArgument,
                  "catalog for n=" + std::to_string(c.n) + " is not exhaustive");
    }
  }
  return r;
}

void finish(VerificationReport& r, const Outcome& o, Clock::time_point start) {
  r.status = o.status();
  std::stable_sort(r.witnesses.begin(), r.witnesses.end(),
                   [](const Witness& a, const Witness& b) {
                     return std::tie(a.n, a.key) < std::tie(b.n, b.key);
                   });
  r.elapsedSeconds = std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename T, typename Fn>
std::vector<T> mapEntries(const Catalog& c, int jobs, Fn&& fn) {
  std::vector<T> out(c.size());
  detail::parallelFor(c.size(), jobs, [&](std::size_t i) { out[i] = fn(c.entries[i]); });
  return out;
}

// Failure descriptions per entry; empty means the entry passed.
template <typename Fn>
std::size_t collectFailures(const Catalog& c, int jobs, Fn&& check,
                            VerificationReport& report) {
  auto failures = mapEntries<std::vector<std::string>>(c, jobs, check);
  std::size_t failing = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (failures[i].empty()) continue;
    ++failing;
    std::string joined;
    for (const auto& f : failures[i]) joined += (joined.empty() ? "" : "; ") + f;
    report.witnesses.push_back(Witness{keyOf(c.entries[i]), c.n, joined});
  }
  return failing;
}

std::string setToString(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.elements()) {
    out += (first ? "" : ",") + std::to_string(int(e));
    first = false;
  }
  return out + "}";
}

}  // namespace

const char* statusName(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::kVerified: return "Verified";
    case VerificationStatus::kCounterexampleFound: return "CounterexampleFound";
    case VerificationStatus::kSkipped: return "Skipped";
  }
  return "Unknown";
}

std::int64_t fanSigmaCov1(int n) {
  const std::int64_t k = n - 2;
  return std::int64_t(n) * n + n + k * (k * k + 4);
}

std::uint64_t chainInconsistentFormula(int n, int m) {
  return ((std::uint64_t{1} << m) - 1) * std::uint64_t(n) * std::uint64_t(n - 1) / 2;
}

std::uint64_t fanInconsistentFormula(int n, int m) {
  return ((std::uint64_t{1} << m) - 1) * std::uint64_t(n * n - 3 * n + 3);
}

StatsRecord profile(const Semilattice& input, const ProfileOptions& options) {
  const CanonicalForm form = canonicalize(input);
  const Semilattice& S = form.relabeled;
  const int n = S.order();
  StatsRecord r;
  r.canonicalKey = keyToHex(form.key);
  r.n = n;
  for (int m = 1; m <= options.maxM; ++m) r.inconsistentCount.push_back(inconsistentCount(S, m));
  for (int s = 0; s < n; ++s) r.cov1Vector.push_back(cov1Brute(S, s).size());
  for (auto v : r.cov1Vector) r.sigmaCov1 += v;
  r.sigma = r.sigmaCov1 + std::int64_t(n) * n;
  const auto hist = solutionSetHistogram(S);
  r.histogramSummary.numRealizedSolutionSets = hist.size();
  for (const auto& [set, count] : hist) {
    if (set.empty()) r.histogramSummary.emptyBucketSize = count;
    else r.histogramSummary.maxBucketSize = std::max(r.histogramSummary.maxBucketSize, count);
  }
  r.atomCount = atoms(S).size();
  r.coatomCount = coatoms(S).size();
  return r;
}

std::vector<StatsRecord> profileCatalog(const Catalog& c, const ProfileOptions& options,
                                        int jobs) {
  return mapEntries<StatsRecord>(
      c, jobs, [&](const CatalogEntry& e) { return profile(e.canonical.relabeled, options); });
}

VerificationReport verifyTheorem1(std::span<const Catalog> catalogs, int m, int jobs) {
  const auto start = Clock::now();
  VerificationReport report = startReport("t1", catalogs);
  report.claim = "t1 (m=" + std::to_string(m) + ")";
  Outcome outcome;
  for (const Catalog& c : catalogs) {
    const int n = c.n;
    if (n < 3) {
      report.notes.push_back("n=" + std::to_string(n) + ": skipped (fan needs n >= 3)");
      outcome.add(VerificationStatus::kSkipped);
      continue;
    }
    const std::uint64_t chain = inconsistentCount(makeChain(n), m);
    const std::uint64_t fan = inconsistentCount(makeFan(n), m);
    const std::uint64_t chain_formula = chainInconsistentFormula(n, m);
    const std::uint64_t fan_formula = fanInconsistentFormula(n, m);
    bool ok = chain == chain_formula && fan == fan_formula;
    ok = ok && c.find(canonicalize(makeChain(n)).key) && c.find(canonicalize(makeFan(n)).key);

    const auto counts = mapEntries<std::uint64_t>(c, jobs, [&](const CatalogEntry& e) {
      return inconsistentCount(e.canonical.relabeled, m);
    });
    const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const bool violates = counts[i] < chain || counts[i] > fan;
      if (violates) ok = false;
      if (violates || counts[i] == *lo || counts[i] == *hi) {
        report.witnesses.push_back(Witness{
            keyOf(c.entries[i]), n,
            std::string(violates ? "VIOLATION " : "") + "inconsistent=" +
                std::to_string(counts[i]) + (counts[i] == *lo ? " (min)" : "") +
                (counts[i] == *hi ? " (max)" : "")});
      }
    }
    std::ostringstream note;
    note << "n=" << n << " m=" << m << ": lower bound " << chain << " (formula "
         << chain_formula << "), upper bound " << fan << " (formula " << fan_formula
         << "), catalog range [" << *lo << "," << *hi << "] over " << c.size()
         << " semilattices";
    report.notes.push_back(note.str());
    outcome.add(ok ? VerificationStatus::kVerified : VerificationStatus::kCounterexampleFound);
  }
  finish(report, outcome, start);
  return report;
}

VerificationReport verifyTheorem2(std::span<const Catalog> catalogs, int jobs) {
  const auto start = Clock::now();
  VerificationReport report = startReport("t2", catalogs);
  Outcome outcome;
  for (const Catalog& c : catalogs) {
    const int n = c.n;
    if (n < 4) {
      report.notes.push_back("n=" + std::to_string(n) + ": skipped (hypothesis n >= 4)");
      outcome.add(VerificationStatus::kSkipped);
      continue;
    }
    const auto values = mapEntries<std::int64_t>(
        c, jobs, [](const CatalogEntry& e) { return sigmaCov1(e.canonical.relabeled); });
    const std::int64_t max = *std::max_element(values.begin(), values.end());
    const std::int64_t formula = fanSigmaCov1(n);
    const auto fan_index = c.find(canonicalize(makeFan(n)).key);
    bool fan_attains = fan_index && values[*fan_index] == max;
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (values[i] != max) continue;
      ++argmax;
      report.witnesses.push_back(Witness{
          keyOf(c.entries[i]), n,
          "sigmaCov1=" + std::to_string(values[i]) +
              (fan_index && *fan_index == i ? " (fan)" : "")});
    }
    const bool ok = fan_attains && max == formula;
    std::ostringstream note;
    note << "n=" << n << ": max sigmaCov1 " << max << " (formula " << formula << "), "
         << argmax << " maximizer(s), fan attains: " << (fan_attains ? "yes" : "no");
    report.notes.push_back(note.str());
    outcome.add(ok ? VerificationStatus::kVerified : VerificationStatus::kCounterexampleFound);
  }
  finish(report, outcome, start);
  return report;
}

VerificationReport verifyTheorem2Bounds(std::span<const Catalog> catalogs, int jobs) {
  const auto start = Clock::now();
  VerificationReport report = startReport("t2-bounds", catalogs);
  Outcome outcome;
  for (const Catalog& c : catalogs) {
    const int n = c.n;
    if (n < 4) {
      report.notes.push_back("n=" + std::to_string(n) + ": skipped (hypothesis n >= 4)");
      outcome.add(VerificationStatus::kSkipped);
      continue;
    }
    std::size_t multi_atom = 0, unique_atom = 0, branching = 0;
    for (const auto& e : c.entries) {
      const Semilattice& S = e.canonical.relabeled;
      const ElementSet at = atoms(S);
      if (at.size() >= 2) ++multi_atom;
      else if (S.upperCovers(at.elements().front()).size() >= 2) ++branching, ++unique_atom;
      else ++unique_atom;
    }
    const std::int64_t k = n - 2;
    const std::size_t failing = collectFailures(c, jobs, [&](const CatalogEntry& e) {
      std::vector<std::string> f;
      const Semilattice& S = e.canonical.relabeled;
      const int bottom = S.bottom();
      const int top = S.top();
      const auto cov = cov1ByRecurrence(S);
      for (int s = 0; s < n; ++s) {
        if (s != top && S.upSet(s).size() < 2) f.push_back("|up(" + std::to_string(s) + ")|<2");
      }
      const ElementSet at = atoms(S);
      if (at.size() >= 2) {
        for (Element a : at.elements()) {
          if (perpRelative(S, bottom, a).size() < 2) {
            f.push_back("|perp(" + std::to_string(int(a)) + ")|<2");
          }
        }
        for (int s = 0; s < n; ++s) {
          if (s == bottom || s == top) continue;
          if (cov[s].size() > k * k + 4) {
            f.push_back("|cov1(" + std::to_string(s) + ")|=" + std::to_string(cov[s].size()) +
                        " > (n-2)^2+4");
          }
        }
        return f;
      }
      const int a = at.elements().front();
      for (int s = 0; s < n; ++s) {
        if (s == bottom || s == a) continue;
        if (cov[s].size() > k * k + 2) {
          f.push_back("|cov1(" + std::to_string(s) + ")|=" + std::to_string(cov[s].size()) +
                      " > (n-2)^2+2");
        }
      }
      const ElementSet above = S.upperCovers(a);
      if (above.size() < 2) return f;
      for (Element ai : above.elements()) {
        const int up = S.upSet(ai).size();
        const int perp = perpRelative(S, a, ai).size();
        const std::string tag = "a_i=" + std::to_string(int(ai)) + ": ";
        if (up < 2 || up > n - 3) f.push_back(tag + "|up|=" + std::to_string(up));
        if (perp < 2 || perp > n - 3) f.push_back(tag + "|perp_a|=" + std::to_string(perp));
        if (up + perp > n - 1) f.push_back(tag + "|up|+|perp_a| > n-1");
        if (cov[ai].size() != up * up + perp * perp + 1) {
          f.push_back(tag + "|cov1| != |up|^2+|perp_a|^2+1");
        }
      }
      return f;
    }, report);
    std::ostringstream note;
    note << "n=" << n << ": " << multi_atom << " with >=2 atoms, " << unique_atom
         << " with a unique atom (" << branching << " branching above it), " << failing
         << " violation(s)";
    report.notes.push_back(note.str());
    outcome.add(failing == 0 ? VerificationStatus::kVerified
                             : VerificationStatus::kCounterexampleFound);
  }
  finish(report, outcome, start);
  return report;
}

VerificationReport verifyTheorem4(std::span<const Catalog> catalogs, int jobs) {
  const auto start = Clock::now();
  VerificationReport report = startReport("t4", catalogs);
  Outcome outcome;
  for (const Catalog& c : catalogs) {
    const int n = c.n;
    VerificationReport scratch;
    const std::size_t failing = collectFailures(c, jobs, [&](const CatalogEntry& e) {
      std::vector<std::string> f;
      const auto hist = solutionSetHistogram(e.canonical.relabeled);
      std::uint64_t empty = 0;
      if (auto it = hist.find(ElementSet()); it != hist.end()) empty = it->second;
      for (const auto& [set, count] : hist) {
        if (count > empty) {
          f.push_back("|Eq(Y=" + setToString(set) + ")|=" + std::to_string(count) +
                      " > |Eq(empty)|=" + std::to_string(empty));
        }
      }
      return f;
    }, n >= 6 ? report : scratch);
    std::ostringstream note;
    if (n < 6) {
      note << "n=" << n << ": skipped (hypothesis n >= 6); informational: " << failing
           << " of " << c.size() << " semilattices have a bucket larger than the empty one";
      outcome.add(VerificationStatus::kSkipped);
    } else {
      note << "n=" << n << ": " << c.size() << " semilattices, " << failing
           << " violation(s)";
      outcome.add(failing == 0 ? VerificationStatus::kVerified
                               : VerificationStatus::kCounterexampleFound);
    }
    report.notes.push_back(note.str());
  }
  finish(report, outcome, start);
  return report;
}

VerificationReport verifyConjecture(std::span<const Catalog> catalogs, int jobs) {
  const auto start = Clock::now();
  VerificationReport report = startReport("conjecture", catalogs);
  Outcome outcome;
  for (const Catalog& c : catalogs) {
    const int n = c.n;
    if (n < 4) {
      report.notes.push_back("n=" + std::to_string(n) + ": skipped (checked for n >= 4)");
      outcome.add(VerificationStatus::kSkipped);
      continue;
    }
    struct Row {
      std::int64_t sigma_cov1;
      int coatoms;
    };
    const auto rows = mapEntries<Row>(c, jobs, [](const CatalogEntry& e) {
      const Semilattice& S = e.canonical.relabeled;
      return Row{sigmaCov1(S), coatoms(S).size()};
    });
    std::int64_t min = std::numeric_limits<std::int64_t>::max();
    for (const Row& r : rows) min = std::min(min, r.sigma_cov1);
    const std::int64_t nn = std::int64_t(n) * n;
    std::size_t minimizers = 0, unique_coatom = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (rows[i].sigma_cov1 != min) continue;
      ++minimizers;
      if (rows[i].coatoms == 1) ++unique_coatom;
      report.witnesses.push_back(Witness{
          keyOf(c.entries[i]), n,
          "sigma=" + std::to_string(min + nn) + " sigmaCov1=" + std::to_string(min) +
              " coatoms=" + std::to_string(rows[i].coatoms)});
    }
    std::ostringstream note;
    note << "n=" << n << ": min sigma " << min + nn << " (sigmaCov1 " << min << "), "
         << minimizers << " minimizer(s), " << unique_coatom << " with a unique co-atom";
    report.notes.push_back(note.str());
    outcome.add(unique_coatom > 0 ? VerificationStatus::kVerified
                                  : VerificationStatus::kCounterexampleFound);
  }
  finish(report, outcome, start);
  return report;
}

VerificationReport verifyCovLemmas(std::span<const Catalog> catalogs, int jobs) {
  const auto start = Clock::now();
  VerificationReport report = startReport("lemmas", catalogs);
  Outcome outcome;
  for (const Catalog& c : catalogs) {
    const int n = c.n;
    const std::size_t failing = collectFailures(c, jobs, [&](const CatalogEntry& e) {
      std::vector<std::string> f;
      const Semilattice& S = e.canonical.relabeled;
      const auto rec = cov1ByRecurrence(S);
      std::vector<PairSet> brute;
      for (int s = 0; s < n; ++s) brute.push_back(cov1Brute(S, s));
      for (int s = 0; s < n; ++s) {
        const std::string tag = "s=" + std::to_string(s) + ": ";
        if (!(rec[s] == brute[s])) f.push_back(tag + "recurrence != brute force");
        if (cov2Size(S, s) != n) f.push_back(tag + "|cov2| != n");
        for (int t = 0; t < n; ++t) {
          // Larger elements satisfy fewer equations: s <= t gives cov1(t) in cov1(s).
          if (S.leq(s, t) && !brute[t].subsetOf(brute[s])) {
            f.push_back(tag + "cov1(" + std::to_string(t) + ") not contained in cov1(s)");
          }
        }
      }
      for (Element a : atoms(S).elements()) {
        const int up = S.upSet(a).size();
        if (brute[a].size() != up * up + (n - up) * (n - up)) {
          f.push_back("atom " + std::to_string(int(a)) + ": |cov1| != |up|^2+(n-|up|)^2");
        }
      }
      if (atoms(S).size() == 1) {
        const Element a = atoms(S).elements().front();
        if (brute[a].size() != (n - 1) * (n - 1) + 1) {
          f.push_back("unique atom: |cov1| != (n-1)^2+1");
        }
      }
      if (brute[S.bottom()].size() != n * n) f.push_back("|cov1(0)| != n^2");
      if (brute[S.top()].size() != n) f.push_back("|cov1(1)| != n");
      if (sigmaByEquations(S) != sigma(S)) f.push_back("double counting of sigma fails");
      return f;
    }, report);
    report.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(c.size()) +
                           " semilattices, " + std::to_string(failing) + " violation(s)");
    outcome.add(failing == 0 ? VerificationStatus::kVerified
                             : VerificationStatus::kCounterexampleFound);
  }
  finish(report, outcome, start);
  return report;
}

Metric parseMetric(std::string_view text) {
  if (text == "sigma") return Metric{Metric::Kind::kSigma, 1};
  if (text == "sigmaCov1") return Metric{Metric::Kind::kSigmaCov1, 1};
  for (std::string_view prefix : {"inconsistent(", "inconsistent:"}) {
    if (text.substr(0, prefix.size()) != prefix) continue;
    std::string_view rest = text.substr(prefix.size());
    if (prefix.back() == '(') {
      if (rest.empty() || rest.back() != ')') break;
      rest.remove_suffix(1);
    }
    if (rest.size() == 1 && rest[0] >= '1' && rest[0] <= '0' + kMaxVariables) {
      return Metric{Metric::Kind::kInconsistent, rest[0] - '0'};
    }
    break;
  }
  throw Error(ErrorCode::kUnknownMetric, "UnknownMetric: '" + std::string(text) + "'");
}

std::string metricName(const Metric& metric) {
  switch (metric.kind) {
    case Metric::Kind::kSigma: return "sigma";
    case Metric::Kind::kSigmaCov1: return "sigmaCov1";
    case Metric::Kind::kInconsistent: return "inconsistent(" + std::to_string(metric.m) + ")";
  }
  return "unknown";
}

std::vector<ExtremalHit> findExtremal(const Catalog& c, const Metric& metric,
                                      Direction direction, int jobs) {
  const auto values = mapEntries<std::int64_t>(c, jobs, [&](const CatalogEntry& e) {
    const Semilattice& S = e.canonical.relabeled;
    switch (metric.kind) {
      case Metric::Kind::kSigma: return sigma(S);
      case Metric::Kind::kSigmaCov1: return sigmaCov1(S);
      case Metric::Kind::kInconsistent:
        return static_cast<std::int64_t>(inconsistentCount(S, metric.m));
    }
    return std::int64_t{0};
  });
  std::vector<ExtremalHit> hits;
  if (values.empty()) return hits;
  const std::int64_t best = direction == Direction::kMin
                                ? *std::min_element(values.begin(), values.end())
                                : *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (values[i] == best) hits.push_back(ExtremalHit{i, keyOf(c.entries[i]), best});
  }
  return hits;
}

}  // namespace semlat
